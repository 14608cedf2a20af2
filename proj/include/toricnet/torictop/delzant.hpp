// Copyright 2026 The toricnet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TORICNET_TORICTOP_DELZANT_HPP
#define TORICNET_TORICTOP_DELZANT_HPP

#include <map>
#include <numeric>
#include <string>
#include <vector>

#include <toricnet/core/errors.hpp>
#include <toricnet/core/matrix.hpp>
#include <toricnet/torictop/quasitoric.hpp>

namespace toricnet::torictop {

inline constexpr unsigned delzant_max_facets = 12;

/// {x : <a_i, x> >= lambda_i}; normals are the rows of `normals`.
struct DelzantPolytope {
    IntMatrix normals;  // m x n
    std::vector<Rational> offsets;
};

struct DelzantResult {
    QuasitoricData data;
    /// u = (2 pi)^{-1}[omega] = -sum lambda_i v_i.
    std::vector<Rational> symplectic_class;
    std::vector<std::vector<Rational>> vertices;
};

namespace detail {
inline std::string render_point(const std::vector<Rational>& x) {
    std::string s = "(";
    for (std::size_t i = 0; i < x.size(); ++i) s += (i ? "," : "") + x[i].str();
    return s + ")";
}

inline Rational dot(const IntMatrix& a, std::size_t row, const std::vector<Rational>& x) {
    Rational s;
    for (std::size_t j = 0; j < x.size(); ++j) s += Rational(a(row, j)) * x[j];
    return s;
}
}  // namespace detail

/// Vertex enumeration over n-subsets of facets; checks primitivity,
/// boundedness, simplicity, irredundancy and unimodularity at every vertex.
inline DelzantResult delzant_to_quasitoric(const DelzantPolytope& p) {
    std::size_t m = p.normals.rows(), n = p.normals.cols();
    if (m != p.offsets.size()) throw InputError("normals and offsets differ in length");
    if (n == 0 || m <= n) throw InputError("need more facets than dimensions");
    if (m > delzant_max_facets) throw InputError("vertex enumeration limited to 12 facets");
    for (std::size_t i = 0; i < m; ++i) {
        BigInt g = 0;
        for (std::size_t j = 0; j < n; ++j) g = gcd(g, p.normals(i, j));
        if (g != 1) throw InputError("normal " + std::to_string(i + 1) + " is not primitive");
    }

    std::map<std::vector<Rational>, Face> tight;
    std::vector<std::size_t> subset(n);
    std::iota(subset.begin(), subset.end(), 0);
    auto advance = [&]() {
        for (std::size_t k = n; k-- > 0;)
            if (subset[k] < m - n + k) {
                ++subset[k];
                for (std::size_t j = k + 1; j < n; ++j) subset[j] = subset[j - 1] + 1;
                return true;
            }
        return false;
    };
    do {
        RatMatrix a(n, n);
        std::vector<Rational> b(n);
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = 0; c < n; ++c) a(r, c) = Rational(p.normals(subset[r], c));
            b[r] = p.offsets[subset[r]];
        }
        if (rank(a) < n) continue;
        auto x = solve(a, b);
        bool feasible = true;
        Face t;
        for (std::size_t i = 0; i < m && feasible; ++i) {
            Rational s = detail::dot(p.normals, i, *x);
            if (s < p.offsets[i]) feasible = false;
            else if (s == p.offsets[i]) t.push_back(static_cast<unsigned>(i));
        }
        if (feasible) tight.emplace(*x, t);
    } while (advance());

    if (tight.empty()) throw DomainRefusal("Unbounded", "polyhedron has no vertices (empty or unbounded)");
    std::vector<Face> facets;
    DelzantResult result;
    VertexMask used = 0;
    for (const auto& [x, t] : tight) {
        if (t.size() != n) throw DomainRefusal("NonSimple", "vertex " + detail::render_point(x) + " lies on " + std::to_string(t.size()) + " facets");
        // Every edge ray from x must hit another facet.
        RatMatrix a(n, n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) a(r, c) = Rational(p.normals(t[r], c));
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<Rational> rhs(n);
            rhs[j] = Rational(1);
            auto d = *solve(a, rhs);
            bool bounded = false;
            for (std::size_t i = 0; i < m && !bounded; ++i)
                if (detail::dot(p.normals, i, d).sign() < 0) bounded = true;
            if (!bounded) throw DomainRefusal("Unbounded", "edge ray from vertex " + detail::render_point(x) + " is unbounded");
        }
        BigInt det = facet_minor(p.normals.transpose(), t);
        if (abs(det) != 1)
            throw DomainRefusal("NonDelzant", "vertex " + detail::render_point(x) + " has normal determinant " + det.get_str());
        facets.push_back(t);
        used |= mask_of(t);
        result.vertices.push_back(x);
    }
    for (std::size_t i = 0; i < m; ++i)
        if (!(used & (VertexMask{1} << i))) throw DomainRefusal("Redundant", "inequality " + std::to_string(i + 1) + " supports no vertex");

    result.data = {SimplicialComplex(static_cast<unsigned>(m), facets), p.normals.transpose(), {}, false};
    for (const auto& l : p.offsets) result.symplectic_class.push_back(-l);
    auto rep = validate_quasitoric(result.data);
    if (!rep.valid) throw std::logic_error("Delzant polytope produced invalid quasitoric data: " + rep.violations.front().check);
    return result;
}

}  // namespace toricnet::torictop

#endif  // TORICNET_TORICTOP_DELZANT_HPP
