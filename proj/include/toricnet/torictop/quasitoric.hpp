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

#ifndef TORICNET_TORICTOP_QUASITORIC_HPP
#define TORICNET_TORICTOP_QUASITORIC_HPP

#include <deque>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <toricnet/core/errors.hpp>
#include <toricnet/core/linear_combination.hpp>
#include <toricnet/core/matrix.hpp>
#include <toricnet/torictop/simplicial.hpp>

namespace toricnet::torictop {

/// Commutative monomials in v_1..v_m; the key is the sorted multiset of
/// 0-based vertex indices and every v_i has degree 1.
struct VertexPolicy {
    using key_type = std::vector<unsigned>;
    static key_type unit() { return {}; }
    static key_type multiply(const key_type& a, const key_type& b) {
        key_type r;
        r.reserve(a.size() + b.size());
        std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
        return r;
    }
    static unsigned degree(const key_type& k) { return static_cast<unsigned>(k.size()); }
    static std::string render(const key_type& k) {
        if (k.empty()) return "1";
        std::string s;
        for (std::size_t i = 0; i < k.size();) {
            std::size_t j = i;
            while (j < k.size() && k[j] == k[i]) ++j;
            if (!s.empty()) s += "*";
            s += "v" + std::to_string(k[i] + 1);
            if (j - i > 1) s += "^" + std::to_string(j - i);
            i = j;
        }
        return s;
    }
};

using VPoly = LinComb<VertexPolicy>;

inline VPoly v(unsigned i) { return VPoly::basis({i}); }

/// Monomial v^a from an exponent vector.
inline VPoly v_monomial(const std::vector<unsigned>& exponents) {
    std::vector<unsigned> key;
    for (unsigned i = 0; i < exponents.size(); ++i) key.insert(key.end(), exponents[i], i);
    return VPoly::basis(key);
}

/// Linear form sum c_i v_i.
inline VPoly linear_form(const std::vector<Rational>& c) {
    VPoly out;
    for (unsigned i = 0; i < c.size(); ++i) out.add_term({i}, c[i]);
    return out;
}

struct QuasitoricData {
    SimplicialComplex complex;
    IntMatrix lambda;  // n x m
    Face base_facet;   // empty: lexicographically least facet
    bool orientation_flip = false;

    unsigned dimension() const { return static_cast<unsigned>(lambda.rows()); }
    unsigned vertex_count() const { return complex.vertex_count(); }
};

inline BigInt facet_minor(const IntMatrix& lambda, const Face& f) {
    std::vector<std::size_t> cols(f.begin(), f.end());
    return ff_determinant(lambda.select_columns(cols));
}

struct Violation {
    std::string check;
    Face face;
    std::string detail;
};

struct ValidityReport {
    bool valid = true;
    std::vector<std::string> checks_run;
    std::vector<Violation> violations;
    /// Orientation sign of each facet (in facet order) when the complex is an
    /// orientable pseudomanifold: sum o(s)[s] is a cycle.
    std::vector<int> orientation;

    void fail(const std::string& check, Face face, std::string detail) {
        valid = false;
        violations.push_back({check, std::move(face), std::move(detail)});
    }
};

namespace detail {
/// Propagates orientations across ridges from facet `start`. Returns nothing
/// if the signs conflict or the facet graph is disconnected.
inline std::optional<std::vector<int>> orient(const SimplicialComplex& k, std::size_t start) {
    const auto& facets = k.facets();
    std::vector<int> o(facets.size(), 0);
    auto ridges = k.ridges();
    std::vector<std::vector<std::pair<std::size_t, Face>>> adj(facets.size());
    for (const auto& [r, fs] : ridges)
        if (fs.size() == 2) {
            adj[fs[0]].push_back({fs[1], r});
            adj[fs[1]].push_back({fs[0], r});
        }
    // Sign of ridge r in the boundary of sorted facet f: (-1)^(position of the dropped vertex).
    auto boundary_sign = [&](std::size_t f, const Face& r) {
        const auto& face = facets[f];
        std::size_t pos = 0;
        while (pos < r.size() && face[pos] == r[pos]) ++pos;
        return pos % 2 == 0 ? 1 : -1;
    };
    std::deque<std::size_t> queue{start};
    o[start] = 1;
    while (!queue.empty()) {
        std::size_t f = queue.front();
        queue.pop_front();
        for (const auto& [g, r] : adj[f]) {
            int want = -o[f] * boundary_sign(f, r) * boundary_sign(g, r);
            if (o[g] == 0) {
                o[g] = want;
                queue.push_back(g);
            } else if (o[g] != want) {
                return std::nullopt;
            }
        }
    }
    for (int s : o)
        if (s == 0) return std::nullopt;
    return o;
}
}  // namespace detail

/// Sphere battery (pseudomanifold, connectivity, orientability, Euler
/// characteristic) and unimodularity of every facet minor.
inline ValidityReport validate_quasitoric(const SimplicialComplex& k, const IntMatrix& lambda) {
    ValidityReport rep;
    unsigned n = static_cast<unsigned>(lambda.rows());
    unsigned m = k.vertex_count();
    const auto& facets = k.facets();

    rep.checks_run.push_back("dimensions");
    if (lambda.cols() != m) rep.fail("dimensions", {}, "lambda has " + std::to_string(lambda.cols()) + " columns, expected " + std::to_string(m));
    if (n == 0) rep.fail("dimensions", {}, "lambda has no rows");
    if (facets.empty()) rep.fail("dimensions", {}, "no facets");
    if (!rep.valid) return rep;

    rep.checks_run.push_back("antichain");
    for (std::size_t i = 0; i < facets.size(); ++i)
        for (std::size_t j = 0; j < facets.size(); ++j)
            if (i != j && (mask_of(facets[i]) & mask_of(facets[j])) == mask_of(facets[i]))
                rep.fail("antichain", facets[i], "contained in facet " + render_face(facets[j]));

    rep.checks_run.push_back("vertex_set");
    for (unsigned vtx = 0; vtx < m; ++vtx)
        if (!k.is_face(VertexMask{1} << vtx)) rep.fail("vertex_set", {vtx}, "vertex " + std::to_string(vtx + 1) + " lies in no facet");

    rep.checks_run.push_back("pure");
    for (const auto& f : facets)
        if (f.size() != n) rep.fail("pure", f, "facet has " + std::to_string(f.size()) + " vertices, expected " + std::to_string(n));
    if (!rep.valid) return rep;

    rep.checks_run.push_back("pseudomanifold");
    for (const auto& [r, fs] : k.ridges())
        if (fs.size() != 2) rep.fail("pseudomanifold", r, "ridge lies in " + std::to_string(fs.size()) + " facets");

    rep.checks_run.push_back("euler_characteristic");
    long chi = k.euler_characteristic();
    long expected = n % 2 == 1 ? 2 : 0;
    if (chi != expected)
        rep.fail("euler_characteristic", {}, "chi = " + std::to_string(chi) + ", expected " + std::to_string(expected));

    if (rep.valid) {
        rep.checks_run.push_back("connected_orientable");
        auto o = detail::orient(k, 0);
        if (o) rep.orientation = *o;
        else rep.fail("connected_orientable", {}, "facet graph disconnected or orientation inconsistent");
    }

    rep.checks_run.push_back("unimodular");
    for (const auto& f : facets) {
        BigInt d = facet_minor(lambda, f);
        if (abs(d) != 1) rep.fail("unimodular", f, "det = " + d.get_str());
    }
    return rep;
}

inline ValidityReport validate_quasitoric(const QuasitoricData& q) {
    auto rep = validate_quasitoric(q.complex, q.lambda);
    if (!q.base_facet.empty() && q.complex.facet_index(q.base_facet) < 0) {
        rep.checks_run.push_back("base_facet");
        rep.fail("base_facet", q.base_facet, "not a facet");
    }
    return rep;
}

/// Top-degree evaluation on Z[K]/(I_K + J_lambda). Built once per data set.
class Evaluator {
public:
    explicit Evaluator(QuasitoricData q) : q_(std::move(q)) {
        auto rep = validate_quasitoric(q_);
        if (!rep.valid) {
            const auto& v0 = rep.violations.front();
            throw InputError("invalid quasitoric data: " + v0.check + " " + render_face(v0.face) + " " + v0.detail);
        }
        const auto& facets = q_.complex.facets();
        std::size_t base = q_.base_facet.empty() ? 0 : static_cast<std::size_t>(q_.complex.facet_index(q_.base_facet));
        int global = rep.orientation[base] * (q_.orientation_flip ? -1 : 1);
        for (std::size_t i = 0; i < facets.size(); ++i)
            facet_value_.push_back(global * rep.orientation[i] * sign_of(facet_minor(q_.lambda, facets[i])));
    }

    const QuasitoricData& data() const noexcept { return q_; }
    unsigned dimension() const { return q_.dimension(); }

    /// v_sigma[M] for facet index i.
    int facet_value(std::size_t i) const { return facet_value_.at(i); }

    Rational evaluate(const VPoly& p) {
        Rational total;
        for (const auto& [key, c] : p.terms()) {
            if (key.size() != dimension())
                throw InputError("monomial " + VertexPolicy::render(key) + " has degree " + std::to_string(key.size()) +
                                 ", expected " + std::to_string(dimension()));
            total += c * reduce(key);
        }
        return total;
    }

    BigInt evaluate_integer(const VPoly& p) {
        Rational r = evaluate(p);
        if (!r.is_integer()) throw std::logic_error("top evaluation produced a non-integer " + r.str());
        return r.num();
    }

private:
    /// v_sigma = sum_j C[i][j] v_j over vertices j outside sigma.
    const RatMatrix& substitution(std::size_t facet) {
        if (auto it = subst_.find(facet); it != subst_.end()) return it->second;
        const auto& f = q_.complex.facets()[facet];
        unsigned n = dimension(), m = q_.vertex_count();
        RatMatrix ls = to_rational(q_.lambda.select_columns(std::vector<std::size_t>(f.begin(), f.end())));
        RatMatrix c(m, m);
        for (unsigned j = 0; j < m; ++j) {
            if (std::find(f.begin(), f.end(), j) != f.end()) continue;
            std::vector<Rational> rhs(n);
            for (unsigned r = 0; r < n; ++r) rhs[r] = -Rational(q_.lambda(r, j));
            auto x = solve(ls, rhs);
            if (!x) throw std::logic_error("singular facet minor");
            for (unsigned r = 0; r < n; ++r) c(f[r], j) = (*x)[r];
        }
        return subst_.emplace(facet, std::move(c)).first->second;
    }

    Rational reduce(const std::vector<unsigned>& key) {
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        Face support = key;
        support.erase(std::unique(support.begin(), support.end()), support.end());
        VertexMask s = mask_of(support);
        Rational value;
        if (q_.complex.is_face(s)) {
            if (support.size() == key.size()) {
                value = Rational(facet_value_.at(static_cast<std::size_t>(q_.complex.facet_index(support))));
            } else {
                unsigned i = 0;
                for (std::size_t a = 0; a + 1 < key.size(); ++a)
                    if (key[a] == key[a + 1]) {
                        i = key[a];
                        break;
                    }
                auto facet = static_cast<std::size_t>(q_.complex.facet_containing(s));
                const RatMatrix& c = substitution(facet);
                std::vector<unsigned> rest = key;
                rest.erase(std::find(rest.begin(), rest.end(), i));
                for (unsigned j = 0; j < q_.vertex_count(); ++j) {
                    if (c(i, j).is_zero()) continue;
                    auto next = VertexPolicy::multiply(rest, {j});
                    value += c(i, j) * reduce(next);
                }
            }
        }
        return memo_.emplace(key, value).first->second;
    }

    static int sign_of(const BigInt& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

    QuasitoricData q_;
    std::vector<int> facet_value_;
    std::map<std::size_t, RatMatrix> subst_;
    std::map<std::vector<unsigned>, Rational> memo_;
};

inline BigInt top_evaluate(const QuasitoricData& q, const VPoly& p) { return Evaluator(q).evaluate_integer(p); }

/// CP^n: boundary of the n-simplex with lambda = [I | -1].
inline QuasitoricData projective_space(unsigned n) {
    IntMatrix lambda(n, n + 1);
    for (unsigned i = 0; i < n; ++i) {
        lambda(i, i) = 1;
        lambda(i, n) = -1;
    }
    return {simplex_boundary(n), lambda, {}, false};
}

/// Product manifold: join of complexes and block-diagonal lambda.
inline QuasitoricData product(const QuasitoricData& a, const QuasitoricData& b) {
    IntMatrix lambda(a.lambda.rows() + b.lambda.rows(), a.lambda.cols() + b.lambda.cols());
    for (std::size_t i = 0; i < a.lambda.rows(); ++i)
        for (std::size_t j = 0; j < a.lambda.cols(); ++j) lambda(i, j) = a.lambda(i, j);
    for (std::size_t i = 0; i < b.lambda.rows(); ++i)
        for (std::size_t j = 0; j < b.lambda.cols(); ++j) lambda(a.lambda.rows() + i, a.lambda.cols() + j) = b.lambda(i, j);
    return {join(a.complex, b.complex), lambda, {}, false};
}

}  // namespace toricnet::torictop

#endif  // TORICNET_TORICTOP_QUASITORIC_HPP
