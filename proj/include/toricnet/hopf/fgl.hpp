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

#ifndef TORICNET_HOPF_FGL_HPP
#define TORICNET_HOPF_FGL_HPP

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <toricnet/core/errors.hpp>
#include <toricnet/core/series.hpp>
#include <toricnet/hopf/diffeo.hpp>

namespace toricnet::hopf {

inline constexpr unsigned fgl_max_order = 8;

/// F(x, y) = g(g^{-1}(x) + g^{-1}(y)) for a diffeomorphism g = T + ..., with
/// x, y central.
template <CoefficientRing R>
MultiSeries<R> formal_group_law(const TruncSeries<R>& g) {
    unsigned order = g.order();
    auto inv = comp_inverse(g);
    auto x = MultiSeries<R>::from_univariate(inv, 0, 2, order);
    auto y = MultiSeries<R>::from_univariate(inv, 1, 2, order);
    return compose(g, x + y);
}

/// The law over NSymm with diffeo-normalized Z(T) = T + sum Z_i T^{i+1}.
inline MultiSeries<NCF> fgl_over_N(unsigned order) {
    if (order == 0 || order > fgl_max_order) throw InputError("fgl order must lie in 1..8");
    return formal_group_law(ncsf::diffeo_series(order));
}

/// Z_i -> b_i applied to the coefficients.
inline MultiSeries<ncsf::BPoly> abelianize_fgl(const MultiSeries<NCF>& f) {
    return f.map_coefficients([](const NCF& c) { return ncsf::abelianize_poly<ncsf::BPoly>(c); });
}

/// b(b^{-1}(x) + b^{-1}(y)) computed directly over Q[b_*].
inline MultiSeries<ncsf::BPoly> commutative_fgl(unsigned order) {
    auto b = diffeo_with<ncsf::BPoly>(order, [](unsigned i) {
        return i == 0 ? ncsf::BPoly(Rational(1)) : ncsf::BPoly::basis({i});
    });
    return formal_group_law(b);
}

inline std::string render_monomial(const std::vector<unsigned>& e, const std::vector<std::string>& names) {
    std::string s;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        s += names.at(i);
        if (e[i] > 1) s += "^" + std::to_string(e[i]);
    }
    return s.empty() ? "1" : s;
}

struct AssociativityReport {
    bool associative = true;
    /// Lowest total degree with a discrepancy, and the first offending monomial
    /// there (in x, y, z) with the difference F(F(x,y),z) - F(x,F(y,z)).
    unsigned degree = 0;
    std::string monomial;
    std::string difference;
};

/// Compares F(F(x,y),z) with F(x,F(y,z)) up to the law's truncation order.
template <CoefficientRing R>
AssociativityReport associativity_report(const MultiSeries<R>& f) {
    unsigned order = f.order();
    auto x = MultiSeries<R>::variable(0, 3, order);
    auto y = MultiSeries<R>::variable(1, 3, order);
    auto z = MultiSeries<R>::variable(2, 3, order);
    auto fxy = substitute2(f, x, y);
    auto fyz = substitute2(f, y, z);
    auto diff = substitute2(f, fxy, z) - substitute2(f, x, fyz);
    AssociativityReport report;
    for (const auto& [e, c] : diff.terms()) {
        unsigned deg = e[0] + e[1] + e[2];
        if (report.associative || deg < report.degree) {
            report.associative = false;
            report.degree = deg;
            report.monomial = render_monomial(e, {"x", "y", "z"});
            report.difference = ring_traits<R>::str(c);
        }
    }
    return report;
}

}  // namespace toricnet::hopf

#endif  // TORICNET_HOPF_FGL_HPP
