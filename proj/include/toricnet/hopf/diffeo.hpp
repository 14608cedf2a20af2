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

#ifndef TORICNET_HOPF_DIFFEO_HPP
#define TORICNET_HOPF_DIFFEO_HPP

#include <optional>
#include <string>
#include <vector>

#include <toricnet/core/series.hpp>
#include <toricnet/hopf/hopf_algebra.hpp>
#include <toricnet/ncsf/nsym.hpp>

namespace toricnet::hopf {

using ncsf::NCF;
using ncsf::TensorNCF;
using ncsf::TPoly;
using TPolyPolicy = MultisetPolicy<TSymbol>;
using TensorLN = Tensor<TPolyPolicy, TPolyPolicy>;

inline TPoly t(unsigned i) { return i == 0 ? TPoly(Rational(1)) : TPoly::basis({i}); }

/// t(T) = T + sum t_i T^{i+1} with coefficients placed by `embed`.
template <class R, class Embed>
TruncSeries<R> diffeo_with(unsigned order, Embed&& embed) {
    TruncSeries<R> s(order);
    for (unsigned i = 1; i <= order; ++i) s.set(i, embed(i - 1));
    return s;
}

/// Landweber-Novikov coproduct images Delta t_i for 1 <= i <= max_i, read
/// off (t (x) 1)((1 (x) t)(T)).
inline std::vector<TensorLN> ln_coproduct_generators(unsigned max_i) {
    unsigned order = max_i + 1;
    auto outer = diffeo_with<TensorLN>(order, [](unsigned i) { return tensor(t(i), TPoly(Rational(1))); });
    auto inner = diffeo_with<TensorLN>(order, [](unsigned i) { return tensor(TPoly(Rational(1)), t(i)); });
    auto composed = compose(outer, inner);
    std::vector<TensorLN> out(max_i + 1);
    out[0] = TensorLN(Rational(1));
    for (unsigned i = 1; i <= max_i; ++i) out[i] = composed[i + 1];
    return out;
}

inline TensorLN ln_coproduct(const TPoly& p) {
    auto gens = ln_coproduct_generators(std::max(1u, p.max_degree()));
    return extend_multiplicatively<TensorLN>(p, [&](unsigned i) { return gens.at(i); });
}

/// chi(t_i) is the T^{i+1} coefficient of the compositional inverse of t(T).
inline std::vector<TPoly> ln_antipode_generators(unsigned max_i) {
    auto inv = comp_inverse(diffeo_with<TPoly>(max_i + 1, [](unsigned i) { return t(i); }));
    std::vector<TPoly> out(max_i + 1);
    out[0] = TPoly(Rational(1));
    for (unsigned i = 1; i <= max_i; ++i) out[i] = inv[i + 1];
    return out;
}

inline TPoly ln_antipode(const TPoly& p) {
    auto gens = ln_antipode_generators(std::max(1u, p.max_degree()));
    return extend_multiplicatively<TPoly>(p, [&](unsigned i) { return gens.at(i); });
}

/// BFK coproduct images: Delta_N Z_k is the T^{k+1} coefficient of
/// sum_{n>=1} Z_{n-1} (x) Z(T)^n with Z(T) = T + sum Z_i T^{i+1}.
inline std::vector<TensorNCF> bfk_coproduct_generators(unsigned max_k) {
    unsigned order = max_k + 1;
    NCF one(Rational(1));
    auto right = diffeo_with<TensorNCF>(order, [&](unsigned i) { return tensor(one, ncsf::Zi(i)); });
    TruncSeries<TensorNCF> sum(order);
    auto power = right;
    for (unsigned n = 1; n <= order; ++n) {
        sum = sum + tensor(ncsf::Zi(n - 1), one) * power;
        power = power * right;
    }
    std::vector<TensorNCF> out(max_k + 1);
    out[0] = TensorNCF(Rational(1));
    for (unsigned k = 1; k <= max_k; ++k) out[k] = sum[k + 1];
    return out;
}

inline TensorNCF bfk_coproduct(const NCF& x) {
    auto gens = bfk_coproduct_generators(std::max(1u, x.max_degree()));
    return extend_multiplicatively<TensorNCF>(x, [&](unsigned i) { return gens.at(i); });
}

/// BFK antipode by the graded recursion over the reduced coproduct.
inline AntipodeTable<WordPolicy> bfk_antipode_table(unsigned max_k) {
    auto gens = bfk_coproduct_generators(max_k);
    return AntipodeTable<WordPolicy>([gens](unsigned i) { return gens.at(i); });
}

inline NCF bfk_antipode(const NCF& x) {
    auto table = bfk_antipode_table(std::max(1u, x.max_degree()));
    return table(x);
}

/// Z_i -> t_i on both tensor slots.
inline TensorLN abelianize(const TensorNCF& x) {
    TensorLN out;
    for (const auto& [k, c] : x.terms())
        out += tensor(ncsf::abelianize_diffeo(NCF::basis(k.first)), ncsf::abelianize_diffeo(NCF::basis(k.second))) * c;
    return out;
}

struct AbelianizationReport {
    bool ok = true;
    unsigned checked_words = 0;
    /// First word whose coproduct or antipode images disagree.
    std::string counterexample;
};

/// Checks ab(Delta_N w) = Delta_S(ab w) and ab(chi_N w) = chi(ab w) for all
/// words of weight <= cap.
inline AbelianizationReport ab_bfk_to_ln(unsigned cap) {
    AbelianizationReport report;
    auto bfk = bfk_coproduct_generators(std::max(1u, cap));
    auto ln = ln_coproduct_generators(std::max(1u, cap));
    auto chi_ln = ln_antipode_generators(std::max(1u, cap));
    auto chi_n = bfk_antipode_table(std::max(1u, cap));
    for (unsigned n = 1; n <= cap; ++n)
        for (const auto& alpha : ncsf::compositions(n)) {
            NCF w = ncsf::Z(alpha);
            TPoly aw = ncsf::abelianize_diffeo(w);
            auto d_n = extend_multiplicatively<TensorNCF>(w, [&](unsigned i) { return bfk.at(i); });
            auto d_s = extend_multiplicatively<TensorLN>(aw, [&](unsigned i) { return ln.at(i); });
            auto s_n = chi_n(w);
            auto s_s = extend_multiplicatively<TPoly>(aw, [&](unsigned i) { return chi_ln.at(i); });
            ++report.checked_words;
            if (abelianize(d_n) != d_s || ncsf::abelianize_diffeo(s_n) != s_s) {
                report.ok = false;
                report.counterexample = w.str();
                return report;
            }
        }
    return report;
}

using BetaNCF = Tensor<ParameterPolicy, WordPolicy>;

/// b^H(T) = exp(beta Psi(T)) over NCF[beta], Psi from the grouplike Z(T).
inline TruncSeries<BetaNCF> beta_deform(unsigned order) {
    auto c = ncsf::cartier(std::max(1u, order));
    TruncSeries<BetaNCF> arg(order);
    for (unsigned k = 1; k <= order; ++k) arg.set(k, tensor(LinComb<ParameterPolicy>::basis(1u), c.psi[k]));
    return exp(arg);
}

/// b^H(T) with beta specialized to a rational value.
inline TruncSeries<NCF> beta_deform(const Rational& beta, unsigned order) {
    return beta_deform(order).map_coefficients([&](const BetaNCF& x) {
        NCF out;
        for (const auto& [k, c] : x.terms()) out.add_term(k.second, c * pow(beta, k.first));
        return out;
    });
}

}  // namespace toricnet::hopf

#endif  // TORICNET_HOPF_DIFFEO_HPP
