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

#ifndef TORICNET_HOPF_COACTION_HPP
#define TORICNET_HOPF_COACTION_HPP

#include <vector>

#include <toricnet/hopf/diffeo.hpp>

namespace toricnet::hopf {

using CPPolicy = MultisetPolicy<CPSymbol>;
using BPolicy = MultisetPolicy<BSymbol>;
using CPPoly = LinComb<CPPolicy>;
using ncsf::BPoly;
using CPCoaction = Tensor<CPPolicy, TPolyPolicy>;
using BCoaction = Tensor<BPolicy, TPolyPolicy>;

inline CPPoly cp(unsigned i) { return i == 0 ? CPPoly(Rational(1)) : CPPoly::basis({i}); }

/// Coefficients m_n = CP_{n-1}/n of the logarithm sum m_n T^n (m_1 = 1).
inline TruncSeries<CPPoly> mu_log(unsigned order) {
    TruncSeries<CPPoly> s(order);
    for (unsigned n = 1; n <= order; ++n) s.set(n, cp(n - 1) * Rational(1, static_cast<long>(n)));
    return s;
}

/// psi(CP_j) for 1 <= j < order, from psi(log(T)) = log(t(T)):
/// psi(m_n) = sum_k (m_k (x) 1)(1 (x) [T^n] t(T)^k). Index 0 holds 1 (x) 1.
inline std::vector<CPCoaction> mu_coaction_generators(unsigned order) {
    auto tt = diffeo_with<TPoly>(order, [](unsigned i) { return t(i); });
    auto logs = mu_log(order);
    std::vector<TruncSeries<TPoly>> powers{TruncSeries<TPoly>::constant(TPoly(Rational(1)), order)};
    for (unsigned k = 1; k <= order; ++k) powers.push_back(powers.back() * tt);
    std::vector<CPCoaction> out(order);
    out[0] = CPCoaction(Rational(1));
    for (unsigned n = 2; n <= order; ++n) {
        CPCoaction psi_m;
        for (unsigned k = 1; k <= n; ++k) psi_m += tensor(logs[k], powers[k][n]);
        out[n - 1] = psi_m * Rational(static_cast<long>(n));
    }
    return out;
}

inline CPCoaction mu_coaction(const CPPoly& x) {
    auto gens = mu_coaction_generators(x.max_degree() + 1);
    return extend_multiplicatively<CPCoaction>(x, [&](unsigned i) { return gens.at(i); });
}

/// psi(b_i) = [T^{i+1}] b(t(T)) with b(T) = T + sum b_i T^{i+1}.
inline std::vector<BCoaction> b_coaction_generators(unsigned max_i) {
    unsigned order = max_i + 1;
    auto outer = diffeo_with<BCoaction>(order, [](unsigned i) {
        return tensor(i == 0 ? BPoly(Rational(1)) : BPoly::basis({i}), TPoly(Rational(1)));
    });
    auto inner = diffeo_with<BCoaction>(order, [](unsigned i) { return tensor(BPoly(Rational(1)), t(i)); });
    auto composed = compose(outer, inner);
    std::vector<BCoaction> out(max_i + 1);
    out[0] = BCoaction(Rational(1));
    for (unsigned i = 1; i <= max_i; ++i) out[i] = composed[i + 1];
    return out;
}

inline BCoaction b_coaction(const BPoly& x) {
    auto gens = b_coaction_generators(std::max(1u, x.max_degree()));
    return extend_multiplicatively<BCoaction>(x, [&](unsigned i) { return gens.at(i); });
}

/// (psi (x) id) psi x == (id (x) Delta_S) psi x, and (id (x) eps) psi x == x,
/// for a coaction on commutative generators.
template <class P, class Psi>
bool is_coaction(const LinComb<P>& x, Psi&& psi) {
    using K = std::vector<unsigned>;
    detail::Triple<K> left, right;
    LinComb<P> counit_image;
    for (const auto& [k, c] : psi(x).terms()) {
        if (k.second.empty()) counit_image.add_term(k.first, c);
        for (const auto& [kk, cc] : psi(LinComb<P>::basis(k.first)).terms())
            detail::add_triple(left, {kk.first, kk.second, k.second}, c * cc);
        for (const auto& [kk, cc] : ln_coproduct(TPoly::basis(k.second)).terms())
            detail::add_triple(right, {k.first, kk.first, kk.second}, c * cc);
    }
    return left == right && counit_image == x;
}

}  // namespace toricnet::hopf

#endif  // TORICNET_HOPF_COACTION_HPP
