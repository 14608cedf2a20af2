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

#ifndef TORICNET_NCSF_NSYM_HPP
#define TORICNET_NCSF_NSYM_HPP

#include <algorithm>
#include <map>
#include <vector>

#include <toricnet/core/linear_combination.hpp>
#include <toricnet/core/series.hpp>
#include <toricnet/ncsf/compositions.hpp>
#include <toricnet/ncsf/qsym.hpp>
#include <toricnet/ncsf/sym.hpp>

namespace toricnet::ncsf {

/// Noncommutative symmetric functions: free associative algebra on Z_1, Z_2, ...
using NCF = LinComb<WordPolicy>;
using TensorNCF = Tensor<WordPolicy, WordPolicy>;

/// Commutative polynomials in t_1, t_2, ... (and in b_1, b_2, ...).
using TPoly = LinComb<MultisetPolicy<TSymbol>>;
using BPoly = LinComb<MultisetPolicy<BSymbol>>;

/// The word Z_alpha.
inline NCF Z(Composition alpha) { return NCF::basis(std::move(alpha)); }
inline NCF Zi(unsigned i) { return i == 0 ? NCF(Rational(1)) : Z({i}); }

inline NCF nsf_product(const NCF& x, const NCF& y) { return x * y; }

/// Coproduct, multiplicative with Delta Z_i = sum_{j+k=i} Z_j (x) Z_k.
inline TensorNCF nsf_coproduct(const NCF& x) {
    std::map<unsigned, TensorNCF> letter;
    auto delta_letter = [&](unsigned i) -> const TensorNCF& {
        auto it = letter.find(i);
        if (it != letter.end()) return it->second;
        TensorNCF d;
        for (unsigned j = 0; j <= i; ++j) d += tensor(Zi(j), Zi(i - j));
        return letter.emplace(i, std::move(d)).first->second;
    };
    TensorNCF out;
    for (const auto& [word, c] : x.terms()) {
        TensorNCF term(c);
        for (unsigned i : word) term = term * delta_letter(i);
        out += term;
    }
    return out;
}

/// <Z_alpha, M_beta> = delta_{alpha beta}.
inline Rational pairing(const NCF& x, const QSF& q) {
    Rational total;
    for (const auto& [alpha, c] : x.terms()) total += c * q.coefficient(alpha);
    return total;
}

/// <x (x) y, q (x) q'> = <x, q> <y, q'>.
inline Rational pairing(const TensorNCF& t, const QSF& q1, const QSF& q2) {
    Rational total;
    for (const auto& [k, c] : t.terms()) total += c * q1.coefficient(k.first) * q2.coefficient(k.second);
    return total;
}

/// Z(T) = 1 + sum_{i>=1} Z_i T^i (grouplike normalization).
inline TruncSeries<NCF> grouplike_series(unsigned order) {
    TruncSeries<NCF> z(order);
    for (unsigned i = 0; i <= order; ++i) z.set(i, Zi(i));
    return z;
}

/// Z(T) = T + sum_{i>=1} Z_i T^{i+1} (diffeo normalization).
inline TruncSeries<NCF> diffeo_series(unsigned order) {
    TruncSeries<NCF> z(order);
    for (unsigned i = 1; i <= order; ++i) z.set(i, Zi(i - 1));
    return z;
}

enum class InverseSide { right, left };

struct CartierElements {
    /// sigma[k], psi[k] for 1 <= k <= n_max; index 0 holds the unit and zero.
    std::vector<NCF> sigma;
    std::vector<NCF> psi;
};

/// Sigma(T) with Sigma(T) Z(-T) = 1, and Psi(T) = T Z'(T) Z(T)^{-1}
/// (or Z(T)^{-1} T Z'(T) with the left side).
inline CartierElements cartier(unsigned n_max, InverseSide side = InverseSide::right) {
    if (n_max == 0) throw InputError("cartier: n_max must be at least 1");
    auto z = grouplike_series(n_max);
    auto sigma = mul_inverse(z.rescaled(Rational(-1)));
    TruncSeries<NCF> tzp(n_max);
    for (unsigned i = 1; i <= n_max; ++i) tzp.set(i, z[i] * Rational(static_cast<long>(i)));
    auto zinv = mul_inverse(z);
    auto psi = side == InverseSide::right ? tzp * zinv : zinv * tzp;
    CartierElements out;
    for (unsigned k = 0; k <= n_max; ++k) {
        out.sigma.push_back(sigma[k]);
        out.psi.push_back(psi[k]);
    }
    return out;
}

/// Ring map Z_i -> e_i into the e-basis.
inline SymF abelianize_sym(const NCF& x) {
    SymF out(SymBasis::e);
    for (const auto& [word, c] : x.terms()) out.add_term(sorted_partition(word), c);
    return out;
}

/// Ring map Z_i -> g_i into commutative polynomials in the generators of P.
template <class Poly = TPoly>
Poly abelianize_poly(const NCF& x) {
    Poly out;
    for (const auto& [word, c] : x.terms()) {
        typename Poly::key_type key(word.begin(), word.end());
        std::sort(key.begin(), key.end());
        out.add_term(key, c);
    }
    return out;
}

inline TPoly abelianize_diffeo(const NCF& x) { return abelianize_poly<TPoly>(x); }

}  // namespace toricnet::ncsf

#endif  // TORICNET_NCSF_NSYM_HPP
