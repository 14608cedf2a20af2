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

#ifndef TORICNET_FREEPROB_NC_CUMULANTS_HPP
#define TORICNET_FREEPROB_NC_CUMULANTS_HPP

#include <toricnet/freeprob/cumulants.hpp>
#include <toricnet/hopf/diffeo.hpp>

namespace toricnet::freeprob {

using ncsf::NCF;

inline constexpr unsigned nc_cumulant_max_order = 8;

struct NcCumulantSeries {
    /// chi_N applied coefficientwise to Z(-x), with Z(x) = x + sum Z_i x^{i+1}.
    TruncSeries<NCF> raw;
    /// K(x) = x (chi_N(Z)(x))^{-1} = 1 + sum k_n x^n; one order below raw.
    TruncSeries<NCF> normalized;
};

inline NcCumulantSeries nc_cumulant_series(unsigned order) {
    if (order < 2 || order > nc_cumulant_max_order) throw InputError("ncseries order must lie in 2..8");
    auto chi = hopf::bfk_antipode_table(order - 1);
    TruncSeries<NCF> raw(order), s(order);
    for (unsigned i = 0; i + 1 <= order; ++i) {
        NCF value = chi(ncsf::Zi(i));
        s.set(i + 1, value);
        raw.set(i + 1, (i % 2 == 0) ? -value : value);
    }
    return {raw, mul_inverse(s.shifted_down(1))};
}

/// Abelianization Z_i -> m_i evaluated at a moment sequence.
inline Rational evaluate_at_moments(const NCF& x, const MomentSeq& m) {
    Rational total;
    for (const auto& [word, c] : x.terms()) {
        Rational term = c;
        for (unsigned letter : word) term *= m.at(letter);
        total += term;
    }
    return total;
}

}  // namespace toricnet::freeprob

#endif  // TORICNET_FREEPROB_NC_CUMULANTS_HPP
