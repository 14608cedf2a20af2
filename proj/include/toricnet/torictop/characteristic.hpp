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

#ifndef TORICNET_TORICTOP_CHARACTERISTIC_HPP
#define TORICNET_TORICTOP_CHARACTERISTIC_HPP

#include <map>
#include <string>
#include <vector>

#include <toricnet/ncsf/compositions.hpp>
#include <toricnet/ncsf/nsym.hpp>
#include <toricnet/torictop/quasitoric.hpp>

namespace toricnet::torictop {

using ncsf::Composition;
using ncsf::Partition;

/// e_k(v_1..v_m).
inline VPoly elementary(unsigned m, unsigned k) {
    VPoly out;
    std::vector<unsigned> key;
    auto rec = [&](auto&& self, unsigned start) -> void {
        if (key.size() == k) {
            out.add_term(key, Rational(1));
            return;
        }
        for (unsigned i = start; i < m; ++i) {
            key.push_back(i);
            self(self, i + 1);
            key.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

/// h_k(v_1..v_m).
inline VPoly complete(unsigned m, unsigned k) {
    VPoly out;
    std::vector<unsigned> key;
    auto rec = [&](auto&& self, unsigned start) -> void {
        if (key.size() == k) {
            out.add_term(key, Rational(1));
            return;
        }
        for (unsigned i = start; i < m; ++i) {
            key.push_back(i);
            self(self, i);
            key.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

/// Monomial quasisymmetric function: sum over i_1 < ... < i_l of prod v_{i_j}^{alpha_j}.
inline VPoly quasisymmetric_monomial(unsigned m, const Composition& alpha) {
    VPoly out;
    std::vector<unsigned> idx;
    auto rec = [&](auto&& self, unsigned start) -> void {
        if (idx.size() == alpha.size()) {
            std::vector<unsigned> key;
            for (std::size_t j = 0; j < idx.size(); ++j) key.insert(key.end(), alpha[j], idx[j]);
            out.add_term(key, Rational(1));
            return;
        }
        for (unsigned i = start; i < m; ++i) {
            idx.push_back(i);
            self(self, i + 1);
            idx.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

enum class Bundle { tangent, normal };

/// c_k of the tangent bundle e_k(v), or of the stable normal bundle (-1)^k h_k(v).
inline VPoly chern_class(unsigned m, unsigned k, Bundle bundle) {
    if (bundle == Bundle::tangent) return elementary(m, k);
    return complete(m, k) * Rational(k % 2 == 0 ? 1 : -1);
}

inline BigInt chern_number(Evaluator& ev, const Partition& parts, Bundle bundle) {
    if (ncsf::weight(parts) != ev.dimension())
        throw InputError("partition weight " + std::to_string(ncsf::weight(parts)) + " differs from dimension " +
                         std::to_string(ev.dimension()));
    VPoly word(Rational(1));
    for (unsigned k : parts) word = word * chern_class(ev.data().vertex_count(), k, bundle);
    return ev.evaluate_integer(word);
}

inline BigInt chern_number(const QuasitoricData& q, const Partition& parts, Bundle bundle) {
    Evaluator ev(q);
    return chern_number(ev, parts, bundle);
}

/// All Chern numbers c^I[M] for partitions I of the dimension.
inline std::map<Partition, BigInt> chern_numbers(const QuasitoricData& q, Bundle bundle) {
    Evaluator ev(q);
    std::map<Partition, BigInt> out;
    for (const auto& p : ncsf::partitions(ev.dimension())) out[p] = chern_number(ev, p, bundle);
    return out;
}

/// sum over compositions alpha of n of <alpha>(v)[M] Z_alpha.
inline ncsf::NCF mxi_numbers(Evaluator& ev) {
    ncsf::NCF out;
    unsigned m = ev.data().vertex_count();
    for (const auto& alpha : ncsf::compositions(ev.dimension()))
        out.add_term(alpha, ev.evaluate(quasisymmetric_monomial(m, alpha)));
    return out;
}

inline ncsf::NCF mxi_numbers(const QuasitoricData& q) {
    Evaluator ev(q);
    return mxi_numbers(ev);
}

/// Renders an NSymm class with the largest composition first, e.g.
/// "3·Z[2] + 3·Z[1,1]".
inline std::string render_class(const ncsf::NCF& x) { return x.str(TermOrder::descending); }

enum class HamiltonianConvention { ginzburg, mxi };

struct HamiltonianEntry {
    std::vector<unsigned> index;  // partition (ginzburg) or composition (mxi)
    unsigned weight = 0;          // the b_(i) marker
    Rational value;
};

/// Characteristic numbers of (M, u) for u = (2 pi)^{-1}[omega] as a linear
/// form in v. ginzburg: (-1)^{l(I)} h_I(v) u^{n-|I|}[M] over partitions;
/// mxi: <alpha>(v) u^{n-|alpha|}[M] over compositions.
inline std::vector<HamiltonianEntry> hamiltonian_numbers(const QuasitoricData& q, const std::vector<Rational>& u,
                                                         HamiltonianConvention convention) {
    Evaluator ev(q);
    unsigned n = ev.dimension(), m = q.vertex_count();
    if (u.size() != m) throw InputError("symplectic class needs " + std::to_string(m) + " coefficients");
    VPoly form = linear_form(u);
    std::vector<VPoly> u_powers{VPoly(Rational(1))};
    for (unsigned k = 1; k <= n; ++k) u_powers.push_back(u_powers.back() * form);
    std::vector<HamiltonianEntry> out;
    for (unsigned i = 0; i <= n; ++i) {
        if (convention == HamiltonianConvention::ginzburg) {
            for (const auto& p : ncsf::partitions(i)) {
                VPoly word(Rational(p.size() % 2 == 0 ? 1 : -1));
                for (unsigned k : p) word = word * complete(m, k);
                out.push_back({p, i, ev.evaluate(word * u_powers[n - i])});
            }
        } else {
            for (const auto& alpha : ncsf::compositions(i))
                out.push_back({alpha, i, ev.evaluate(quasisymmetric_monomial(m, alpha) * u_powers[n - i])});
        }
    }
    return out;
}

}  // namespace toricnet::torictop

#endif  // TORICNET_TORICTOP_CHARACTERISTIC_HPP
