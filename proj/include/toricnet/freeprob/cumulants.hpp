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

#ifndef TORICNET_FREEPROB_CUMULANTS_HPP
#define TORICNET_FREEPROB_CUMULANTS_HPP

#include <string>
#include <vector>

#include <toricnet/core/errors.hpp>
#include <toricnet/core/rational.hpp>
#include <toricnet/core/series.hpp>

namespace toricnet::freeprob {

/// Moments m[0..N] with m[0] = 1.
using MomentSeq = std::vector<Rational>;
/// Cumulants k[0..N]; k[n] is the n-th cumulant and k[0] is ignored (stored as 0).
using CumulantSeq = std::vector<Rational>;

inline void check_moments(const MomentSeq& m) {
    if (m.empty() || !m[0].is_one()) throw InputError("moment sequence must start with m0 = 1");
}

inline MomentSeq moments_from_doubles(const std::vector<double>& xs) {
    MomentSeq m;
    for (double x : xs) m.push_back(Rational::from_double(x));
    check_moments(m);
    return m;
}

/// gamma(z) = sum_{n>=0} m_n z^{n+1}, K(z) = z / gamma^{<-1>}(z) = 1 + sum k_n z^n.
inline CumulantSeq moments_to_free_cumulants(const MomentSeq& m) {
    check_moments(m);
    unsigned n = static_cast<unsigned>(m.size() - 1);
    if (n == 0) throw InputError("need at least one moment beyond m0");
    TruncSeries<Rational> gamma(n + 1);
    for (unsigned i = 0; i <= n; ++i) gamma.set(i + 1, m[i]);
    // z / g(z) for g = z(1 + ...) is the reciprocal of g(z)/z.
    auto k_series = mul_inverse(comp_inverse(gamma).shifted_down(1));
    CumulantSeq k(n + 1);
    for (unsigned i = 1; i <= n; ++i) k[i] = k_series[i];
    return k;
}

/// Inverse of moments_to_free_cumulants, solving M(z) = K(z M(z)) degree by degree.
inline MomentSeq free_cumulants_to_moments(const CumulantSeq& k) {
    unsigned n = k.empty() ? 0 : static_cast<unsigned>(k.size() - 1);
    MomentSeq m(n + 1);
    m[0] = Rational(1);
    TruncSeries<Rational> kk(n);
    kk.set(0, Rational(1));
    for (unsigned i = 1; i <= n; ++i) kk.set(i, k[i]);
    TruncSeries<Rational> big_m = TruncSeries<Rational>::constant(Rational(1), n);
    // Each pass fixes one more coefficient of M.
    for (unsigned d = 1; d <= n; ++d) big_m = compose(kk, big_m.shifted(1));
    for (unsigned i = 1; i <= n; ++i) m[i] = big_m[i];
    return m;
}

/// Classical cumulants from log of the exponential generating function.
inline CumulantSeq classical_cumulants(const MomentSeq& m) {
    check_moments(m);
    unsigned n = static_cast<unsigned>(m.size() - 1);
    TruncSeries<Rational> egf(n);
    for (unsigned i = 0; i <= n; ++i) egf.set(i, m[i] / Rational(factorial(i)));
    auto l = log(egf);
    CumulantSeq k(n + 1);
    for (unsigned i = 1; i <= n; ++i) k[i] = l[i] * Rational(factorial(i));
    return k;
}

inline MomentSeq classical_moments(const CumulantSeq& k) {
    unsigned n = k.empty() ? 0 : static_cast<unsigned>(k.size() - 1);
    TruncSeries<Rational> l(n);
    for (unsigned i = 1; i <= n; ++i) l.set(i, k[i] / Rational(factorial(i)));
    auto e = exp(l);
    MomentSeq m(n + 1);
    for (unsigned i = 0; i <= n; ++i) m[i] = e[i] * Rational(factorial(i));
    return m;
}

/// Hirzebruch K-series z / log^{<-1>}(z) for log(z) = sum_{n>=1} l_n z^n,
/// given as l[1..N] (l[0] ignored). Returns K[0..N-1].
inline std::vector<Rational> hirzebruch_K(const std::vector<Rational>& l) {
    if (l.size() < 2 || !l[1].is_one()) throw InputError("logarithm must start with l1 = 1");
    unsigned n = static_cast<unsigned>(l.size() - 1);
    TruncSeries<Rational> lg(n);
    for (unsigned i = 1; i <= n; ++i) lg.set(i, l[i]);
    auto k = mul_inverse(comp_inverse(lg).shifted_down(1));
    return {k.coefficients().begin(), k.coefficients().end()};
}

/// l_n = 1/n: the logarithm -ln(1 - z) of the Todd genus.
inline std::vector<Rational> todd_log(unsigned order) {
    std::vector<Rational> l(order + 1);
    for (unsigned i = 1; i <= order; ++i) l[i] = Rational(1, static_cast<long>(i));
    return l;
}

/// l_n = 1/n for odd n: arctanh, the logarithm of the L-genus.
inline std::vector<Rational> l_genus_log(unsigned order) {
    std::vector<Rational> l(order + 1);
    for (unsigned i = 1; i <= order; i += 2) l[i] = Rational(1, static_cast<long>(i));
    return l;
}

}  // namespace toricnet::freeprob

#endif  // TORICNET_FREEPROB_CUMULANTS_HPP
