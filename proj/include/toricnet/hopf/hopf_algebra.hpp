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

#ifndef TORICNET_HOPF_HOPF_ALGEBRA_HPP
#define TORICNET_HOPF_HOPF_ALGEBRA_HPP

#include <array>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <toricnet/core/linear_combination.hpp>

namespace toricnet::hopf {

/// Algebras whose basis keys are sequences of generator indices (words, or
/// sorted multisets for the commutative case).
template <class P>
concept GeneratorAlgebra = MonomialPolicy<P> && std::same_as<typename P::key_type, std::vector<unsigned>>;

/// Extends generator images multiplicatively, in key order.
template <class Out, GeneratorAlgebra P, class Gen>
Out extend_multiplicatively(const LinComb<P>& x, Gen&& image) {
    Out total;
    for (const auto& [key, c] : x.terms()) {
        Out term(c);
        for (unsigned i : key) term = term * image(i);
        total += term;
    }
    return total;
}

/// Counit: the coefficient of the empty key.
template <MonomialPolicy P>
Rational counit(const LinComb<P>& x) { return x.constant_term(); }

/// Antipode of a graded connected bialgebra from its coproduct on generators,
/// by chi(x) = -x - sum chi(x') x'' over the reduced coproduct, extended
/// anti-multiplicatively. Generator values are memoized.
template <GeneratorAlgebra P>
class AntipodeTable {
public:
    using Elem = LinComb<P>;
    using Tens = Tensor<P, P>;

    explicit AntipodeTable(std::function<Tens(unsigned)> delta_generator) : delta_(std::move(delta_generator)) {}

    const Elem& generator(unsigned i) {
        if (auto it = cache_.find(i); it != cache_.end()) return it->second;
        Elem x = Elem::basis({i});
        Elem chi = -x;
        for (const auto& [k, c] : delta_(i).terms()) {
            if (k.first.empty() || k.second.empty()) continue;
            chi -= of_key(k.first) * Elem::basis(k.second) * c;
        }
        return cache_.emplace(i, std::move(chi)).first->second;
    }

    Elem of_key(const typename P::key_type& key) {
        Elem r(Rational(1));
        for (auto it = key.rbegin(); it != key.rend(); ++it) r = r * generator(*it);
        return r;
    }

    Elem operator()(const Elem& x) {
        Elem out;
        for (const auto& [k, c] : x.terms()) out += of_key(k) * c;
        return out;
    }

private:
    std::function<Tens(unsigned)> delta_;
    std::map<unsigned, Elem> cache_;
};

namespace detail {
template <class K>
using Triple = std::map<std::array<K, 3>, Rational>;

template <class K>
void add_triple(Triple<K>& t, std::array<K, 3> key, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = t.try_emplace(std::move(key), c);
    if (!inserted && (it->second += c).is_zero()) t.erase(it);
}
}  // namespace detail

/// (Delta (x) id) Delta x == (id (x) Delta) Delta x.
template <GeneratorAlgebra P, class Delta>
bool is_coassociative(const LinComb<P>& x, Delta&& delta) {
    using K = typename P::key_type;
    detail::Triple<K> left, right;
    for (const auto& [k, c] : delta(x).terms()) {
        for (const auto& [kk, cc] : delta(LinComb<P>::basis(k.first)).terms())
            detail::add_triple(left, {kk.first, kk.second, k.second}, c * cc);
        for (const auto& [kk, cc] : delta(LinComb<P>::basis(k.second)).terms())
            detail::add_triple(right, {k.first, kk.first, kk.second}, c * cc);
    }
    return left == right;
}

/// (eps (x) id) Delta x == x == (id (x) eps) Delta x.
template <GeneratorAlgebra P, class Delta>
bool is_counital(const LinComb<P>& x, Delta&& delta) {
    LinComb<P> left, right;
    for (const auto& [k, c] : delta(x).terms()) {
        if (k.first.empty()) left.add_term(k.second, c);
        if (k.second.empty()) right.add_term(k.first, c);
    }
    return left == x && right == x;
}

/// m (S (x) id) Delta x == eps(x) 1 == m (id (x) S) Delta x.
template <GeneratorAlgebra P, class Delta, class Antipode>
bool satisfies_antipode(const LinComb<P>& x, Delta&& delta, Antipode&& antipode) {
    LinComb<P> left, right;
    for (const auto& [k, c] : delta(x).terms()) {
        left += antipode(LinComb<P>::basis(k.first)) * LinComb<P>::basis(k.second) * c;
        right += LinComb<P>::basis(k.first) * antipode(LinComb<P>::basis(k.second)) * c;
    }
    LinComb<P> unit(counit(x));
    return left == unit && right == unit;
}

}  // namespace toricnet::hopf

#endif  // TORICNET_HOPF_HOPF_ALGEBRA_HPP
