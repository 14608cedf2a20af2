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

#ifndef TORICNET_CORE_LINEAR_COMBINATION_HPP
#define TORICNET_CORE_LINEAR_COMBINATION_HPP

#include <algorithm>
#include <concepts>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <toricnet/core/rational.hpp>

namespace toricnet {

/// A monomial algebra: basis keys multiply to single keys with coefficient 1.
///
/// Every algebra in the library (free associative words, commutative
/// polynomials, tensor products of those) has this shape, so one container
/// serves all of them.
template <class P>
concept MonomialPolicy = requires(const typename P::key_type& k) {
    typename P::key_type;
    { P::unit() } -> std::convertible_to<typename P::key_type>;
    { P::multiply(k, k) } -> std::convertible_to<typename P::key_type>;
    { P::degree(k) } -> std::convertible_to<unsigned>;
    { P::render(k) } -> std::convertible_to<std::string>;
};

/// Finite Q-linear combination of basis keys, with the product induced by the
/// policy. Zero coefficients are never stored.
enum class TermOrder { ascending, descending };

template <MonomialPolicy Policy>
class LinComb {
public:
    using policy_type = Policy;
    using key_type = typename Policy::key_type;
    using container = std::map<key_type, Rational>;

    LinComb() = default;
    LinComb(const Rational& scalar) {
        if (!scalar.is_zero()) terms_.emplace(Policy::unit(), scalar);
    }
    explicit LinComb(long scalar) : LinComb(Rational(scalar)) {}
    explicit LinComb(int scalar) : LinComb(Rational(scalar)) {}

    static LinComb basis(key_type key, const Rational& coeff = Rational(1)) {
        LinComb r;
        if (!coeff.is_zero()) r.terms_.emplace(std::move(key), coeff);
        return r;
    }

    const container& terms() const& noexcept { return terms_; }
    container terms() && { return std::move(terms_); }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    Rational coefficient(const key_type& key) const {
        auto it = terms_.find(key);
        return it == terms_.end() ? Rational(0) : it->second;
    }
    Rational constant_term() const { return coefficient(Policy::unit()); }

    void add_term(const key_type& key, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(key, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    /// Largest key degree present (0 for zero).
    unsigned max_degree() const {
        unsigned d = 0;
        for (const auto& [k, c] : terms_) d = std::max(d, static_cast<unsigned>(Policy::degree(k)));
        return d;
    }
    bool is_homogeneous(unsigned degree) const {
        return std::all_of(terms_.begin(), terms_.end(),
                           [&](const auto& t) { return Policy::degree(t.first) == degree; });
    }
    LinComb homogeneous_part(unsigned degree) const {
        LinComb r;
        for (const auto& [k, c] : terms_)
            if (Policy::degree(k) == degree) r.terms_.emplace(k, c);
        return r;
    }

    LinComb operator-() const {
        LinComb r = *this;
        for (auto& [k, c] : r.terms_) c = -c;
        return r;
    }
    LinComb& operator+=(const LinComb& o) {
        for (const auto& [k, c] : o.terms_) add_term(k, c);
        return *this;
    }
    LinComb& operator-=(const LinComb& o) {
        for (const auto& [k, c] : o.terms_) add_term(k, -c);
        return *this;
    }
    LinComb& operator*=(const Rational& s) {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [k, c] : terms_) c *= s;
        return *this;
    }
    friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
    friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
    friend LinComb operator*(LinComb a, const Rational& s) { return a *= s; }
    friend LinComb operator*(const Rational& s, LinComb a) { return a *= s; }

    friend LinComb operator*(const LinComb& a, const LinComb& b) {
        LinComb r;
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_) r.add_term(Policy::multiply(ka, kb), ca * cb);
        return r;
    }
    LinComb& operator*=(const LinComb& o) { return *this = *this * o; }

    friend bool operator==(const LinComb& a, const LinComb& b) { return a.terms_ == b.terms_; }

    /// Applies a linear map defined on basis keys.
    template <class Out, class F>
    Out map_linear(F&& on_key) const {
        Out r;
        for (const auto& [k, c] : terms_) r += on_key(k) * c;
        return r;
    }

    /// Deterministic text form, e.g. "Z[2] + 2·Z[1,1]".
    /// Human-readable form; `descending` lists the largest key first.
    std::string str(TermOrder order = TermOrder::ascending) const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        auto emit = [&](const key_type& k, const Rational& c) {
            Rational mag = abs(c);
            if (first) {
                if (c.sign() < 0) os << "-";
            } else {
                os << (c.sign() < 0 ? " - " : " + ");
            }
            first = false;
            std::string key = Policy::render(k);
            if (key == "1") {
                os << mag.str();
            } else if (mag.is_one()) {
                os << key;
            } else {
                os << mag.str() << "·" << key;
            }
        };
        if (order == TermOrder::ascending)
            for (const auto& [k, c] : terms_) emit(k, c);
        else
            for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) emit(it->first, it->second);
        return os.str();
    }

private:
    container terms_;
};

template <MonomialPolicy P>
LinComb<P> pow(const LinComb<P>& x, unsigned n) {
    LinComb<P> r(1);
    for (unsigned i = 0; i < n; ++i) r = r * x;
    return r;
}

namespace detail {
inline std::string join_parts(const std::vector<unsigned>& parts) {
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts[i]);
    }
    return s;
}
}  // namespace detail

/// Free associative words in generators indexed 1, 2, ...; product concatenates.
struct WordPolicy {
    using key_type = std::vector<unsigned>;
    static key_type unit() { return {}; }
    static key_type multiply(const key_type& a, const key_type& b) {
        key_type r;
        r.reserve(a.size() + b.size());
        r.insert(r.end(), a.begin(), a.end());
        r.insert(r.end(), b.begin(), b.end());
        return r;
    }
    static unsigned degree(const key_type& k) {
        unsigned d = 0;
        for (unsigned p : k) d += p;
        return d;
    }
    static std::string render(const key_type& k) {
        if (k.empty()) return "1";
        return "Z[" + detail::join_parts(k) + "]";
    }
};

/// Commutative monomials in indexed generators g_1, g_2, ...; the key is the
/// sorted multiset of generator indices. `Name` supplies the generator symbol.
template <class Name>
struct MultisetPolicy {
    using key_type = std::vector<unsigned>;
    static key_type unit() { return {}; }
    static key_type multiply(const key_type& a, const key_type& b) {
        key_type r;
        r.reserve(a.size() + b.size());
        std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
        return r;
    }
    static unsigned degree(const key_type& k) {
        unsigned d = 0;
        for (unsigned p : k) d += p;
        return d;
    }
    static std::string render(const key_type& k) {
        if (k.empty()) return "1";
        std::string s;
        for (std::size_t i = 0; i < k.size();) {
            std::size_t j = i;
            while (j < k.size() && k[j] == k[i]) ++j;
            if (!s.empty()) s += "*";
            s += std::string(Name::symbol) + std::to_string(k[i]);
            if (j - i > 1) s += "^" + std::to_string(j - i);
            i = j;
        }
        return s;
    }
};

struct TSymbol { static constexpr const char* symbol = "t"; };
struct BSymbol { static constexpr const char* symbol = "b"; };
struct CPSymbol { static constexpr const char* symbol = "CP"; };
struct MSymbol { static constexpr const char* symbol = "m"; };

/// Powers of a single central parameter (used for the deformation parameter).
struct ParameterPolicy {
    using key_type = unsigned;
    static key_type unit() { return 0; }
    static key_type multiply(key_type a, key_type b) { return a + b; }
    static unsigned degree(key_type) { return 0; }
    static std::string render(key_type k) {
        if (k == 0) return "1";
        return k == 1 ? std::string("β") : "β^" + std::to_string(k);
    }
};

/// Tensor product of two monomial algebras; slots multiply independently.
template <MonomialPolicy A, MonomialPolicy B>
struct TensorPolicy {
    using key_type = std::pair<typename A::key_type, typename B::key_type>;
    static key_type unit() { return {A::unit(), B::unit()}; }
    static key_type multiply(const key_type& x, const key_type& y) {
        return {A::multiply(x.first, y.first), B::multiply(x.second, y.second)};
    }
    static unsigned degree(const key_type& k) { return A::degree(k.first) + B::degree(k.second); }
    static std::string render(const key_type& k) {
        std::string l = A::render(k.first);
        std::string r = B::render(k.second);
        if (l == "1" && r == "1") return "1";
        return l + "⊗" + r;
    }
};

template <MonomialPolicy A, MonomialPolicy B = A>
using Tensor = LinComb<TensorPolicy<A, B>>;

/// a ⊗ b for elements of the two factors.
template <MonomialPolicy A, MonomialPolicy B>
Tensor<A, B> tensor(const LinComb<A>& a, const LinComb<B>& b) {
    Tensor<A, B> r;
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) r.add_term({ka, kb}, ca * cb);
    return r;
}

/// Multiplies the two slots of a tensor into one algebra: m(a ⊗ b) = a·b.
template <MonomialPolicy P>
LinComb<P> multiply_slots(const Tensor<P, P>& t) {
    LinComb<P> r;
    for (const auto& [k, c] : t.terms()) r.add_term(P::multiply(k.first, k.second), c);
    return r;
}

/// Applies (f ⊗ g) for linear maps given on basis keys.
template <MonomialPolicy A, MonomialPolicy B, MonomialPolicy C, MonomialPolicy D, class F, class G>
Tensor<C, D> tensor_map(const Tensor<A, B>& t, F&& f, G&& g) {
    Tensor<C, D> r;
    for (const auto& [k, c] : t.terms()) r += tensor(f(k.first), g(k.second)) * c;
    return r;
}

}  // namespace toricnet

#endif  // TORICNET_CORE_LINEAR_COMBINATION_HPP
