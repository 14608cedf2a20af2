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

#ifndef TORICNET_CORE_SERIES_HPP
#define TORICNET_CORE_SERIES_HPP

#include <algorithm>
#include <concepts>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <toricnet/core/linear_combination.hpp>
#include <toricnet/core/rational.hpp>

namespace toricnet {

inline constexpr unsigned default_order = 8;

class SeriesError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Coefficient rings usable in series: Rational or any LinComb algebra.
template <class R>
struct ring_traits;

template <>
struct ring_traits<Rational> {
    static bool is_zero(const Rational& r) { return r.is_zero(); }
    /// Value when `r` is a scalar multiple of the identity.
    static std::optional<Rational> as_scalar(const Rational& r) { return r; }
    static std::string str(const Rational& r) { return r.str(); }
};

template <MonomialPolicy P>
struct ring_traits<LinComb<P>> {
    static bool is_zero(const LinComb<P>& r) { return r.is_zero(); }
    static std::optional<Rational> as_scalar(const LinComb<P>& r) {
        if (r.is_zero()) return Rational(0);
        if (r.size() == 1 && r.terms().begin()->first == P::unit()) return r.terms().begin()->second;
        return std::nullopt;
    }
    static std::string str(const LinComb<P>& r) { return r.str(); }
};

template <class R>
concept CoefficientRing = requires(const R& a, const R& b, const Rational& s) {
    { a + b } -> std::convertible_to<R>;
    { a - b } -> std::convertible_to<R>;
    { a * b } -> std::convertible_to<R>;
    { a * s } -> std::convertible_to<R>;
    { ring_traits<R>::is_zero(a) } -> std::convertible_to<bool>;
} && std::constructible_from<R, Rational> && std::default_initializable<R>;

/// Power series c_0 + c_1 T + ... + c_N T^N truncated at order N, with T
/// central. Coefficient products keep operand order, so noncommutative
/// coefficient rings are handled faithfully. Binary operations clamp the
/// result order to the smaller operand order.
template <CoefficientRing R>
class TruncSeries {
public:
    using coefficient_type = R;

    explicit TruncSeries(unsigned order = default_order) : c_(order + 1) {}
    TruncSeries(std::vector<R> coeffs, unsigned order) : c_(std::move(coeffs)) { c_.resize(order + 1); }

    static TruncSeries constant(const R& c, unsigned order) {
        TruncSeries s(order);
        s.c_[0] = c;
        return s;
    }
    /// The series T.
    static TruncSeries identity(unsigned order) {
        TruncSeries s(order);
        if (order >= 1) s.c_[1] = R(Rational(1));
        return s;
    }

    unsigned order() const noexcept { return static_cast<unsigned>(c_.size() - 1); }
    const R& operator[](unsigned i) const { return c_.at(i); }
    R coefficient(unsigned i) const { return i < c_.size() ? c_[i] : R{}; }
    void set(unsigned i, R value) {
        if (i < c_.size()) c_[i] = std::move(value);
    }
    const std::vector<R>& coefficients() const noexcept { return c_; }

    TruncSeries truncated(unsigned order) const {
        return TruncSeries(std::vector<R>(c_.begin(), c_.begin() + std::min<std::size_t>(order + 1, c_.size())),
                           std::min(order, this->order()));
    }

    /// Index of the first nonzero coefficient, or order()+1 for zero.
    unsigned valuation() const {
        for (unsigned i = 0; i < c_.size(); ++i)
            if (!ring_traits<R>::is_zero(c_[i])) return i;
        return order() + 1;
    }
    bool is_zero() const { return valuation() > order(); }

    TruncSeries operator-() const {
        TruncSeries r = *this;
        for (auto& c : r.c_) c = c * Rational(-1);
        return r;
    }
    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
        unsigned n = std::min(a.order(), b.order());
        TruncSeries r(n);
        for (unsigned i = 0; i <= n; ++i) r.c_[i] = a.c_[i] + b.c_[i];
        return r;
    }
    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
        unsigned n = std::min(a.order(), b.order());
        TruncSeries r(n);
        for (unsigned i = 0; i <= n; ++i) r.c_[i] = a.c_[i] - b.c_[i];
        return r;
    }
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
        unsigned n = std::min(a.order(), b.order());
        TruncSeries r(n);
        for (unsigned i = 0; i <= n; ++i) {
            if (ring_traits<R>::is_zero(a.c_[i])) continue;
            for (unsigned j = 0; i + j <= n; ++j) {
                if (ring_traits<R>::is_zero(b.c_[j])) continue;
                r.c_[i + j] = r.c_[i + j] + a.c_[i] * b.c_[j];
            }
        }
        return r;
    }
    friend TruncSeries operator*(const TruncSeries& a, const Rational& s) {
        TruncSeries r = a;
        for (auto& c : r.c_) c = c * s;
        return r;
    }
    /// Left multiplication of every coefficient by a ring element.
    friend TruncSeries operator*(const R& x, const TruncSeries& a) {
        TruncSeries r(a.order());
        for (unsigned i = 0; i <= a.order(); ++i) r.c_[i] = x * a.c_[i];
        return r;
    }

    /// Formal derivative; the order drops by one.
    TruncSeries derivative() const {
        if (order() == 0) return TruncSeries(0);
        TruncSeries r(order() - 1);
        for (unsigned i = 1; i <= order(); ++i) r.c_[i - 1] = c_[i] * Rational(static_cast<long>(i));
        return r;
    }
    /// Multiplication by T^k within the same order.
    TruncSeries shifted(unsigned k) const {
        TruncSeries r(order());
        for (unsigned i = 0; i + k <= order(); ++i) r.c_[i + k] = c_[i];
        return r;
    }
    /// Division by T^k; the low coefficients must vanish and the order drops by k.
    TruncSeries shifted_down(unsigned k) const {
        if (k > order()) throw SeriesError("shifted_down: shift exceeds order");
        for (unsigned i = 0; i < k; ++i)
            if (!ring_traits<R>::is_zero(c_[i])) throw SeriesError("shifted_down: series not divisible by T^k");
        return TruncSeries(std::vector<R>(c_.begin() + k, c_.end()), order() - k);
    }
    /// Substitutes T -> s·T for a scalar s.
    TruncSeries rescaled(const Rational& s) const {
        TruncSeries r = *this;
        Rational f(1);
        for (auto& c : r.c_) {
            c = c * f;
            f *= s;
        }
        return r;
    }

    template <class F>
    auto map_coefficients(F&& f) const {
        using S = std::decay_t<decltype(f(c_[0]))>;
        std::vector<S> out;
        out.reserve(c_.size());
        for (const auto& c : c_) out.push_back(f(c));
        return TruncSeries<S>(std::move(out), order());
    }

    friend bool operator==(const TruncSeries& a, const TruncSeries& b) { return a.c_ == b.c_; }

    std::string str(const std::string& var = "T") const {
        std::ostringstream os;
        bool first = true;
        for (unsigned i = 0; i <= order(); ++i) {
            if (ring_traits<R>::is_zero(c_[i])) continue;
            if (!first) os << " + ";
            first = false;
            std::string c = ring_traits<R>::str(c_[i]);
            bool compound = c.find_first_of("+ ") != std::string::npos;
            if (i == 0) {
                os << c;
                continue;
            }
            if (c != "1") os << (compound ? "(" + c + ")" : c) << "·";
            os << var;
            if (i > 1) os << "^" << i;
        }
        if (first) os << "0";
        os << " + O(" << var << "^" << order() + 1 << ")";
        return os.str();
    }

private:
    std::vector<R> c_;
};

template <CoefficientRing R>
TruncSeries<R> pow(const TruncSeries<R>& f, unsigned n) {
    TruncSeries<R> r = TruncSeries<R>::constant(R(Rational(1)), f.order());
    for (unsigned i = 0; i < n; ++i) r = r * f;
    return r;
}

/// f(g(T)) = Σ f_k g(T)^k with f's coefficients kept on the left.
template <CoefficientRing R>
TruncSeries<R> compose(const TruncSeries<R>& f, const TruncSeries<R>& g) {
    if (!ring_traits<R>::is_zero(g[0])) throw SeriesError("compose: inner series has nonzero constant term");
    unsigned n = std::min(f.order(), g.order());
    TruncSeries<R> result(n);
    TruncSeries<R> power = TruncSeries<R>::constant(R(Rational(1)), n);
    TruncSeries<R> inner = g.truncated(n);
    for (unsigned k = 0; k <= n; ++k) {
        if (!ring_traits<R>::is_zero(f[k])) result = result + f[k] * power;
        if (k < n) power = power * inner;
    }
    return result;
}

/// Compositional inverse g of f = T + ..., solved degree by degree from
/// f(g(T)) = T.
template <CoefficientRing R>
TruncSeries<R> comp_inverse(const TruncSeries<R>& f) {
    unsigned n = f.order();
    if (n == 0) throw SeriesError("comp_inverse: order must be at least 1");
    if (!ring_traits<R>::is_zero(f[0])) throw SeriesError("comp_inverse: nonzero constant term");
    auto lead = ring_traits<R>::as_scalar(f[1]);
    if (!lead || !lead->is_one()) throw SeriesError("comp_inverse: leading coefficient must be 1");
    TruncSeries<R> g = TruncSeries<R>::identity(n);
    for (unsigned d = 2; d <= n; ++d) {
        R excess = compose(f, g)[d];
        g.set(d, g[d] - excess);
    }
    return g;
}

/// Multiplicative inverse; the constant term must be a nonzero scalar, so the
/// left and right inverses coincide.
template <CoefficientRing R>
TruncSeries<R> mul_inverse(const TruncSeries<R>& f) {
    auto c = ring_traits<R>::as_scalar(f[0]);
    if (!c || c->is_zero()) throw SeriesError("mul_inverse: constant term must be an invertible scalar");
    Rational inv = Rational(1) / *c;
    unsigned n = f.order();
    TruncSeries<R> g(n);
    g.set(0, R(inv));
    for (unsigned d = 1; d <= n; ++d) {
        R acc{};
        for (unsigned k = 1; k <= d; ++k) acc = acc + f[k] * g[d - k];
        g.set(d, acc * (-inv));
    }
    return g;
}

enum class ExpLog { exp, log };

/// exp(f) for f(0) = 0, or log(f) for f(0) = 1; Σ fⁿ/n! and Σ (-1)^{n+1}uⁿ/n.
template <CoefficientRing R>
TruncSeries<R> exp_log(const TruncSeries<R>& f, ExpLog direction) {
    unsigned n = f.order();
    if (direction == ExpLog::exp) {
        if (!ring_traits<R>::is_zero(f[0])) throw SeriesError("exp: nonzero constant term");
        TruncSeries<R> sum = TruncSeries<R>::constant(R(Rational(1)), n);
        TruncSeries<R> term = sum;
        for (unsigned k = 1; k <= n; ++k) {
            term = term * f * Rational(1, static_cast<long>(k));
            sum = sum + term;
        }
        return sum;
    }
    auto c = ring_traits<R>::as_scalar(f[0]);
    if (!c || !c->is_one()) throw SeriesError("log: constant term must be 1");
    TruncSeries<R> u = f;
    u.set(0, R{});
    TruncSeries<R> sum(n);
    TruncSeries<R> power = u;
    for (unsigned k = 1; k <= n; ++k) {
        Rational w(k % 2 == 1 ? 1 : -1, static_cast<long>(k));
        sum = sum + power * w;
        power = power * u;
    }
    return sum;
}

template <CoefficientRing R>
TruncSeries<R> exp(const TruncSeries<R>& f) { return exp_log(f, ExpLog::exp); }
template <CoefficientRing R>
TruncSeries<R> log(const TruncSeries<R>& f) { return exp_log(f, ExpLog::log); }

/// Power series in k central variables truncated at total degree N.
template <CoefficientRing R>
class MultiSeries {
public:
    using exponent = std::vector<unsigned>;

    MultiSeries(unsigned arity, unsigned order) : arity_(arity), order_(order) {}

    static MultiSeries constant(const R& c, unsigned arity, unsigned order) {
        MultiSeries s(arity, order);
        s.add(exponent(arity, 0), c);
        return s;
    }
    static MultiSeries variable(unsigned index, unsigned arity, unsigned order) {
        MultiSeries s(arity, order);
        exponent e(arity, 0);
        e.at(index) = 1;
        s.add(e, R(Rational(1)));
        return s;
    }
    /// Embeds a univariate series f(x_index).
    static MultiSeries from_univariate(const TruncSeries<R>& f, unsigned index, unsigned arity, unsigned order) {
        MultiSeries s(arity, order);
        for (unsigned i = 0; i <= std::min(order, f.order()); ++i) {
            exponent e(arity, 0);
            e.at(index) = i;
            s.add(e, f[i]);
        }
        return s;
    }

    unsigned arity() const noexcept { return arity_; }
    unsigned order() const noexcept { return order_; }
    const std::map<exponent, R>& terms() const& noexcept { return terms_; }
    std::map<exponent, R> terms() && { return std::move(terms_); }
    R coefficient(const exponent& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? R{} : it->second;
    }

    void add(const exponent& e, const R& c) {
        unsigned deg = 0;
        for (unsigned x : e) deg += x;
        if (deg > order_ || ring_traits<R>::is_zero(c)) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second = it->second + c;
            if (ring_traits<R>::is_zero(it->second)) terms_.erase(it);
        }
    }

    friend MultiSeries operator+(const MultiSeries& a, const MultiSeries& b) {
        check(a, b);
        MultiSeries r(a.arity_, std::min(a.order_, b.order_));
        for (const auto& [e, c] : a.terms_) r.add(e, c);
        for (const auto& [e, c] : b.terms_) r.add(e, c);
        return r;
    }
    friend MultiSeries operator-(const MultiSeries& a, const MultiSeries& b) {
        return a + b * Rational(-1);
    }
    friend MultiSeries operator*(const MultiSeries& a, const Rational& s) {
        MultiSeries r(a.arity_, a.order_);
        for (const auto& [e, c] : a.terms_) r.add(e, c * s);
        return r;
    }
    friend MultiSeries operator*(const MultiSeries& a, const MultiSeries& b) {
        check(a, b);
        MultiSeries r(a.arity_, std::min(a.order_, b.order_));
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                exponent e(a.arity_);
                for (unsigned i = 0; i < a.arity_; ++i) e[i] = ea[i] + eb[i];
                r.add(e, ca * cb);
            }
        return r;
    }
    friend MultiSeries operator*(const R& x, const MultiSeries& a) {
        MultiSeries r(a.arity_, a.order_);
        for (const auto& [e, c] : a.terms_) r.add(e, x * c);
        return r;
    }

    bool has_zero_constant_term() const { return !terms_.contains(exponent(arity_, 0)); }

    template <class F>
    auto map_coefficients(F&& f) const {
        using S = std::decay_t<decltype(f(std::declval<const R&>()))>;
        MultiSeries<S> out(arity_, order_);
        for (const auto& [e, c] : terms_) out.add(e, f(c));
        return out;
    }

    friend bool operator==(const MultiSeries& a, const MultiSeries& b) {
        return a.arity_ == b.arity_ && a.order_ == b.order_ && a.terms_ == b.terms_;
    }

private:
    static void check(const MultiSeries& a, const MultiSeries& b) {
        if (a.arity_ != b.arity_) throw SeriesError("MultiSeries: arity mismatch");
    }

    unsigned arity_;
    unsigned order_;
    std::map<exponent, R> terms_;
};

template <CoefficientRing R>
MultiSeries<R> pow(const MultiSeries<R>& s, unsigned n) {
    MultiSeries<R> r = MultiSeries<R>::constant(R(Rational(1)), s.arity(), s.order());
    for (unsigned i = 0; i < n; ++i) r = r * s;
    return r;
}

/// f(g) = Σ f_k g^k for a univariate f and multivariate g with g(0) = 0.
template <CoefficientRing R>
MultiSeries<R> compose(const TruncSeries<R>& f, const MultiSeries<R>& g) {
    if (!g.has_zero_constant_term()) throw SeriesError("compose: inner series has nonzero constant term");
    unsigned n = std::min(f.order(), g.order());
    MultiSeries<R> result(g.arity(), n);
    MultiSeries<R> power = MultiSeries<R>::constant(R(Rational(1)), g.arity(), n);
    for (unsigned k = 0; k <= n; ++k) {
        if (!ring_traits<R>::is_zero(f[k])) result = result + f[k] * power;
        if (k < n) power = power * g;
    }
    return result;
}

/// F(A, B) = Σ F_{ij} A^i B^j for a bivariate F, coefficients on the left.
template <CoefficientRing R>
MultiSeries<R> substitute2(const MultiSeries<R>& F, const MultiSeries<R>& a, const MultiSeries<R>& b) {
    if (F.arity() != 2) throw SeriesError("substitute2: outer series must be bivariate");
    if (!a.has_zero_constant_term() || !b.has_zero_constant_term())
        throw SeriesError("substitute2: arguments must have zero constant term");
    unsigned n = std::min({F.order(), a.order(), b.order()});
    std::vector<MultiSeries<R>> pa{MultiSeries<R>::constant(R(Rational(1)), a.arity(), n)};
    std::vector<MultiSeries<R>> pb{MultiSeries<R>::constant(R(Rational(1)), b.arity(), n)};
    for (unsigned k = 1; k <= n; ++k) {
        pa.push_back(pa.back() * a);
        pb.push_back(pb.back() * b);
    }
    MultiSeries<R> result(a.arity(), n);
    for (const auto& [e, c] : F.terms()) {
        if (e[0] + e[1] > n) continue;
        result = result + c * (pa[e[0]] * pb[e[1]]);
    }
    return result;
}

}  // namespace toricnet

#endif  // TORICNET_CORE_SERIES_HPP
