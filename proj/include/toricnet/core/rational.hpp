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

#ifndef TORICNET_CORE_RATIONAL_HPP
#define TORICNET_CORE_RATIONAL_HPP

#include <cmath>
#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace toricnet {

using BigInt = mpz_class;

/// Exact rational number in lowest terms with positive denominator.
///
/// Thin value wrapper over GMP's mpq_class; every constructor canonicalizes so
/// the representation of a value is unique (zero is 0/1).
class Rational {
public:
    Rational() = default;
    Rational(long v) : q_(v) {}
    Rational(int v) : q_(static_cast<long>(v)) {}
    Rational(const BigInt& v) : q_(v) {}
    Rational(const BigInt& num, const BigInt& den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }
    Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}
    explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    /// Exact value of a finite double (binary expansion, no rounding).
    static Rational from_double(double d) {
        if (!std::isfinite(d)) throw std::domain_error("Rational: non-finite double");
        mpq_class q;
        mpq_set_d(q.get_mpq_t(), d);
        return Rational(q);
    }

    /// Parses "p", "-p", "p/q"; also accepts plain decimals "1.25" exactly.
    static Rational parse(std::string_view text) {
        std::string s(text);
        auto b = s.find_first_not_of(" \t");
        auto e = s.find_last_not_of(" \t");
        if (b == std::string::npos) throw std::invalid_argument("empty rational literal");
        s = s.substr(b, e - b + 1);
        if (auto dot = s.find('.'); dot != std::string::npos && s.find('/') == std::string::npos) {
            std::string digits = s.substr(0, dot) + s.substr(dot + 1);
            if (digits.empty() || digits == "-" || digits == "+")
                throw std::invalid_argument("malformed rational literal '" + s + "'");
            BigInt den = 1;
            for (std::size_t i = dot + 1; i < s.size(); ++i) den *= 10;
            BigInt num;
            if (digits[0] == '+') digits.erase(0, 1);
            if (num.set_str(digits, 10) != 0)
                throw std::invalid_argument("malformed rational literal '" + s + "'");
            return Rational(num, den);
        }
        if (!s.empty() && s[0] == '+') s.erase(0, 1);
        mpq_class q;
        if (q.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational literal '" + s + "'");
        if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
        return Rational(q);
    }

    const mpq_class& raw() const noexcept { return q_; }
    BigInt num() const { return q_.get_num(); }
    BigInt den() const { return q_.get_den(); }

    bool is_zero() const noexcept { return sgn(q_) == 0; }
    bool is_one() const noexcept { return q_ == 1; }
    bool is_integer() const noexcept { return q_.get_den() == 1; }
    int sign() const noexcept { return sgn(q_); }
    double to_double() const { return q_.get_d(); }

    /// "p/q", or "p" when the denominator is 1.
    std::string str() const { return q_.get_str(10); }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    mpq_class q_{0};
};

inline Rational pow(Rational base, unsigned exp) {
    Rational r(1);
    while (exp) {
        if (exp & 1u) r *= base;
        base *= base;
        exp >>= 1u;
    }
    return r;
}

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

inline BigInt factorial(unsigned n) {
    BigInt r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

inline BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

}  // namespace toricnet

#endif  // TORICNET_CORE_RATIONAL_HPP
