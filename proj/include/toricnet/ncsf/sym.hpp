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

#ifndef TORICNET_NCSF_SYM_HPP
#define TORICNET_NCSF_SYM_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include <toricnet/core/errors.hpp>
#include <toricnet/core/linear_combination.hpp>
#include <toricnet/core/matrix.hpp>
#include <toricnet/ncsf/compositions.hpp>

namespace toricnet::ncsf {

enum class SymBasis { e, h, p, m, s };

inline std::string basis_name(SymBasis b) {
    switch (b) {
        case SymBasis::e: return "e";
        case SymBasis::h: return "h";
        case SymBasis::p: return "p";
        case SymBasis::m: return "m";
        case SymBasis::s: return "s";
    }
    return "?";
}

inline SymBasis parse_basis(const std::string& name) {
    if (name == "e") return SymBasis::e;
    if (name == "h") return SymBasis::h;
    if (name == "p") return SymBasis::p;
    if (name == "m") return SymBasis::m;
    if (name == "s") return SymBasis::s;
    throw InputError("unknown symmetric-function basis '" + name + "'");
}

inline constexpr unsigned sym_degree_cap = 10;

/// Symmetric function expanded in one of the classical bases, indexed by
/// partitions.
class SymF {
public:
    using container = std::map<Partition, Rational>;

    explicit SymF(SymBasis basis = SymBasis::e) : basis_(basis) {}
    static SymF scalar(SymBasis basis, const Rational& c) {
        SymF f(basis);
        f.add_term({}, c);
        return f;
    }
    static SymF single(SymBasis basis, Partition lambda, const Rational& c = Rational(1)) {
        SymF f(basis);
        f.add_term(sorted_partition(std::move(lambda)), c);
        return f;
    }

    SymBasis basis() const noexcept { return basis_; }
    const container& terms() const& noexcept { return terms_; }
    container terms() && { return std::move(terms_); }
    bool is_zero() const noexcept { return terms_.empty(); }
    Rational coefficient(const Partition& lambda) const {
        auto it = terms_.find(lambda);
        return it == terms_.end() ? Rational(0) : it->second;
    }
    void add_term(const Partition& lambda, const Rational& c) {
        if (!is_partition(lambda)) throw InputError("SymF index is not a partition");
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(lambda, c);
        if (!inserted && (it->second += c).is_zero()) terms_.erase(it);
    }
    unsigned max_degree() const {
        unsigned d = 0;
        for (const auto& [k, c] : terms_) d = std::max(d, weight(k));
        return d;
    }

    SymF operator-() const { return *this * Rational(-1); }
    friend SymF operator*(SymF a, const Rational& s) {
        if (s.is_zero()) return SymF(a.basis_);
        for (auto& [k, c] : a.terms_) c *= s;
        return a;
    }

    /// Coefficient-wise equality; both sides must use the same basis.
    friend bool operator==(const SymF& a, const SymF& b) { return a.basis_ == b.basis_ && a.terms_ == b.terms_; }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [k, c] = *it;
            os << (first ? (c.sign() < 0 ? "-" : "") : (c.sign() < 0 ? " - " : " + "));
            first = false;
            Rational mag = abs(c);
            if (k.empty()) {
                os << mag.str();
                continue;
            }
            if (!mag.is_one()) os << mag.str() << "·";
            os << render_index(basis_name(basis_), k);
        }
        return os.str();
    }

private:
    SymBasis basis_;
    container terms_;
};

namespace detail {

// Polynomials in d <= 10 variables; exponents packed 4 bits per variable.
using Packed = std::uint64_t;
using PackedPoly = std::unordered_map<Packed, std::int64_t>;

inline unsigned exponent_of(Packed m, unsigned i) { return static_cast<unsigned>((m >> (4 * i)) & 0xF); }

// Sum of the weakly decreasing hull of the exponent vector: the least degree
// of a partition-shaped monomial divisible by m.
inline unsigned hull_degree(Packed m, unsigned vars) {
    unsigned total = 0, running = 0;
    for (unsigned i = vars; i-- > 0;) {
        running = std::max(running, exponent_of(m, i));
        total += running;
    }
    return total;
}

inline PackedPoly multiply(const PackedPoly& a, const PackedPoly& b, unsigned vars, unsigned cap) {
    PackedPoly r;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) {
            bool fits = true;
            for (unsigned i = 0; i < vars && fits; ++i) fits = exponent_of(ma, i) + exponent_of(mb, i) <= cap;
            if (!fits) continue;
            Packed m = ma + mb;
            if (hull_degree(m, vars) > cap) continue;
            r[m] += ca * cb;
        }
    for (auto it = r.begin(); it != r.end();) it = it->second == 0 ? r.erase(it) : std::next(it);
    return r;
}

// e_k, h_k or p_k in `vars` variables.
inline PackedPoly generator(SymBasis b, unsigned k, unsigned vars) {
    PackedPoly out;
    if (b == SymBasis::p) {
        for (unsigned i = 0; i < vars; ++i) out[Packed(k) << (4 * i)] = 1;
        return out;
    }
    std::function<void(unsigned, unsigned, Packed)> rec = [&](unsigned start, unsigned left, Packed m) {
        if (left == 0) {
            out[m] += 1;
            return;
        }
        for (unsigned i = start; i < vars; ++i) {
            if (b == SymBasis::e) {
                rec(i + 1, left - 1, m + (Packed(1) << (4 * i)));
            } else {
                rec(i, left - 1, m + (Packed(1) << (4 * i)));
            }
        }
    };
    rec(0, k, 0);
    return out;
}

inline Packed pack(const Partition& mu) {
    Packed m = 0;
    for (std::size_t i = 0; i < mu.size(); ++i) m |= Packed(mu[i]) << (4 * i);
    return m;
}

struct ESymbol { static constexpr const char* symbol = "e"; };
struct HSymbol { static constexpr const char* symbol = "h"; };

// Transition matrices: row lambda holds the m-expansion of basis element lambda.
class TransitionCache {
public:
    static TransitionCache& instance() {
        static TransitionCache cache;
        return cache;
    }

    const RatMatrix& to_m(SymBasis b, unsigned d) {
        std::lock_guard lock(mutex_);
        return to_m_locked(b, d);
    }
    const RatMatrix& from_m(SymBasis b, unsigned d) {
        std::lock_guard lock(mutex_);
        auto key = std::make_pair(b, d);
        if (auto it = inverse_.find(key); it != inverse_.end()) return it->second;
        const RatMatrix& t = to_m_locked(b, d);
        std::size_t n = t.rows();
        RatMatrix aug(n, 2 * n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) aug(i, j) = t(i, j);
            aug(i, n + i) = 1;
        }
        rref(aug);
        RatMatrix inv(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
        return inverse_.emplace(key, std::move(inv)).first->second;
    }

private:
    const RatMatrix& to_m_locked(SymBasis b, unsigned d) {
        auto key = std::make_pair(b, d);
        if (auto it = forward_.find(key); it != forward_.end()) return it->second;
        auto parts = partitions(d);
        RatMatrix t(parts.size(), parts.size());
        if (b == SymBasis::m) {
            t = RatMatrix::identity(parts.size());
        } else if (b == SymBasis::s) {
            for (std::size_t r = 0; r < parts.size(); ++r) {
                auto [via, expansion] = jacobi_trudi(parts[r]);
                const RatMatrix& base = to_m_locked(via, d);
                for (const auto& [lambda, c] : expansion)
                    for (std::size_t row = 0; row < parts.size(); ++row)
                        if (parts[row] == lambda)
                            for (std::size_t j = 0; j < parts.size(); ++j) t(r, j) += c * base(row, j);
            }
        } else {
            unsigned vars = std::max(d, 1u);
            for (std::size_t r = 0; r < parts.size(); ++r) {
                PackedPoly poly{{0, 1}};
                for (unsigned k : parts[r]) poly = multiply(poly, generator(b, k, vars), vars, d);
                for (std::size_t j = 0; j < parts.size(); ++j) {
                    auto it = poly.find(pack(parts[j]));
                    if (it != poly.end()) t(r, j) = Rational(static_cast<long>(it->second));
                }
            }
        }
        return forward_.emplace(key, std::move(t)).first->second;
    }

    // s_lambda = det(h_{lambda_i - i + j}) or det(e_{lambda'_i - i + j}); the
    // smaller matrix is used. Returns the basis and the partition expansion.
    static std::pair<SymBasis, std::map<Partition, Rational>> jacobi_trudi(const Partition& lambda) {
        Partition conj;
        for (unsigned i = 1; !lambda.empty() && i <= lambda.front(); ++i) {
            unsigned count = 0;
            for (unsigned p : lambda) count += p >= i;
            conj.push_back(count);
        }
        bool use_h = lambda.size() <= conj.size();
        const Partition& rows = use_h ? lambda : conj;
        using Poly = LinComb<MultisetPolicy<HSymbol>>;
        std::size_t n = rows.size();
        Matrix<Poly> jt(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                long idx = static_cast<long>(rows[i]) - static_cast<long>(i) + static_cast<long>(j);
                if (idx == 0) jt(i, j) = Poly(Rational(1));
                else if (idx > 0) jt(i, j) = Poly::basis({static_cast<unsigned>(idx)});
            }
        Poly det = expansion_determinant(jt);
        std::map<Partition, Rational> out;
        for (const auto& [k, c] : det.terms()) out[sorted_partition(k)] += c;
        return {use_h ? SymBasis::h : SymBasis::e, out};
    }

    std::mutex mutex_;
    std::map<std::pair<SymBasis, unsigned>, RatMatrix> forward_;
    std::map<std::pair<SymBasis, unsigned>, RatMatrix> inverse_;
};

}  // namespace detail

/// Exact change of basis among e, h, p, m, s (degree <= 10), through the
/// monomial basis computed by polynomial realization.
inline SymF sym_convert(const SymF& f, SymBasis to) {
    if (f.basis() == to) return f;
    if (f.max_degree() > sym_degree_cap)
        throw InputError("symmetric-function degree exceeds the cap of " + std::to_string(sym_degree_cap));
    std::map<unsigned, std::vector<Rational>> by_degree;
    SymF out(to);
    auto& cache = detail::TransitionCache::instance();
    for (const auto& [lambda, c] : f.terms()) {
        unsigned d = weight(lambda);
        if (d == 0) {
            out.add_term({}, c);
            continue;
        }
        auto parts = partitions(d);
        auto& v = by_degree[d];
        v.resize(parts.size());
        const RatMatrix& t = cache.to_m(f.basis(), d);
        std::size_t row = static_cast<std::size_t>(std::find(parts.begin(), parts.end(), lambda) - parts.begin());
        for (std::size_t j = 0; j < parts.size(); ++j) v[j] += c * t(row, j);
    }
    for (const auto& [d, v] : by_degree) {
        auto parts = partitions(d);
        const RatMatrix& inv = cache.from_m(to, d);
        // v (row vector in m) = x * T_to, so x = v * T_to^{-1}.
        for (std::size_t j = 0; j < parts.size(); ++j) {
            Rational x;
            for (std::size_t i = 0; i < parts.size(); ++i) x += v[i] * inv(i, j);
            out.add_term(parts[j], x);
        }
    }
    return out;
}

namespace detail {
using EPoly = LinComb<MultisetPolicy<ESymbol>>;

inline EPoly to_epoly(const SymF& f) {
    EPoly r;
    SymF in_e = sym_convert(f, SymBasis::e);
    for (const auto& [lambda, c] : in_e.terms())
        r.add_term(Partition(lambda.rbegin(), lambda.rend()), c);
    return r;
}

inline SymF from_epoly(const EPoly& p, SymBasis to) {
    SymF f(SymBasis::e);
    for (const auto& [k, c] : p.terms()) f.add_term(sorted_partition(k), c);
    return sym_convert(f, to);
}
}  // namespace detail

/// Sum; the result uses the basis of the left operand.
inline SymF operator+(const SymF& a, const SymF& b) {
    SymF r = a;
    SymF converted = sym_convert(b, a.basis());
    for (const auto& [k, c] : converted.terms()) r.add_term(k, c);
    return r;
}
inline SymF operator-(const SymF& a, const SymF& b) { return a + (-b); }

/// Product; the result uses the basis of the left operand.
inline SymF operator*(const SymF& a, const SymF& b) {
    return detail::from_epoly(detail::to_epoly(a) * detail::to_epoly(b), a.basis());
}

enum class Involution { sign, inverse };

/// Ring involutions: sign sends e_k to (-1)^k e_k; inverse sends e_k to
/// (-1)^k h_k. Result is expressed in the basis of the argument.
inline SymF involution(const SymF& f, Involution which) {
    std::map<unsigned, detail::EPoly> image;
    auto image_of = [&](unsigned k) -> const detail::EPoly& {
        auto it = image.find(k);
        if (it != image.end()) return it->second;
        Rational sign = k % 2 ? Rational(-1) : Rational(1);
        SymF g = which == Involution::sign ? SymF::single(SymBasis::e, {k}, sign)
                                           : SymF::single(SymBasis::h, {k}, sign);
        return image.emplace(k, detail::to_epoly(g)).first->second;
    };
    detail::EPoly out;
    detail::EPoly source = detail::to_epoly(f);
    for (const auto& [key, c] : source.terms()) {
        detail::EPoly term(c);
        for (unsigned k : key) term = term * image_of(k);
        out += term;
    }
    return detail::from_epoly(out, f.basis());
}

/// Hall inner product: <h_lambda, m_mu> = delta.
inline Rational hall_pairing(const SymF& f, const SymF& g) {
    SymF fh = sym_convert(f, SymBasis::h);
    SymF gm = sym_convert(g, SymBasis::m);
    Rational total;
    for (const auto& [lambda, c] : fh.terms()) total += c * gm.coefficient(lambda);
    return total;
}

}  // namespace toricnet::ncsf

#endif  // TORICNET_NCSF_SYM_HPP
