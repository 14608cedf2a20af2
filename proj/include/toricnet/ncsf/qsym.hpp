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

#ifndef TORICNET_NCSF_QSYM_HPP
#define TORICNET_NCSF_QSYM_HPP

#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <toricnet/core/sparse_poly.hpp>
#include <toricnet/ncsf/compositions.hpp>

namespace toricnet::ncsf {

/// Quasisymmetric function in the monomial basis M_alpha.
class QSF {
public:
    using container = std::map<Composition, Rational>;

    QSF() = default;
    explicit QSF(const Rational& scalar) { add_term({}, scalar); }
    static QSF M(Composition alpha, const Rational& c = Rational(1)) {
        QSF q;
        q.add_term(alpha, c);
        return q;
    }

    const container& terms() const& noexcept { return terms_; }
    container terms() && { return std::move(terms_); }
    bool is_zero() const noexcept { return terms_.empty(); }
    Rational coefficient(const Composition& alpha) const {
        auto it = terms_.find(alpha);
        return it == terms_.end() ? Rational(0) : it->second;
    }
    void add_term(const Composition& alpha, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(alpha, c);
        if (!inserted && (it->second += c).is_zero()) terms_.erase(it);
    }

    QSF& operator+=(const QSF& o) {
        for (const auto& [k, c] : o.terms_) add_term(k, c);
        return *this;
    }
    QSF& operator-=(const QSF& o) {
        for (const auto& [k, c] : o.terms_) add_term(k, -c);
        return *this;
    }
    friend QSF operator+(QSF a, const QSF& b) { return a += b; }
    friend QSF operator-(QSF a, const QSF& b) { return a -= b; }
    friend QSF operator*(QSF a, const Rational& s) {
        if (s.is_zero()) return QSF();
        for (auto& [k, c] : a.terms_) c *= s;
        return a;
    }
    friend bool operator==(const QSF& a, const QSF& b) { return a.terms_ == b.terms_; }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [k, c] : terms_) {
            os << (first ? (c.sign() < 0 ? "-" : "") : (c.sign() < 0 ? " - " : " + "));
            first = false;
            Rational mag = abs(c);
            if (k.empty()) {
                os << mag.str();
                continue;
            }
            if (!mag.is_one()) os << mag.str() << "·";
            os << render_index("M", k);
        }
        return os.str();
    }

private:
    container terms_;
};

/// Quasi-shuffle of two compositions.
inline QSF quasi_shuffle(const Composition& a, const Composition& b) {
    if (a.empty()) return QSF::M(b);
    if (b.empty()) return QSF::M(a);
    QSF out;
    auto prepend = [&out](unsigned head, const QSF& tail) {
        for (const auto& [k, c] : tail.terms()) {
            Composition w{head};
            w.insert(w.end(), k.begin(), k.end());
            out.add_term(w, c);
        }
    };
    Composition a_rest(a.begin() + 1, a.end());
    Composition b_rest(b.begin() + 1, b.end());
    prepend(a.front(), quasi_shuffle(a_rest, b));
    prepend(b.front(), quasi_shuffle(a, b_rest));
    prepend(a.front() + b.front(), quasi_shuffle(a_rest, b_rest));
    return out;
}

inline QSF qsym_product(const QSF& a, const QSF& b) {
    QSF out;
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) out += quasi_shuffle(ka, kb) * (ca * cb);
    return out;
}

inline QSF operator*(const QSF& a, const QSF& b) { return qsym_product(a, b); }

inline std::string x_variable(unsigned i) { return "x" + std::to_string(i); }

/// M_alpha in k variables: sum over i_1 < ... < i_l <= k of prod x_{i_j}^{alpha_j}.
inline SparsePoly qsym_realize(const Composition& alpha, unsigned k) {
    SparsePoly out;
    std::vector<unsigned> idx;
    std::function<void(std::size_t, unsigned)> rec = [&](std::size_t pos, unsigned next) {
        if (pos == alpha.size()) {
            SparsePoly mono(Rational(1));
            for (std::size_t j = 0; j < alpha.size(); ++j) mono *= variable(x_variable(idx[j]), alpha[j]);
            out += mono;
            return;
        }
        for (unsigned i = next; i + (alpha.size() - pos - 1) <= k; ++i) {
            idx.push_back(i);
            rec(pos + 1, i + 1);
            idx.pop_back();
        }
    };
    rec(0, 1);
    return out;
}

inline SparsePoly qsym_realize(const QSF& q, unsigned k) {
    SparsePoly out;
    for (const auto& [alpha, c] : q.terms()) out += qsym_realize(alpha, k) * c;
    return out;
}

}  // namespace toricnet::ncsf

#endif  // TORICNET_NCSF_QSYM_HPP
