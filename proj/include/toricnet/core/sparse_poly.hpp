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

#ifndef TORICNET_CORE_SPARSE_POLY_HPP
#define TORICNET_CORE_SPARSE_POLY_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <toricnet/core/linear_combination.hpp>

namespace toricnet {

/// Commutative monomial over named variables: (name, exponent) pairs sorted by
/// name, exponents positive. Names are the stable variable registry.
struct NamedMonomialPolicy {
    using key_type = std::vector<std::pair<std::string, unsigned>>;
    static key_type unit() { return {}; }
    static key_type multiply(const key_type& a, const key_type& b) {
        key_type r;
        r.reserve(a.size() + b.size());
        auto i = a.begin();
        auto j = b.begin();
        while (i != a.end() || j != b.end()) {
            if (j == b.end() || (i != a.end() && i->first < j->first)) {
                r.push_back(*i++);
            } else if (i == a.end() || j->first < i->first) {
                r.push_back(*j++);
            } else {
                r.emplace_back(i->first, i->second + j->second);
                ++i;
                ++j;
            }
        }
        return r;
    }
    static unsigned degree(const key_type& k) {
        unsigned d = 0;
        for (const auto& [v, e] : k) d += e;
        return d;
    }
    static std::string render(const key_type& k) {
        if (k.empty()) return "1";
        std::string s;
        for (const auto& [v, e] : k) {
            if (!s.empty()) s += "*";
            s += v;
            if (e > 1) s += "^" + std::to_string(e);
        }
        return s;
    }
};

/// Multivariate polynomial with rational coefficients over named variables.
using SparsePoly = LinComb<NamedMonomialPolicy>;

inline SparsePoly variable(const std::string& name, unsigned exponent = 1) {
    if (exponent == 0) return SparsePoly(Rational(1));
    return SparsePoly::basis({{name, exponent}});
}

/// Substitutes rational values for variables; every variable must be bound.
inline Rational evaluate(const SparsePoly& p, const std::map<std::string, Rational>& values) {
    Rational total;
    for (const auto& [mono, c] : p.terms()) {
        Rational term = c;
        for (const auto& [v, e] : mono) {
            auto it = values.find(v);
            if (it == values.end()) throw std::out_of_range("unbound variable '" + v + "'");
            term *= pow(it->second, e);
        }
        total += term;
    }
    return total;
}

/// Substitutes only the bound variables, leaving the others symbolic.
inline SparsePoly substitute(const SparsePoly& p, const std::map<std::string, Rational>& values) {
    SparsePoly r;
    for (const auto& [mono, c] : p.terms()) {
        Rational coeff = c;
        NamedMonomialPolicy::key_type rest;
        for (const auto& [v, e] : mono) {
            if (auto it = values.find(v); it != values.end()) {
                coeff *= pow(it->second, e);
            } else {
                rest.emplace_back(v, e);
            }
        }
        r.add_term(rest, coeff);
    }
    return r;
}

inline bool is_constant(const SparsePoly& p) {
    return p.is_zero() || (p.size() == 1 && p.terms().begin()->first.empty());
}

}  // namespace toricnet

#endif  // TORICNET_CORE_SPARSE_POLY_HPP
