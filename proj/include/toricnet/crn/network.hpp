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

#ifndef TORICNET_CRN_NETWORK_HPP
#define TORICNET_CRN_NETWORK_HPP

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <toricnet/core/errors.hpp>
#include <toricnet/core/rational.hpp>
#include <toricnet/core/sparse_poly.hpp>

namespace toricnet::crn {

/// Reaction rate constant: exact rational, double, or a symbol.
struct Rate {
    enum class Kind { rational, floating, symbol };

    Kind kind = Kind::rational;
    Rational value{1};
    double floating = 0.0;
    std::string name;

    static Rate exact(Rational v) { return {Kind::rational, std::move(v), 0.0, {}}; }
    static Rate real(double v) { return {Kind::floating, Rational::from_double(v), v, {}}; }
    static Rate symbolic(std::string n) { return {Kind::symbol, Rational(0), 0.0, std::move(n)}; }

    bool is_symbolic() const noexcept { return kind == Kind::symbol; }

    /// The rate as a polynomial: a constant or a single variable.
    SparsePoly as_poly() const { return is_symbolic() ? variable(name) : SparsePoly(value); }

    std::string str() const {
        switch (kind) {
            case Kind::symbol: return name;
            case Kind::floating: {
                std::ostringstream os;
                os.precision(17);
                os << floating;
                return os.str();
            }
            case Kind::rational: break;
        }
        return value.str();
    }
};

struct Reaction {
    std::size_t source;
    std::size_t target;
    Rate rate;
};

using Complex = std::vector<unsigned>;
using Bindings = std::map<std::string, Rational>;

class ParseError : public InputError {
public:
    ParseError(std::size_t line, const std::string& what)
        : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Reaction network: species, distinct complexes (columns of the complex
/// matrix Y), and rated directed reactions between complexes.
class Network {
public:
    Network() = default;

    /// Validating constructor. Complexes are padded to the species count.
    Network(std::vector<std::string> species, std::vector<Complex> complexes, std::vector<Reaction> reactions,
            Bindings defaults = {})
        : species_(std::move(species)), complexes_(std::move(complexes)), reactions_(std::move(reactions)),
          defaults_(std::move(defaults)) {
        for (auto& c : complexes_) {
            if (c.size() > species_.size()) throw InputError("complex longer than species list");
            c.resize(species_.size(), 0);
        }
        for (std::size_t i = 0; i < complexes_.size(); ++i)
            for (std::size_t j = i + 1; j < complexes_.size(); ++j)
                if (complexes_[i] == complexes_[j]) throw InputError("duplicate complex " + complex_name(i));
        std::vector<bool> used(complexes_.size(), false);
        for (const auto& r : reactions_) {
            if (r.source >= complexes_.size() || r.target >= complexes_.size())
                throw InputError("reaction refers to an unknown complex");
            if (r.source == r.target) throw InputError("loop reaction on complex " + complex_name(r.source));
            if (!r.rate.is_symbolic() && r.rate.value.sign() <= 0) throw InputError("rates must be positive");
            used[r.source] = used[r.target] = true;
        }
        for (std::size_t i = 0; i < used.size(); ++i)
            if (!used[i]) throw InputError("complex " + complex_name(i) + " occurs in no reaction");
    }

    std::size_t species_count() const noexcept { return species_.size(); }
    std::size_t complex_count() const noexcept { return complexes_.size(); }
    const std::vector<std::string>& species() const noexcept { return species_; }
    const std::vector<Complex>& complexes() const noexcept { return complexes_; }
    const std::vector<Reaction>& reactions() const noexcept { return reactions_; }
    /// Values attached to symbols in the text (`k1=2`), used when no explicit
    /// binding is given.
    const Bindings& default_bindings() const noexcept { return defaults_; }

    std::vector<std::string> rate_symbols() const {
        std::vector<std::string> names;
        for (const auto& r : reactions_)
            if (r.rate.is_symbolic()) names.push_back(r.rate.name);
        std::sort(names.begin(), names.end());
        names.erase(std::unique(names.begin(), names.end()), names.end());
        return names;
    }

    std::string complex_name(std::size_t k) const {
        const auto& c = complexes_.at(k);
        std::string s;
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (c[i] == 0) continue;
            if (!s.empty()) s += "+";
            if (c[i] > 1) s += std::to_string(c[i]);
            s += species_[i];
        }
        return s.empty() ? "0" : s;
    }

private:
    std::vector<std::string> species_;
    std::vector<Complex> complexes_;
    std::vector<Reaction> reactions_;
    Bindings defaults_;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

inline bool is_identifier(std::string_view s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    return std::all_of(s.begin(), s.end(),
                       [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        auto pos = s.find(sep, start);
        parts.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return parts;
}

class NetworkBuilder {
public:
    std::size_t complex_index(std::string_view text, std::size_t line) {
        text = trim(text);
        if (text.empty()) throw ParseError(line, "missing complex");
        std::map<std::size_t, unsigned> counts;
        if (text != "0" && text != "∅") {
            for (auto term : split(text, '+')) {
                term = trim(term);
                std::size_t digits = 0;
                while (digits < term.size() && std::isdigit(static_cast<unsigned char>(term[digits]))) ++digits;
                unsigned coeff = 1;
                if (digits > 0) {
                    coeff = static_cast<unsigned>(std::stoul(std::string(term.substr(0, digits))));
                    if (coeff == 0) throw ParseError(line, "zero stoichiometric coefficient in '" + std::string(term) + "'");
                }
                auto name = trim(term.substr(digits));
                if (!term.empty() && term[0] == '-')
                    throw ParseError(line, "negative stoichiometric coefficient in '" + std::string(term) + "'");
                if (!is_identifier(name)) throw ParseError(line, "malformed complex term '" + std::string(term) + "'");
                counts[species_index(std::string(name))] += coeff;
            }
        }
        Complex c(species_.size(), 0);
        for (auto [i, k] : counts) c[i] = k;
        for (std::size_t i = 0; i < complexes_.size(); ++i) {
            Complex padded = complexes_[i];
            padded.resize(species_.size(), 0);
            if (padded == c) return i;
        }
        complexes_.push_back(std::move(c));
        return complexes_.size() - 1;
    }

    Rate rate(std::string_view text, std::size_t line) {
        text = trim(text);
        if (text.empty()) throw ParseError(line, "missing rate");
        if (auto eq = text.find('='); eq != std::string_view::npos) {
            std::string name(trim(text.substr(0, eq)));
            if (!is_identifier(name)) throw ParseError(line, "malformed rate name '" + name + "'");
            Rate value = numeric_rate(trim(text.substr(eq + 1)), line);
            auto [it, inserted] = defaults_.try_emplace(name, value.value);
            if (!inserted && it->second != value.value)
                throw ParseError(line, "rate '" + name + "' bound to conflicting values");
            return Rate::symbolic(name);
        }
        if (is_identifier(text)) return Rate::symbolic(std::string(text));
        return numeric_rate(text, line);
    }

    void add(std::size_t src, std::size_t dst, Rate r, std::size_t line) {
        if (src == dst) throw ParseError(line, "loop reaction (source equals target)");
        reactions_.push_back({src, dst, std::move(r)});
    }

    Network finish() {
        for (auto& c : complexes_) c.resize(species_.size(), 0);
        return Network(species_, complexes_, reactions_, defaults_);
    }

private:
    std::size_t species_index(const std::string& name) {
        auto it = std::find(species_.begin(), species_.end(), name);
        if (it != species_.end()) return static_cast<std::size_t>(it - species_.begin());
        species_.push_back(name);
        return species_.size() - 1;
    }

    static Rate numeric_rate(std::string_view text, std::size_t line) {
        std::string s(text);
        try {
            if (s.find_first_of(".eE") != std::string::npos && s.find('/') == std::string::npos) {
                std::size_t used = 0;
                double v = std::stod(s, &used);
                if (used != s.size()) throw std::invalid_argument(s);
                if (!(v > 0)) throw ParseError(line, "rates must be positive");
                return Rate::real(v);
            }
            Rational v = Rational::parse(s);
            if (v.sign() <= 0) throw ParseError(line, "rates must be positive");
            return Rate::exact(v);
        } catch (const ParseError&) {
            throw;
        } catch (const std::exception&) {
            throw ParseError(line, "malformed rate '" + s + "'");
        }
    }

    std::vector<std::string> species_;
    std::vector<Complex> complexes_;
    std::vector<Reaction> reactions_;
    Bindings defaults_;
};

}  // namespace detail

/// Parses the reaction DSL:
///
///     # comment
///     2A -> A + B : k1
///     A <-> B : 1/2, k2
///
/// Species and complexes are numbered by first appearance; `0` is the empty
/// complex; a rate is a positive number, a symbol, or `symbol=value`.
inline Network parse_network(std::string_view text) {
    detail::NetworkBuilder builder;
    std::size_t line_no = 0;
    bool any = false;
    for (auto raw : detail::split(text, '\n')) {
        ++line_no;
        auto line = raw.substr(0, raw.find('#'));
        line = detail::trim(line);
        if (line.empty()) continue;
        auto colon = line.rfind(':');
        if (colon == std::string_view::npos) throw ParseError(line_no, "expected ':' before the rate");
        auto lhs_rhs = line.substr(0, colon);
        auto rates = line.substr(colon + 1);

        bool reversible = false;
        std::size_t arrow = lhs_rhs.find("<->");
        std::size_t arrow_len = 3;
        if (arrow != std::string_view::npos) {
            reversible = true;
        } else if ((arrow = lhs_rhs.find("⇄")) != std::string_view::npos) {
            reversible = true;
            arrow_len = std::string_view("⇄").size();
        } else if ((arrow = lhs_rhs.find("->")) != std::string_view::npos) {
            arrow_len = 2;
        } else if ((arrow = lhs_rhs.find("→")) != std::string_view::npos) {
            arrow_len = std::string_view("→").size();
        } else {
            throw ParseError(line_no, "expected '->' or '<->'");
        }
        std::size_t src = builder.complex_index(lhs_rhs.substr(0, arrow), line_no);
        std::size_t dst = builder.complex_index(lhs_rhs.substr(arrow + arrow_len), line_no);
        auto rate_parts = detail::split(rates, ',');
        if (reversible) {
            if (rate_parts.size() != 2) throw ParseError(line_no, "reversible reaction needs two rates");
            builder.add(src, dst, builder.rate(rate_parts[0], line_no), line_no);
            builder.add(dst, src, builder.rate(rate_parts[1], line_no), line_no);
        } else {
            if (rate_parts.size() != 1) throw ParseError(line_no, "irreversible reaction needs one rate");
            builder.add(src, dst, builder.rate(rate_parts[0], line_no), line_no);
        }
        any = true;
    }
    if (!any) throw ParseError(line_no, "no reactions");
    return builder.finish();
}

/// Parses "k1=2,k2=1/3" into bindings; values must be positive.
inline Bindings parse_bindings(std::string_view text) {
    Bindings b;
    if (detail::trim(text).empty()) return b;
    for (auto part : detail::split(text, ',')) {
        auto eq = part.find('=');
        if (eq == std::string_view::npos) throw InputError("binding '" + std::string(part) + "' lacks '='");
        std::string name(detail::trim(part.substr(0, eq)));
        if (!detail::is_identifier(name)) throw InputError("malformed binding name '" + name + "'");
        Rational v;
        try {
            v = Rational::parse(detail::trim(part.substr(eq + 1)));
        } catch (const std::exception&) {
            throw InputError("malformed binding value in '" + std::string(part) + "'");
        }
        if (v.sign() <= 0) throw InputError("binding for '" + name + "' must be positive");
        b[name] = v;
    }
    return b;
}

}  // namespace toricnet::crn

#endif  // TORICNET_CRN_NETWORK_HPP
