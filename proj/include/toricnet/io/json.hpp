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

#ifndef TORICNET_IO_JSON_HPP
#define TORICNET_IO_JSON_HPP

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include <toricnet/core/errors.hpp>
#include <toricnet/core/linear_combination.hpp>
#include <toricnet/core/matrix.hpp>
#include <toricnet/core/rational.hpp>
#include <toricnet/crn/analysis.hpp>
#include <toricnet/crn/network.hpp>
#include <toricnet/ncsf/nsym.hpp>
#include <toricnet/ncsf/qsym.hpp>
#include <toricnet/ncsf/sym.hpp>
#include <toricnet/torictop/delzant.hpp>
#include <toricnet/torictop/quasitoric.hpp>

namespace toricnet::io {

using json = nlohmann::ordered_json;

inline json parse_json(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
}

inline json error_json(const std::string& kind, const std::string& detail) {
    return {{"error", {{"kind", kind}, {"detail", detail}}}};
}

// ---- scalars and arrays ----

inline json to_json(const Rational& r) { return r.str(); }

inline json to_json(const BigInt& z) {
    if (z.fits_slong_p()) return z.get_si();
    return z.get_str();
}

/// Accepts "p/q" strings, integers, and doubles (converted exactly).
inline Rational rational_from_json(const json& j) {
    if (j.is_string()) {
        try {
            return Rational::parse(j.get<std::string>());
        } catch (const std::exception& e) {
            throw InputError(e.what());
        }
    }
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_number_float()) return Rational::from_double(j.get<double>());
    throw InputError("expected a rational, got " + j.dump());
}

inline BigInt integer_from_json(const json& j) {
    if (j.is_number_integer()) return BigInt(j.get<long>());
    if (j.is_string()) {
        BigInt z;
        if (z.set_str(j.get<std::string>(), 10) == 0) return z;
    }
    throw InputError("expected an integer, got " + j.dump());
}

inline json to_json(const std::vector<Rational>& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(to_json(x));
    return a;
}

inline std::vector<Rational> rationals_from_json(const json& j) {
    if (!j.is_array()) throw InputError("expected an array of rationals");
    std::vector<Rational> out;
    for (const auto& x : j) out.push_back(rational_from_json(x));
    return out;
}

template <class T>
json matrix_to_json(const Matrix<T>& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline IntMatrix int_matrix_from_json(const json& j) {
    if (!j.is_array() || j.empty() || !j.front().is_array()) throw InputError("expected a non-empty array of rows");
    std::size_t cols = j.front().size();
    IntMatrix m(j.size(), cols);
    for (std::size_t r = 0; r < j.size(); ++r) {
        if (!j[r].is_array() || j[r].size() != cols) throw InputError("matrix rows differ in length");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = integer_from_json(j[r][c]);
    }
    return m;
}

inline std::vector<unsigned> index_from_json(const json& j) {
    if (!j.is_array()) throw InputError("index must be an array of positive integers");
    std::vector<unsigned> out;
    for (const auto& x : j) {
        if (!x.is_number_integer() || x.get<long>() <= 0) throw InputError("index entries must be positive integers");
        out.push_back(x.get<unsigned>());
    }
    return out;
}

// ---- algebra elements ----

/// One term of the text form "2·Z[1,2] - 1/3·M[1] + 4". A bare scalar has
/// an empty symbol; "Z[1]Z[2]" yields two factors.
struct ParsedTerm {
    std::string symbol;
    std::vector<std::vector<unsigned>> factors;
    Rational coeff;
};

namespace detail {
inline std::string normalize(std::string_view text) {
    std::string s(text);
    auto swap_all = [&](const std::string& from, const std::string& to) {
        for (std::size_t p = 0; (p = s.find(from, p)) != std::string::npos; p += to.size()) s.replace(p, from.size(), to);
    };
    swap_all("−", "-");
    swap_all("·", "*");
    std::string out;
    for (char c : s)
        if (c != ' ' && c != '\t' && c != '\n' && c != '\r') out += c;
    return out;
}

inline std::vector<unsigned> parse_index(const std::string& body) {
    std::vector<unsigned> out;
    if (body.empty()) return out;
    std::size_t start = 0;
    while (true) {
        auto comma = body.find(',', start);
        std::string part = body.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos || std::stoul(part) == 0)
            throw InputError("bad index entry '" + part + "'");
        out.push_back(static_cast<unsigned>(std::stoul(part)));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

inline ParsedTerm parse_term(const std::string& t, bool negative) {
    ParsedTerm term;
    std::size_t sym = 0;
    while (sym < t.size() && !std::isalpha(static_cast<unsigned char>(t[sym]))) ++sym;
    std::string coeff = t.substr(0, sym);
    if (!coeff.empty() && coeff.back() == '*') coeff.pop_back();
    if (coeff.empty() && sym == t.size()) throw InputError("empty term");
    try {
        term.coeff = coeff.empty() ? Rational(1) : Rational::parse(coeff);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    if (negative) term.coeff = -term.coeff;
    std::size_t p = sym;
    while (p < t.size()) {
        std::size_t open = t.find('[', p);
        if (open == std::string::npos) throw InputError("expected '[' in term '" + t + "'");
        std::string s = t.substr(p, open - p);
        if (!term.symbol.empty() && s != term.symbol) throw InputError("mixed symbols in term '" + t + "'");
        term.symbol = s;
        std::size_t close = t.find(']', open);
        if (close == std::string::npos) throw InputError("unbalanced '[' in term '" + t + "'");
        term.factors.push_back(parse_index(t.substr(open + 1, close - open - 1)));
        p = close + 1;
        if (p < t.size() && t[p] == '*') ++p;
    }
    return term;
}
}  // namespace detail

inline std::vector<ParsedTerm> parse_terms(std::string_view text) {
    std::string s = detail::normalize(text);
    if (s.empty()) throw InputError("empty expression");
    std::vector<ParsedTerm> out;
    if (s == "0") return out;
    int depth = 0;
    std::size_t start = 0;
    bool negative = false;
    if (s[0] == '-' || s[0] == '+') {
        negative = s[0] == '-';
        start = 1;
    }
    for (std::size_t i = start; i <= s.size(); ++i) {
        char c = i < s.size() ? s[i] : '\0';
        if (c == '[') ++depth;
        if (c == ']') --depth;
        bool split = i == s.size() || (depth == 0 && (c == '+' || c == '-') && i > start && s[i - 1] != '/' && s[i - 1] != '*');
        if (!split) continue;
        out.push_back(detail::parse_term(s.substr(start, i - start), negative));
        if (i < s.size()) negative = c == '-';
        start = i + 1;
    }
    return out;
}

inline ncsf::NCF ncf_from_terms(const std::vector<ParsedTerm>& terms) {
    ncsf::NCF x;
    for (const auto& t : terms) {
        if (!t.symbol.empty() && t.symbol != "Z") throw InputError("expected Z[...] terms, got " + t.symbol);
        ncsf::Composition word;
        for (const auto& f : t.factors) word.insert(word.end(), f.begin(), f.end());
        x.add_term(word, t.coeff);
    }
    return x;
}

inline ncsf::QSF qsf_from_terms(const std::vector<ParsedTerm>& terms) {
    ncsf::QSF x;
    for (const auto& t : terms) {
        if (!t.symbol.empty() && t.symbol != "M") throw InputError("expected M[...] terms, got " + t.symbol);
        if (t.factors.size() > 1) throw InputError("M[...] terms take a single index");
        x.add_term(t.factors.empty() ? ncsf::Composition{} : t.factors.front(), t.coeff);
    }
    return x;
}

inline ncsf::SymF symf_from_terms(const std::vector<ParsedTerm>& terms, std::optional<ncsf::SymBasis> basis = {}) {
    for (const auto& t : terms)
        if (!t.symbol.empty()) {
            auto b = ncsf::parse_basis(t.symbol);
            if (basis && *basis != b) throw InputError("mixed bases in symmetric function");
            basis = b;
        }
    ncsf::SymF f(basis.value_or(ncsf::SymBasis::e));
    bool multiplicative = f.basis() == ncsf::SymBasis::e || f.basis() == ncsf::SymBasis::h || f.basis() == ncsf::SymBasis::p;
    for (const auto& t : terms) {
        if (t.factors.size() > 1 && !multiplicative) throw InputError("products of m or s functions are not basis terms");
        ncsf::Partition lambda;
        for (const auto& fct : t.factors) lambda.insert(lambda.end(), fct.begin(), fct.end());
        f.add_term(ncsf::sorted_partition(lambda), t.coeff);
    }
    return f;
}

namespace detail {
inline json terms_json(const auto& terms) {
    json a = json::array();
    for (const auto& [k, c] : terms) a.push_back({{"index", k}, {"coeff", c.str()}});
    return a;
}

inline std::vector<ParsedTerm> terms_from_object(const json& j, const std::string& symbol) {
    if (!j.contains("terms") || !j["terms"].is_array()) throw InputError("element JSON needs a \"terms\" array");
    std::vector<ParsedTerm> out;
    for (const auto& t : j["terms"]) {
        if (!t.is_object() || !t.contains("index") || !t.contains("coeff"))
            throw InputError("each term needs \"index\" and \"coeff\"");
        auto idx = index_from_json(t["index"]);
        ParsedTerm p{idx.empty() ? std::string() : symbol, {}, rational_from_json(t["coeff"])};
        if (!idx.empty()) p.factors.push_back(std::move(idx));
        out.push_back(std::move(p));
    }
    return out;
}

inline std::string basis_of(const json& j, const std::string& fallback) {
    if (!j.contains("basis")) return fallback;
    if (!j["basis"].is_string()) throw InputError("\"basis\" must be a string");
    return j["basis"].get<std::string>();
}
}  // namespace detail

inline json to_json(const ncsf::NCF& x, TermOrder order = TermOrder::descending) {
    return {{"basis", "Z"}, {"terms", detail::terms_json(x.terms())}, {"text", x.str(order)}};
}

inline json to_json(const ncsf::QSF& x) {
    return {{"basis", "M"}, {"terms", detail::terms_json(x.terms())}, {"text", x.str()}};
}

inline json to_json(const ncsf::SymF& f) {
    return {{"basis", ncsf::basis_name(f.basis())}, {"terms", detail::terms_json(f.terms())}, {"text", f.str()}};
}

/// Elements read from JSON: either the text form as a string, or
/// {"basis": ..., "terms": [{"index": [...], "coeff": "p/q"}]}.
inline ncsf::NCF ncf_from_json(const json& j) {
    if (j.is_string()) return ncf_from_terms(parse_terms(j.get<std::string>()));
    if (detail::basis_of(j, "Z") != "Z") throw InputError("expected basis Z");
    return ncf_from_terms(detail::terms_from_object(j, "Z"));
}

inline ncsf::QSF qsf_from_json(const json& j) {
    if (j.is_string()) return qsf_from_terms(parse_terms(j.get<std::string>()));
    if (detail::basis_of(j, "M") != "M") throw InputError("expected basis M");
    return qsf_from_terms(detail::terms_from_object(j, "M"));
}

inline ncsf::SymF symf_from_json(const json& j) {
    if (j.is_string()) return symf_from_terms(parse_terms(j.get<std::string>()));
    std::string b = detail::basis_of(j, "e");
    try {
        return symf_from_terms(detail::terms_from_object(j, b), ncsf::parse_basis(b));
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
}

/// Tensors with word or multiset keys on both sides.
template <MonomialPolicy A, MonomialPolicy B>
json to_json(const Tensor<A, B>& t, TermOrder order = TermOrder::descending) {
    json a = json::array();
    for (const auto& [k, c] : t.terms()) a.push_back({{"left", k.first}, {"right", k.second}, {"coeff", c.str()}});
    return {{"terms", a}, {"text", t.str(order)}};
}

/// Commutative polynomials keyed by sorted index multisets (t, b, CP, ...).
template <class Name>
json to_json(const LinComb<MultisetPolicy<Name>>& p, TermOrder order = TermOrder::descending) {
    return {{"symbol", Name::symbol}, {"terms", detail::terms_json(p.terms())}, {"text", p.str(order)}};
}

// ---- crn reports ----

inline json to_json(const SparsePoly& p) { return p.str(); }

inline json network_json(const crn::Network& net) {
    json complexes = json::array();
    for (std::size_t k = 0; k < net.complex_count(); ++k) complexes.push_back(net.complex_name(k));
    json reactions = json::array();
    for (const auto& r : net.reactions())
        reactions.push_back({{"source", r.source + 1}, {"target", r.target + 1}, {"rate", r.rate.str()}});
    return {{"species", net.species()}, {"complexes", complexes}, {"reactions", reactions}};
}

/// Complex numbers in linkage classes are 1-based.
inline json analysis_json(const crn::Network& net, const crn::NetworkAnalysis& a) {
    json classes = json::array();
    for (const auto& members : a.linkage_classes) {
        json c = json::array();
        for (auto k : members) c.push_back(k + 1);
        classes.push_back(c);
    }
    json out = network_json(net);
    out["n"] = net.complex_count();
    out["l"] = a.linkage_classes.size();
    out["s"] = net.species_count();
    out["stoichiometric_rank"] = a.stoichiometric_rank;
    out["deficiency"] = a.deficiency;
    out["weakly_reversible"] = a.weakly_reversible;
    out["linkage_classes"] = classes;
    out["cayley"] = matrix_to_json(a.cayley);
    return out;
}

inline json binomials_json(const std::vector<crn::Binomial>& bs) {
    json a = json::array();
    for (const auto& b : bs) {
        json plus = json::array(), minus = json::array();
        for (const auto& x : b.plus) plus.push_back(to_json(x));
        for (const auto& x : b.minus) minus.push_back(to_json(x));
        a.push_back({{"plus", plus}, {"minus", minus}, {"text", b.text}});
    }
    return a;
}

// ---- torictop schemas ----

/// {"normals": [[...]], "offsets": ["p/q", ...]}
inline torictop::DelzantPolytope polytope_from_json(const json& j) {
    if (!j.is_object() || !j.contains("normals") || !j.contains("offsets"))
        throw InputError("polytope JSON needs \"normals\" and \"offsets\"");
    return {int_matrix_from_json(j["normals"]), rationals_from_json(j["offsets"])};
}

inline json to_json(const torictop::DelzantPolytope& p) {
    return {{"normals", matrix_to_json(p.normals)}, {"offsets", to_json(p.offsets)}};
}

namespace detail {
inline torictop::Face face_from_json(const json& j, unsigned m) {
    if (!j.is_array()) throw InputError("faces must be arrays of vertex numbers");
    torictop::Face f;
    for (const auto& x : j) {
        if (!x.is_number_integer() || x.get<long>() < 1 || x.get<long>() > static_cast<long>(m))
            throw InputError("vertex numbers run from 1 to " + std::to_string(m));
        f.push_back(x.get<unsigned>() - 1);
    }
    return f;
}

inline json face_to_json(const torictop::Face& f) {
    json a = json::array();
    for (unsigned v : f) a.push_back(v + 1);
    return a;
}
}  // namespace detail

/// {"facets": [[1,2],...], "lambda": [[...]], "base_facet": [...]} with
/// 1-based vertex numbers; the vertex count is the column count of lambda.
inline torictop::QuasitoricData quasitoric_from_json(const json& j) {
    if (!j.is_object() || !j.contains("facets") || !j.contains("lambda"))
        throw InputError("quasitoric JSON needs \"facets\" and \"lambda\"");
    auto lambda = int_matrix_from_json(j["lambda"]);
    unsigned m = static_cast<unsigned>(lambda.cols());
    if (!j["facets"].is_array()) throw InputError("\"facets\" must be an array");
    std::vector<torictop::Face> facets;
    for (const auto& f : j["facets"]) facets.push_back(detail::face_from_json(f, m));
    torictop::QuasitoricData q{torictop::SimplicialComplex(m, facets), lambda, {}, false};
    if (j.contains("base_facet")) {
        q.base_facet = detail::face_from_json(j["base_facet"], m);
        std::sort(q.base_facet.begin(), q.base_facet.end());
    }
    if (j.contains("orientation_flip")) q.orientation_flip = j["orientation_flip"].get<bool>();
    return q;
}

inline json to_json(const torictop::QuasitoricData& q) {
    json facets = json::array();
    for (const auto& f : q.complex.facets()) facets.push_back(detail::face_to_json(f));
    json out = {{"facets", facets}, {"lambda", matrix_to_json(q.lambda)}};
    if (!q.base_facet.empty()) out["base_facet"] = detail::face_to_json(q.base_facet);
    return out;
}

inline json to_json(const torictop::ValidityReport& r) {
    json violations = json::array();
    for (const auto& v : r.violations)
        violations.push_back({{"check", v.check}, {"face", detail::face_to_json(v.face)}, {"detail", v.detail}});
    return {{"valid", r.valid}, {"checks_run", r.checks_run}, {"violations", violations}};
}

}  // namespace toricnet::io

#endif  // TORICNET_IO_JSON_HPP
