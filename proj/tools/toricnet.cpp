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

// toricnet command-line driver. Reports go to standard output as JSON or
// text. Exit status: 0 success, 1 input error, 2 domain refusal, 3 internal.

#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <toricnet/crn/analysis.hpp>
#include <toricnet/crn/network.hpp>
#include <toricnet/crn/steady_state.hpp>
#include <toricnet/freeprob/cumulants.hpp>
#include <toricnet/freeprob/nc_cumulants.hpp>
#include <toricnet/hopf/coaction.hpp>
#include <toricnet/hopf/diffeo.hpp>
#include <toricnet/hopf/fgl.hpp>
#include <toricnet/hopf/hopf_algebra.hpp>
#include <toricnet/io/json.hpp>
#include <toricnet/ncsf/nsym.hpp>
#include <toricnet/ncsf/qsym.hpp>
#include <toricnet/ncsf/sym.hpp>
#include <toricnet/torictop/characteristic.hpp>
#include <toricnet/torictop/crn_bridge.hpp>
#include <toricnet/torictop/delzant.hpp>

namespace {

using namespace toricnet;
using io::json;

enum class Format { json, text };

struct Options {
    unsigned order = 8;
    std::optional<double> tol;
    std::string format;  // empty: per-command default
    bool orientation_flip = false;
    std::string bindings;
    std::string input;
    std::string text;
};

struct Report {
    json data;
    std::vector<std::string> lines;
};

std::string read_input(const Options& o) {
    if (!o.text.empty()) return o.text;
    if (o.input.empty()) throw InputError("no input: give a file, '-' for stdin, or --text");
    if (o.input == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    std::ifstream in(o.input, std::ios::binary);
    if (!in) throw InputError("cannot read '" + o.input + "'");
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read '" + path + "'");
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    for (std::string item; std::getline(ss, item, ',');) out.push_back(item);
    return out;
}

std::vector<double> parse_doubles(const std::string& s) {
    std::vector<double> out;
    for (const auto& item : split_list(s)) {
        try {
            out.push_back(Rational::parse(item).to_double());
        } catch (const std::exception&) {
            throw InputError("malformed number '" + item + "'");
        }
    }
    return out;
}

std::string fmt_double(double x) {
    std::ostringstream os;
    os.precision(12);
    os << x;
    return os.str();
}

std::string join(const std::vector<std::string>& xs, const std::string& sep = ", ") {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? sep : "") + xs[i];
    return s;
}

std::string render_rationals(const std::vector<Rational>& v) {
    std::vector<std::string> s;
    for (const auto& x : v) s.push_back(x.str());
    return "(" + join(s) + ")";
}

template <class T>
std::vector<std::string> render_matrix(const Matrix<T>& m) {
    std::vector<std::string> out;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        std::vector<std::string> row;
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).get_str());
        out.push_back("  [" + join(row) + "]");
    }
    return out;
}

// ---- crn ----

crn::Network load_network(const Options& o) { return crn::parse_network(read_input(o)); }

crn::Bindings bindings_of(const Options& o) { return crn::parse_bindings(o.bindings); }

Report crn_analyze(const Options& o) {
    auto net = load_network(o);
    auto a = crn::analyze(net);
    Report r{io::analysis_json(net, a), {}};
    r.lines.push_back("species: " + join(net.species()));
    std::vector<std::string> cs;
    for (std::size_t k = 0; k < net.complex_count(); ++k) cs.push_back(net.complex_name(k));
    r.lines.push_back("complexes: " + join(cs));
    r.lines.push_back("n = " + std::to_string(net.complex_count()) + ", l = " + std::to_string(a.linkage_classes.size()) +
                      ", s' = " + std::to_string(a.stoichiometric_rank) + ", deficiency = " + std::to_string(a.deficiency));
    r.lines.push_back(std::string("weakly reversible: ") + (a.weakly_reversible ? "yes" : "no"));
    r.lines.push_back("cayley:");
    for (auto& line : render_matrix(a.cayley)) r.lines.push_back(line);
    return r;
}

Report crn_trees(const Options& o) {
    auto net = load_network(o);
    auto sym = crn::tree_constants(net);
    Report r;
    json symbolic = json::array();
    for (std::size_t i = 0; i < sym.size(); ++i) {
        symbolic.push_back(sym[i].str());
        r.lines.push_back(crn::k_symbol(i) + " = " + sym[i].str());
    }
    r.data["symbolic"] = symbolic;
    auto bind = bindings_of(o);
    bool closed = true;
    for (const auto& name : net.rate_symbols())
        if (!bind.count(name) && !net.default_bindings().count(name)) closed = false;
    if (closed) {
        auto num = crn::tree_constants(net, bind);
        r.data["values"] = io::to_json(num);
        r.lines.push_back("values: " + render_rationals(num));
    }
    return r;
}

Report crn_ideal(const Options& o) {
    auto net = load_network(o);
    auto bs = crn::toric_binomials(net);
    Report r{{{"binomials", io::binomials_json(bs)}}, {}};
    if (bs.empty()) r.lines.push_back("(no binomials)");
    for (const auto& b : bs) r.lines.push_back(b.text);
    return r;
}

std::optional<std::vector<double>> c0_option(const std::string& s) {
    if (s.empty()) return std::nullopt;
    return parse_doubles(s);
}

Report crn_steady(const Options& o, const std::string& c0) {
    auto net = load_network(o);
    auto st = crn::birch_point(net, bindings_of(o), c0_option(c0), o.tol.value_or(crn::birch_tolerance));
    Report r;
    json conc = json::object();
    std::vector<std::string> parts;
    for (std::size_t j = 0; j < st.concentrations.size(); ++j) {
        conc[net.species()[j]] = st.concentrations[j];
        parts.push_back(net.species()[j] + " = " + fmt_double(st.concentrations[j]));
    }
    r.data = {{"concentrations", conc},
              {"residual", st.residual},
              {"log_residual", st.log_residual},
              {"normalization", st.normalization}};
    r.lines.push_back(join(parts));
    r.lines.push_back("residual: " + fmt_double(st.residual) + " (" + st.normalization + ")");
    return r;
}

Report crn_simulate(const Options& o, const std::string& c0, double t_end, double dt, unsigned samples) {
    auto net = load_network(o);
    auto init = c0_option(c0);
    if (!init) throw InputError("simulate needs --c0");
    std::size_t steps = static_cast<std::size_t>(std::ceil(t_end / dt - 1e-9));
    std::size_t every = samples == 0 ? std::max<std::size_t>(steps, 1) : std::max<std::size_t>(steps / samples, 1);
    auto tr = crn::simulate(net, bindings_of(o), *init, t_end, dt, every);
    double tol = o.tol.value_or(1e-8);
    Report r;
    json traj = json::array();
    for (std::size_t i = 0; i < tr.times.size(); ++i) traj.push_back({{"t", tr.times[i]}, {"c", tr.states[i]}});
    const auto& last = tr.states.back();
    r.data = {{"species", net.species()},
              {"final", last},
              {"t_end", tr.times.back()},
              {"max_conservation_drift", tr.max_conservation_drift},
              {"conservation_ok", tr.max_conservation_drift <= tol},
              {"trajectory", traj}};
    std::vector<std::string> parts;
    for (std::size_t j = 0; j < last.size(); ++j) parts.push_back(net.species()[j] + " = " + fmt_double(last[j]));
    r.lines.push_back("t = " + fmt_double(tr.times.back()) + ": " + join(parts));
    r.lines.push_back("max conservation drift: " + fmt_double(tr.max_conservation_drift));
    return r;
}

Report crn_toric(const Options& o) {
    auto net = load_network(o);
    auto b = torictop::crn_to_toric(net);
    Report r;
    json divisors = json::array();
    for (const auto& d : b.elementary_divisors) divisors.push_back(io::to_json(d));
    r.data = {{"dimension", b.dimension},
              {"elementary_divisors", divisors},
              {"quasitoric", io::to_json(b.data)},
              {"mxi", io::to_json(b.mxi)}};
    r.lines.push_back("CP^" + std::to_string(b.dimension) + ", elementary divisors " +
                      torictop::render_divisors(b.elementary_divisors));
    r.lines.push_back("class: " + torictop::render_class(b.mxi));
    return r;
}

// ---- ncsf ----

// An element argument is either inline text ("2·Z[1,2] + Z[3]"), inline JSON
// ("{...}"), or @path to a JSON file.
json element_arg(const std::string& arg) {
    if (!arg.empty() && arg[0] == '@') return io::parse_json(read_file(arg.substr(1)));
    if (!arg.empty() && arg[0] == '{') return io::parse_json(arg);
    return json(arg);
}

Report qsym_product(const std::vector<std::string>& args) {
    if (args.size() != 2) throw InputError("qsym product takes two elements");
    auto a = io::qsf_from_json(element_arg(args[0]));
    auto b = io::qsf_from_json(element_arg(args[1]));
    auto p = ncsf::qsym_product(a, b);
    return {io::to_json(p), {p.str()}};
}

Report qsym_pair(const std::vector<std::string>& args) {
    if (args.size() != 2) throw InputError("qsym pair takes an NSymm and a QSymm element");
    auto x = io::ncf_from_json(element_arg(args[0]));
    auto q = io::qsf_from_json(element_arg(args[1]));
    auto v = ncsf::pairing(x, q);
    return {{{"pairing", v.str()}}, {v.str()}};
}

Report qsym_realize(const std::vector<std::string>& args, unsigned vars) {
    if (args.size() != 1) throw InputError("qsym realize takes one element");
    if (vars == 0) throw InputError("--vars must be positive");
    auto q = io::qsf_from_json(element_arg(args[0]));
    auto p = ncsf::qsym_realize(q, vars);
    return {{{"variables", vars}, {"polynomial", p.str()}}, {p.str()}};
}

Report sym_convert(const std::vector<std::string>& args, const std::string& to) {
    if (args.size() != 1) throw InputError("sym convert takes one element");
    auto f = io::symf_from_json(element_arg(args[0]));
    auto g = ncsf::sym_convert(f, ncsf::parse_basis(to));
    return {io::to_json(g), {g.str()}};
}

Report sym_pair(const std::vector<std::string>& args) {
    if (args.size() != 2) throw InputError("sym pair takes two elements");
    auto v = ncsf::hall_pairing(io::symf_from_json(element_arg(args[0])), io::symf_from_json(element_arg(args[1])));
    return {{{"pairing", v.str()}}, {v.str()}};
}

// ---- hopf ----

hopf::TPoly tpoly_from_text(const std::string& s) {
    hopf::TPoly p;
    for (const auto& t : io::parse_terms(s)) {
        if (!t.symbol.empty() && t.symbol != "t") throw InputError("expected t[...] terms, got " + t.symbol);
        std::vector<unsigned> key;
        for (const auto& f : t.factors) key.insert(key.end(), f.begin(), f.end());
        std::sort(key.begin(), key.end());
        p.add_term(key, t.coeff);
    }
    return p;
}

void check_algebra(const std::string& algebra) {
    if (algebra != "bfk" && algebra != "ln") throw InputError("--algebra must be bfk or ln");
}

Report hopf_map(const std::string& which, const std::string& algebra, unsigned degree, const std::string& element) {
    check_algebra(algebra);
    if (element.empty() && degree == 0) throw InputError("--degree must be positive");
    std::string symbol = which == "coproduct" ? "Δ" : "χ";
    Report r;
    if (algebra == "bfk") {
        auto x = element.empty() ? ncsf::Z({degree}) : io::ncf_from_json(element_arg(element));
        std::string name = x.str(TermOrder::descending);
        if (which == "coproduct") {
            auto d = hopf::bfk_coproduct(x);
            r.data = {{"algebra", algebra}, {"element", io::to_json(x)}, {"coproduct", io::to_json(d)}};
            r.lines.push_back(symbol + "(" + name + ") = " + d.str(TermOrder::descending));
        } else {
            auto s = hopf::bfk_antipode(x);
            r.data = {{"algebra", algebra}, {"element", io::to_json(x)}, {"antipode", io::to_json(s)}};
            r.lines.push_back(symbol + "(" + name + ") = " + s.str(TermOrder::descending));
        }
    } else {
        auto x = element.empty() ? hopf::t(degree) : tpoly_from_text(element);
        std::string name = x.str(TermOrder::descending);
        if (which == "coproduct") {
            auto d = hopf::ln_coproduct(x);
            r.data = {{"algebra", algebra}, {"element", io::to_json(x)}, {"coproduct", io::to_json(d)}};
            r.lines.push_back(symbol + "(" + name + ") = " + d.str(TermOrder::descending));
        } else {
            auto s = hopf::ln_antipode(x);
            r.data = {{"algebra", algebra}, {"element", io::to_json(x)}, {"antipode", io::to_json(s)}};
            r.lines.push_back(symbol + "(" + name + ") = " + s.str(TermOrder::descending));
        }
    }
    return r;
}

Report hopf_verify(const std::string& algebra, unsigned degree) {
    check_algebra(algebra);
    if (degree == 0) throw InputError("degree must be positive");
    bool coassoc = true, counital = true, antipode = true;
    if (algebra == "bfk") {
        auto delta = [](const ncsf::NCF& x) { return hopf::bfk_coproduct(x); };
        auto chi = [](const ncsf::NCF& x) { return hopf::bfk_antipode(x); };
        for (unsigned i = 1; i <= degree; ++i) {
            auto z = ncsf::Z({i});
            coassoc = coassoc && hopf::is_coassociative(z, delta);
            counital = counital && hopf::is_counital(z, delta);
            antipode = antipode && hopf::satisfies_antipode(z, delta, chi);
        }
    } else {
        auto delta = [](const hopf::TPoly& x) { return hopf::ln_coproduct(x); };
        auto chi = [](const hopf::TPoly& x) { return hopf::ln_antipode(x); };
        for (unsigned i = 1; i <= degree; ++i) {
            auto t = hopf::t(i);
            coassoc = coassoc && hopf::is_coassociative(t, delta);
            counital = counital && hopf::is_counital(t, delta);
            antipode = antipode && hopf::satisfies_antipode(t, delta, chi);
        }
    }
    Report r;
    r.data = {{"algebra", algebra},
              {"degree", degree},
              {"coassociative", coassoc},
              {"counital", counital},
              {"antipode", antipode}};
    auto yn = [](bool b) { return b ? std::string("ok") : std::string("FAILED"); };
    r.lines.push_back(algebra + " generators of weight <= " + std::to_string(degree) + ": coassociativity " +
                      yn(coassoc) + ", counit " + yn(counital) + ", antipode " + yn(antipode));
    if (algebra == "bfk") {
        auto ab = hopf::ab_bfk_to_ln(degree);
        r.data["abelianizes_to_ln"] = ab.ok;
        r.data["words_checked"] = ab.checked_words;
        if (!ab.ok) r.data["counterexample"] = ab.counterexample;
        r.lines.push_back("abelianization to LN on " + std::to_string(ab.checked_words) + " words: " + yn(ab.ok) +
                          (ab.ok ? "" : " at " + ab.counterexample));
    }
    return r;
}

Report hopf_fgl(unsigned order, bool associativity) {
    auto f = hopf::fgl_over_N(order);
    Report r;
    json terms = json::array();
    // By total degree, then by descending power of x.
    std::vector<std::pair<std::vector<unsigned>, ncsf::NCF>> sorted(f.terms().begin(), f.terms().end());
    std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
        unsigned da = a.first[0] + a.first[1], db = b.first[0] + b.first[1];
        return da != db ? da < db : a.first[0] > b.first[0];
    });
    for (const auto& [e, c] : sorted) {
        std::string mono = hopf::render_monomial(e, {"x", "y"});
        terms.push_back({{"x", e[0]}, {"y", e[1]}, {"coeff", io::to_json(c)}});
        r.lines.push_back(mono + ": " + c.str(TermOrder::descending));
    }
    r.data = {{"order", order}, {"terms", terms}};
    if (associativity) {
        auto rep = hopf::associativity_report(f);
        json a = {{"associative", rep.associative}};
        if (!rep.associative) {
            a["degree"] = rep.degree;
            a["monomial"] = rep.monomial;
            a["difference"] = rep.difference;
            r.lines.push_back("associativity fails at degree " + std::to_string(rep.degree) + ", " + rep.monomial +
                              ": " + rep.difference);
        } else {
            r.lines.push_back("associative to order " + std::to_string(order));
        }
        r.data["associativity"] = a;
    }
    return r;
}

Report hopf_coaction(const std::string& target, unsigned degree) {
    if (degree == 0) throw InputError("--degree must be positive");
    Report r;
    if (target == "mu") {
        auto x = hopf::cp(degree);
        auto psi = hopf::mu_coaction(x);
        r.data = {{"target", target}, {"element", x.str()}, {"coaction", io::to_json(psi)}};
        r.lines.push_back("ψ(" + x.str() + ") = " + psi.str(TermOrder::descending));
    } else if (target == "b") {
        auto x = ncsf::BPoly::basis({degree});
        auto psi = hopf::b_coaction(x);
        r.data = {{"target", target}, {"element", x.str()}, {"coaction", io::to_json(psi)}};
        r.lines.push_back("ψ(" + x.str() + ") = " + psi.str(TermOrder::descending));
    } else {
        throw InputError("--target must be mu or b");
    }
    return r;
}

// ---- freeprob ----

// Sequences come from --values "1,0,1", a JSON array, or a JSON object with
// "moments" or "cumulants".
std::pair<std::vector<Rational>, std::string> load_sequence(const Options& o, const std::string& values,
                                                            const std::string& from) {
    std::vector<Rational> seq;
    std::string kind = from;
    if (!values.empty()) {
        for (const auto& item : split_list(values)) seq.push_back(io::rational_from_json(json(item)));
    } else {
        auto j = io::parse_json(read_input(o));
        if (j.is_object()) {
            if (j.contains("moments")) kind = "moments", j = j["moments"];
            else if (j.contains("cumulants")) kind = "cumulants", j = j["cumulants"];
            else throw InputError("sequence JSON needs \"moments\" or \"cumulants\"");
        }
        seq = io::rationals_from_json(j);
    }
    if (kind != "moments" && kind != "cumulants") throw InputError("--from must be moments or cumulants");
    if (seq.size() < 2) throw InputError("need at least m0 and m1 (or k0 and k1)");
    return {seq, kind};
}

Report cumulant_report(const std::vector<Rational>& m, const std::vector<Rational>& k, const char* label) {
    Report r;
    std::vector<Rational> ks(k.begin() + 1, k.end());
    r.data = {{"kind", label}, {"moments", io::to_json(m)}, {"cumulants", io::to_json(ks)}};
    r.lines.push_back("moments: " + render_rationals(m));
    r.lines.push_back(std::string(label) + " cumulants k1..: " + render_rationals(ks));
    return r;
}

Report freeprob_free(const Options& o, const std::string& values, const std::string& from) {
    auto [seq, kind] = load_sequence(o, values, from);
    if (kind == "moments") return cumulant_report(seq, freeprob::moments_to_free_cumulants(seq), "free");
    return cumulant_report(freeprob::free_cumulants_to_moments(seq), seq, "free");
}

Report freeprob_classical(const Options& o, const std::string& values, const std::string& from) {
    auto [seq, kind] = load_sequence(o, values, from);
    if (kind == "moments") return cumulant_report(seq, freeprob::classical_cumulants(seq), "classical");
    return cumulant_report(freeprob::classical_moments(seq), seq, "classical");
}

Report freeprob_hirzebruch(const Options& o, const std::string& genus, const std::string& values) {
    std::vector<Rational> l;
    if (!values.empty()) {
        l.push_back(Rational(0));
        for (const auto& item : split_list(values)) l.push_back(io::rational_from_json(json(item)));
    } else if (genus == "todd") {
        l = freeprob::todd_log(o.order + 1);
    } else if (genus == "l") {
        l = freeprob::l_genus_log(o.order + 1);
    } else {
        throw InputError("give --values l1,l2,... or --genus todd|l");
    }
    auto k = freeprob::hirzebruch_K(l);
    Report r{{{"log", io::to_json(std::vector<Rational>(l.begin() + 1, l.end()))}, {"K", io::to_json(k)}}, {}};
    r.lines.push_back("K: " + render_rationals(k));
    return r;
}

Report freeprob_ncseries(const Options& o) {
    auto s = freeprob::nc_cumulant_series(o.order);
    Report r;
    json raw = json::array(), normalized = json::array();
    for (unsigned i = 0; i <= s.raw.order(); ++i) {
        raw.push_back(io::to_json(s.raw[i]));
        if (!s.raw[i].is_zero()) r.lines.push_back("raw x^" + std::to_string(i) + ": " + s.raw[i].str(TermOrder::descending));
    }
    for (unsigned i = 0; i <= s.normalized.order(); ++i) {
        normalized.push_back(io::to_json(s.normalized[i]));
        r.lines.push_back("k" + std::to_string(i) + ": " + s.normalized[i].str(TermOrder::descending));
    }
    r.data = {{"order", o.order}, {"raw", raw}, {"normalized", normalized}};
    return r;
}

// ---- toric ----

torictop::QuasitoricData load_quasitoric(const Options& o) {
    auto q = io::quasitoric_from_json(io::parse_json(read_input(o)));
    if (o.orientation_flip) q.orientation_flip = !q.orientation_flip;
    return q;
}

Report toric_validate(const Options& o) {
    auto j = io::parse_json(read_input(o));
    auto q = io::quasitoric_from_json(j);
    auto rep = torictop::validate_quasitoric(q);
    Report r{io::to_json(rep), {}};
    r.lines.push_back(rep.valid ? "valid" : "invalid");
    r.lines.push_back("checks: " + join(rep.checks_run));
    for (const auto& v : rep.violations)
        r.lines.push_back(v.check + " at " + torictop::render_face(v.face) + ": " + v.detail);
    return r;
}

std::string chern_name(const ncsf::Partition& p) {
    std::map<unsigned, unsigned> mult;
    for (unsigned k : p) ++mult[k];
    std::string s;
    for (const auto& [k, e] : mult) s += "c" + std::to_string(k) + (e > 1 ? "^" + std::to_string(e) : "");
    return s;
}

Report toric_charnum(const Options& o, const std::string& polytope, const std::string& bundle_name) {
    torictop::QuasitoricData q;
    if (!polytope.empty()) {
        q = torictop::delzant_to_quasitoric(io::polytope_from_json(io::parse_json(read_file(polytope)))).data;
        q.orientation_flip = o.orientation_flip;
    } else {
        q = load_quasitoric(o);
    }
    torictop::Bundle bundle;
    if (bundle_name == "tangent") bundle = torictop::Bundle::tangent;
    else if (bundle_name == "normal") bundle = torictop::Bundle::normal;
    else throw InputError("--bundle must be tangent or normal");
    torictop::Evaluator ev(q);
    auto mxi = torictop::mxi_numbers(ev);
    Report r;
    json chern = json::array();
    r.lines.push_back(torictop::render_class(mxi));
    for (const auto& p : ncsf::partitions(ev.dimension())) {
        auto v = torictop::chern_number(ev, p, bundle);
        chern.push_back({{"partition", p}, {"name", chern_name(p)}, {"value", io::to_json(v)}});
        r.lines.push_back(chern_name(p) + " = " + v.get_str());
    }
    r.data = {{"dimension", ev.dimension()}, {"mxi", io::to_json(mxi)}, {"bundle", bundle_name}, {"chern_numbers", chern}};
    return r;
}

Report toric_delzant(const Options& o, const std::string& polytope, const std::string& convention) {
    auto p = io::polytope_from_json(io::parse_json(polytope.empty() ? read_input(o) : read_file(polytope)));
    auto res = torictop::delzant_to_quasitoric(p);
    res.data.orientation_flip = o.orientation_flip;
    torictop::HamiltonianConvention conv;
    if (convention == "mxi") conv = torictop::HamiltonianConvention::mxi;
    else if (convention == "ginzburg") conv = torictop::HamiltonianConvention::ginzburg;
    else throw InputError("--convention must be mxi or ginzburg");
    auto table = torictop::hamiltonian_numbers(res.data, res.symplectic_class, conv);
    Report r;
    json vertices = json::array(), entries = json::array();
    for (const auto& v : res.vertices) vertices.push_back(io::to_json(v));
    r.lines.push_back("vertices: " + std::to_string(res.vertices.size()));
    r.lines.push_back("u = " + torictop::linear_form(res.symplectic_class).str(TermOrder::descending));
    for (const auto& e : table) {
        entries.push_back({{"index", e.index}, {"weight", e.weight}, {"value", e.value.str()}});
        std::vector<std::string> parts;
        for (unsigned k : e.index) parts.push_back(std::to_string(k));
        r.lines.push_back("(" + join(parts, ",") + ") b_(" + std::to_string(e.weight) + "): " + e.value.str());
    }
    r.data = {{"quasitoric", io::to_json(res.data)},
              {"symplectic_class", io::to_json(res.symplectic_class)},
              {"vertices", vertices},
              {"convention", convention},
              {"hamiltonian_numbers", entries}};
    return r;
}

void emit(const Report& r, const Options& o, Format fallback) {
    Format f = fallback;
    if (o.format == "json") f = Format::json;
    else if (o.format == "text") f = Format::text;
    if (f == Format::json) {
        std::cout << r.data.dump(2) << "\n";
    } else {
        for (const auto& line : r.lines) std::cout << line << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"toricnet: reaction networks, noncommutative symmetric functions and toric topology"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--order", o.order, "truncation order")->check(CLI::Range(1u, 64u));
    app.add_option("--tol", o.tol, "tolerance override")->check(CLI::PositiveNumber);
    app.add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    app.add_flag("--orientation-flip", o.orientation_flip, "reverse the global orientation");
    app.add_option("--bindings", o.bindings, "rate values, e.g. k1=2,k2=1/3");

    std::function<void()> run;
    auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help, bool takes_input) {
        auto* c = parent->add_subcommand(name, help);
        c->fallthrough();
        if (takes_input) {
            c->add_option("input", o.input, "input file, or - for stdin");
            c->add_option("--text", o.text, "inline input instead of a file");
        }
        return c;
    };
    auto group = [&](const std::string& name, const std::string& help) {
        auto* g = app.add_subcommand(name, help);
        g->require_subcommand(1);
        g->fallthrough();
        return g;
    };

    // crn
    auto* crn_cmd = group("crn", "reaction network analyses");
    leaf(crn_cmd, "analyze", "complexes, linkage classes, deficiency, Cayley matrix", true)->callback([&] {
        run = [&] { emit(crn_analyze(o), o, Format::json); };
    });
    leaf(crn_cmd, "trees", "spanning-tree constants", true)->callback([&] {
        run = [&] { emit(crn_trees(o), o, Format::json); };
    });
    leaf(crn_cmd, "ideal", "toric binomials", true)->callback([&] {
        run = [&] { emit(crn_ideal(o), o, Format::json); };
    });
    std::string c0;
    auto* steady = leaf(crn_cmd, "steady", "complex-balanced steady state", true);
    steady->add_option("--c0", c0, "initial concentrations fixing the compatibility class");
    steady->callback([&] { run = [&] { emit(crn_steady(o, c0), o, Format::json); }; });
    double t_end = 10.0, dt = 1e-3;
    unsigned samples = 0;
    auto* sim = leaf(crn_cmd, "simulate", "mass-action RK4 trajectory", true);
    sim->add_option("--c0", c0, "initial concentrations")->required();
    sim->add_option("--t-end", t_end, "final time")->check(CLI::NonNegativeNumber);
    sim->add_option("--dt", dt, "step size")->check(CLI::PositiveNumber);
    sim->add_option("--samples", samples, "recorded states besides the endpoints");
    sim->callback([&] { run = [&] { emit(crn_simulate(o, c0, t_end, dt, samples), o, Format::json); }; });
    leaf(crn_cmd, "toric", "toric manifold of a deficiency-zero network", true)->callback([&] {
        run = [&] { emit(crn_toric(o), o, Format::json); };
    });

    // qsym / sym
    std::vector<std::string> elements;
    unsigned vars = 3;
    std::string to_basis;
    auto* qsym_cmd = group("qsym", "quasisymmetric functions");
    auto* qp = leaf(qsym_cmd, "product", "quasi-shuffle product of two M-expansions", false);
    qp->add_option("elements", elements, "elements as text, {json} or @file")->required();
    qp->callback([&] { run = [&] { emit(qsym_product(elements), o, Format::text); }; });
    auto* qd = leaf(qsym_cmd, "pair", "duality pairing <Z-element, M-element>", false);
    qd->add_option("elements", elements, "elements as text, {json} or @file")->required();
    qd->callback([&] { run = [&] { emit(qsym_pair(elements), o, Format::text); }; });
    auto* qr = leaf(qsym_cmd, "realize", "polynomial in x1..xk", false);
    qr->add_option("elements", elements, "element as text, {json} or @file")->required();
    qr->add_option("--vars", vars, "number of variables");
    qr->callback([&] { run = [&] { emit(qsym_realize(elements, vars), o, Format::text); }; });

    auto* sym_cmd = group("sym", "symmetric functions");
    auto* sc = leaf(sym_cmd, "convert", "change of basis", false);
    sc->add_option("elements", elements, "element as text, {json} or @file")->required();
    sc->add_option("--to", to_basis, "target basis e|h|p|m|s")->required();
    sc->callback([&] { run = [&] { emit(sym_convert(elements, to_basis), o, Format::text); }; });
    auto* sp = leaf(sym_cmd, "pair", "Hall inner product", false);
    sp->add_option("elements", elements, "elements as text, {json} or @file")->required();
    sp->callback([&] { run = [&] { emit(sym_pair(elements), o, Format::text); }; });

    // hopf
    std::string algebra = "bfk", element, target = "mu";
    unsigned degree = 2;
    bool assoc = false;
    auto* hopf_cmd = group("hopf", "Hopf algebras of formal diffeomorphisms");
    for (std::string which : {"coproduct", "antipode"}) {
        auto* h = leaf(hopf_cmd, which, which + " of a generator or element", false);
        h->add_option("--algebra", algebra, "bfk or ln");
        h->add_option("--degree", degree, "generator Z_k or t_k");
        h->add_option("element", element, "element as text, {json} or @file");
        h->callback([&, which] { run = [&, which] { emit(hopf_map(which, algebra, degree, element), o, Format::text); }; });
    }
    auto* hv = leaf(hopf_cmd, "verify", "Hopf axioms on generators", false);
    hv->add_option("--algebra", algebra, "bfk or ln");
    auto* hv_degree = hv->add_option("--degree", degree, "largest generator weight (default: --order)");
    hv->callback([&, hv_degree] {
        run = [&, hv_degree] { emit(hopf_verify(algebra, hv_degree->count() ? degree : o.order), o, Format::text); };
    });
    auto* hf = leaf(hopf_cmd, "fgl", "formal group law over NSymm", false);
    hf->add_flag("--associativity", assoc, "also compare F(F(x,y),z) with F(x,F(y,z))");
    hf->callback([&] { run = [&] { emit(hopf_fgl(o.order, assoc), o, Format::text); }; });
    auto* hc = leaf(hopf_cmd, "coaction", "coaction of the Landweber-Novikov algebra", false);
    hc->add_option("--target", target, "mu (CP_k) or b (b_k)");
    hc->add_option("--degree", degree, "index k");
    hc->callback([&] { run = [&] { emit(hopf_coaction(target, degree), o, Format::text); }; });

    // freeprob
    std::string values, from = "moments", genus;
    auto* fp = group("freeprob", "moments, cumulants and K-series");
    for (std::string which : {"free", "classical"}) {
        auto* f = leaf(fp, which, which + " cumulants", true);
        f->add_option("--values", values, "comma-separated sequence starting at index 0");
        f->add_option("--from", from, "moments or cumulants");
        f->callback([&, which] {
            run = [&, which] {
                emit(which == "free" ? freeprob_free(o, values, from) : freeprob_classical(o, values, from), o,
                     Format::json);
            };
        });
    }
    auto* fh = leaf(fp, "hirzebruch", "K-series of a logarithm", false);
    fh->add_option("--genus", genus, "todd or l");
    fh->add_option("--values", values, "logarithm coefficients l1,l2,...");
    fh->callback([&] { run = [&] { emit(freeprob_hirzebruch(o, genus, values), o, Format::json); }; });
    leaf(fp, "ncseries", "noncommutative cumulant series", false)->callback([&] {
        run = [&] { emit(freeprob_ncseries(o), o, Format::text); };
    });

    // toric
    std::string polytope, bundle = "tangent", convention = "mxi";
    auto* tc = group("toric", "quasitoric manifolds");
    leaf(tc, "validate", "check quasitoric data", true)->callback([&] {
        run = [&] { emit(toric_validate(o), o, Format::json); };
    });
    auto* cn = leaf(tc, "charnum", "characteristic numbers", true);
    cn->add_option("--polytope", polytope, "Delzant polytope JSON instead of quasitoric data");
    cn->add_option("--bundle", bundle, "tangent or normal");
    cn->callback([&] { run = [&] { emit(toric_charnum(o, polytope, bundle), o, Format::text); }; });
    auto* dz = leaf(tc, "delzant", "quasitoric data and Hamiltonian numbers of a polytope", true);
    dz->add_option("--polytope", polytope, "polytope JSON");
    dz->add_option("--convention", convention, "mxi or ginzburg");
    dz->callback([&] { run = [&] { emit(toric_delzant(o, polytope, convention), o, Format::json); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cout << io::error_json("InputError", e.what()).dump() << "\n";
        return 1;
    }

    try {
        run();
        return 0;
    } catch (const DomainRefusal& e) {
        std::cout << io::error_json(e.kind(), e.detail()).dump() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cout << io::error_json("InputError", e.what()).dump() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cout << io::error_json("Internal", e.what()).dump() << "\n";
        return 3;
    }
}
