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

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include <toricnet/crn/analysis.hpp>
#include <toricnet/crn/network.hpp>
#include <toricnet/crn/steady_state.hpp>

#include "crn_corpus.hpp"

using namespace toricnet;
using namespace toricnet::crn;
using Catch::Approx;

namespace {

const char* kTriangle = "A <-> B : 1, 1\nB <-> C : 1, 1\nC <-> A : 1, 1\n";
const char* kChain = "2A <-> A + B : k1, k2\nA + B <-> 2B : k3, k4\n";

// Network whose complexes are the unit vectors, one per node.
Network graph_network(std::size_t nodes, const std::vector<std::tuple<std::size_t, std::size_t, Rate>>& edges) {
    std::vector<std::string> species;
    std::vector<Complex> complexes;
    for (std::size_t i = 0; i < nodes; ++i) {
        species.push_back("X" + std::to_string(i));
        Complex c(nodes, 0);
        c[i] = 1;
        complexes.push_back(c);
    }
    std::vector<Reaction> rx;
    for (const auto& [s, t, r] : edges) rx.push_back({s, t, r});
    return Network(species, complexes, rx);
}

// Brute force: all (n-1)-edge subsets in which every non-root node has one
// out-edge and following them reaches the root.
SparsePoly brute_tree_sum(std::size_t n, const std::vector<std::tuple<std::size_t, std::size_t, SparsePoly>>& edges,
                          std::size_t root) {
    SparsePoly total;
    std::size_t m = edges.size();
    for (std::size_t mask = 0; mask < (std::size_t(1) << m); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcountll(mask)) != n - 1) continue;
        std::vector<long> out(n, -1);
        bool ok = true;
        SparsePoly prod(Rational(1));
        for (std::size_t e = 0; e < m && ok; ++e) {
            if (!(mask >> e & 1)) continue;
            auto& [s, t, w] = edges[e];
            if (s == root || out[s] >= 0) ok = false;
            out[s] = static_cast<long>(t);
            prod *= w;
        }
        if (!ok) continue;
        for (std::size_t v = 0; v < n && ok; ++v) {
            std::size_t cur = v, steps = 0;
            while (cur != root && steps++ <= n) cur = static_cast<std::size_t>(out[cur]);
            if (cur != root) ok = false;
        }
        if (ok) total += prod;
    }
    return total;
}

}  // namespace

TEST_CASE("parse_network reads the DSL", "[crn][parse]") {
    auto net = parse_network("2A -> A+B : k1");
    CHECK(net.species_count() == 2);
    CHECK(net.complex_count() == 2);
    REQUIRE(net.reactions().size() == 1);
    CHECK(net.reactions()[0].rate.is_symbolic());
    CHECK(net.reactions()[0].rate.name == "k1");

    auto tri = parse_network("A -> B : 1\nB -> C : 1\nC -> A : 1");
    auto a = analyze(tri);
    CHECK(tri.complex_count() == 3);
    CHECK(a.linkage_classes.size() == 1);
    CHECK(a.weakly_reversible);

    auto rev = parse_network("# comment\nA <-> B : 2, 1/3   # trailing\n\n");
    REQUIRE(rev.reactions().size() == 2);
    CHECK(rev.reactions()[1].rate.value == Rational(1, 3));
    CHECK(rev.complex_name(0) == "A");

    auto bound = parse_network("A -> B : k=2\nB -> A : k=2\n");
    CHECK(bound.default_bindings().at("k") == Rational(2));
    auto dec = parse_network("A -> B : 0.5\n");
    CHECK(dec.reactions()[0].rate.value == Rational(1, 2));
    auto empty = parse_network("0 -> A : 1\n");
    CHECK(empty.complex_name(0) == "0");
}

TEST_CASE("parse_network rejects malformed input", "[crn][parse]") {
    CHECK_THROWS_AS(parse_network("A -> A : 1"), ParseError);
    CHECK_THROWS_AS(parse_network("A -> B : 1\nB -> C"), ParseError);
    CHECK_THROWS_AS(parse_network("0A -> B : 1"), ParseError);
    CHECK_THROWS_AS(parse_network("-1A -> B : 1"), ParseError);
    CHECK_THROWS_AS(parse_network("A -> B : k=1\nB -> A : k=2"), ParseError);
    CHECK_THROWS_AS(parse_network("A -> B : 0"), ParseError);
    CHECK_THROWS_AS(parse_network("A <-> B : 1"), ParseError);
    CHECK_THROWS_AS(parse_network("# nothing\n"), ParseError);
    try {
        parse_network("A -> B : 1\n\nA => B : 1");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
    CHECK_THROWS_AS(parse_bindings("k1=-1"), InputError);
    CHECK(parse_bindings("k1=2,k2=1/3").at("k2") == Rational(1, 3));
}

TEST_CASE("rate matrix follows the column convention", "[crn][rates]") {
    auto net = parse_network("A -> B : alpha\nB -> A : beta");
    auto a = build_rate_matrix(net);
    CHECK(a(0, 0) == -variable("alpha"));
    CHECK(a(0, 1) == variable("beta"));
    CHECK(a(1, 0) == variable("alpha"));
    CHECK(a(1, 1) == -variable("beta"));

    auto tri = build_rate_matrix(parse_network(kTriangle), {});
    for (std::size_t l = 0; l < 3; ++l) {
        Rational col;
        for (std::size_t k = 0; k < 3; ++k) col += tri(k, l);
        CHECK(col.is_zero());
        CHECK(tri(l, l) == Rational(-2));
    }
    auto one_way = build_rate_matrix(parse_network("A -> B : 1\nB -> C : 1\nC -> A : 1"), {});
    CHECK(one_way(0, 0) == Rational(-1));

    // Parallel reactions add up.
    auto par = build_rate_matrix(parse_network("A -> B : 1\nA -> B : 2\nB -> A : 1"), {});
    CHECK(par(1, 0) == Rational(3));

    CHECK_THROWS_AS(build_rate_matrix(parse_network("A -> B : k"), {}), InputError);
    CHECK_THROWS_AS(build_rate_matrix(parse_network("A -> B : k"), {{"k", Rational(0)}}), InputError);
}

TEST_CASE("Cayley matrix and deficiency", "[crn][deficiency]") {
    auto chain = parse_network(kChain);
    auto a = analyze(chain);
    CHECK(a.cayley == IntMatrix{{2, 1, 0}, {0, 1, 2}, {1, 1, 1}});
    CHECK(a.deficiency == 1);
    CHECK(a.stoichiometric_rank == 1);

    auto tri = analyze(parse_network(kTriangle));
    CHECK(tri.deficiency == 0);
    CHECK(tri.cayley == IntMatrix{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}});

    CHECK(deficiency(parse_network("A -> B : 1")) == 0);

    auto two = analyze(parse_network("A <-> B : 1, 1\nC <-> D : 1, 1"));
    CHECK(two.linkage_classes.size() == 2);
    CHECK(two.cayley.row(4) == std::vector<BigInt>{1, 1, 0, 0});
    CHECK(two.cayley.row(5) == std::vector<BigInt>{0, 0, 1, 1});
}

TEST_CASE("deficiency double formula across the corpus", "[crn][deficiency][property]") {
    REQUIRE(testing::crn_corpus().size() >= 20);
    for (const auto& entry : testing::crn_corpus()) {
        INFO(entry.name);
        auto net = parse_network(entry.text);
        auto a = analyze(net);
        CHECK(net.complex_count() == entry.n);
        CHECK(a.linkage_classes.size() == entry.l);
        CHECK(a.stoichiometric_rank == entry.s_rank);
        CHECK(a.deficiency == entry.n - entry.l - entry.s_rank);
        CHECK(a.deficiency == net.complex_count() - rank(a.cayley));
        for (std::size_t k = 0; k < net.complex_count(); ++k) {
            BigInt ones = 0;
            for (std::size_t r = net.species_count(); r < a.cayley.rows(); ++r) ones += a.cayley(r, k);
            CHECK(ones == 1);
        }
    }
}

TEST_CASE("tree constants", "[crn][trees]") {
    auto cyc = tree_constants(parse_network("A -> B : a\nB -> C : b\nC -> A : c"));
    CHECK(cyc[0] == variable("b") * variable("c"));
    CHECK(cyc[1] == variable("c") * variable("a"));
    CHECK(cyc[2] == variable("a") * variable("b"));

    auto two = tree_constants(parse_network("A -> B : alpha\nB -> A : beta"));
    CHECK(two[0] == variable("beta"));
    CHECK(two[1] == variable("alpha"));

    auto tri = tree_constants(parse_network(kTriangle), {});
    CHECK(tri == std::vector<Rational>{3, 3, 3});

    CHECK_THROWS_AS(tree_constants(parse_network("A -> B : 1")), DomainRefusal);
}

TEST_CASE("matrix-tree identity on random digraphs", "[crn][trees][property]") {
    std::mt19937 rng(20261019);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t n = 2 + rng() % 5;
        // A Hamiltonian cycle guarantees strong connectivity; extra edges are random.
        std::vector<std::tuple<std::size_t, std::size_t, Rate>> edges;
        std::vector<std::tuple<std::size_t, std::size_t, SparsePoly>> sym;
        std::size_t counter = 0;
        auto add = [&](std::size_t s, std::size_t t) {
            std::string name = "r" + std::to_string(counter++);
            edges.emplace_back(s, t, Rate::symbolic(name));
            sym.emplace_back(s, t, variable(name));
        };
        for (std::size_t i = 0; i < n; ++i) add(i, (i + 1) % n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j && j != (i + 1) % n && rng() % 3 == 0 && edges.size() < 12) add(i, j);
        auto net = graph_network(n, edges);
        auto k = tree_constants(net);
        auto a = build_rate_matrix(net);
        INFO("trial " << trial << " n=" << n);
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(k[i] == brute_tree_sum(n, sym, i));
            for (std::size_t j = 0; j < n; ++j) {
                SparsePoly d = expansion_determinant(a.minor(j, i));
                if ((n - 1 + i + j) % 2 == 1) d = -d;
                CHECK(d == k[i]);
            }
        }
        // A (K_l)_l = 0 exactly.
        for (std::size_t r = 0; r < n; ++r) {
            SparsePoly acc;
            for (std::size_t l = 0; l < n; ++l) acc += a(r, l) * k[l];
            CHECK(acc.is_zero());
        }
    }
}

TEST_CASE("toric binomials", "[crn][ideal]") {
    auto b = toric_binomials(parse_network(kChain));
    REQUIRE(b.size() == 1);
    CHECK(b[0].text == "K1*K3 - K2^2");
    CHECK(b[0].plus == IntVector{1, 0, 1});
    CHECK(b[0].minus == IntVector{0, 2, 0});
    CHECK(toric_binomials(parse_network(kTriangle)).empty());
    for (const auto& entry : testing::crn_corpus()) {
        auto net = parse_network(entry.text);
        auto bs = toric_binomials(net);
        CHECK(bs.size() == analyze(net).deficiency);
        auto c = cayley_matrix(net);
        for (const auto& bin : bs) {
            for (std::size_t r = 0; r < c.rows(); ++r) {
                BigInt dot = 0;
                for (std::size_t j = 0; j < c.cols(); ++j) dot += c(r, j) * (bin.plus[j] - bin.minus[j]);
                CHECK(dot == 0);
            }
        }
    }
}

TEST_CASE("birch point examples", "[crn][steady]") {
    auto tri = birch_point(parse_network(kTriangle));
    for (double v : tri.concentrations) CHECK(v == Approx(1.0).margin(1e-12));
    CHECK(tri.residual < 1e-9);

    auto iso = birch_point(parse_network("A <-> B : 2, 1"));
    CHECK(iso.concentrations[0] == Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
    CHECK(iso.concentrations[1] == Approx(std::sqrt(2.0)).epsilon(1e-12));

    try {
        birch_point(parse_network("A -> B : 1"));
        FAIL("expected refusal");
    } catch (const DomainRefusal& e) {
        CHECK(e.kind() == "NotWeaklyReversible");
    }

    auto cls = birch_point(parse_network("A <-> B : 2, 1"), {}, std::vector<double>{3.0, 0.0});
    CHECK(cls.concentrations[0] == Approx(1.0).epsilon(1e-12));
    CHECK(cls.concentrations[1] == Approx(2.0).epsilon(1e-12));
    CHECK(cls.normalization == "compatibility-class");
}

TEST_CASE("binomial vanishes exactly when the chain is complex balanced", "[crn][steady][property]") {
    auto net = parse_network(kChain);
    auto binom = toric_binomials(net).at(0).poly;
    std::mt19937 rng(7);
    auto draw = [&] { return Rational(static_cast<long>(1 + rng() % 20), static_cast<long>(1 + rng() % 7)); };
    int balanced = 0;
    for (int trial = 0; trial < 100; ++trial) {
        Bindings b{{"k1", draw()}, {"k2", draw()}, {"k3", draw()}};
        b["k4"] = trial % 2 ? b["k2"] * b["k3"] / b["k1"] : b["k2"] * b["k3"] / b["k1"] + draw();
        auto k = tree_constants(net, b);
        bool on_moduli = evaluate(binom, {{"K1", k[0]}, {"K2", k[1]}, {"K3", k[2]}}).is_zero();
        bool refused = false;
        try {
            birch_point(net, b);
        } catch (const DomainRefusal& e) {
            CHECK(e.kind() == "NotComplexBalanced");
            refused = true;
        }
        CHECK(on_moduli == !refused);
        balanced += on_moduli;
    }
    CHECK(balanced == 50);
}

TEST_CASE("simulate", "[crn][simulate]") {
    auto decay = simulate(parse_network("A -> B : k"), {{"k", Rational(3, 2)}}, {1.0, 0.0}, 1.0, 1e-3, 100);
    CHECK(decay.times.back() == Approx(1.0));
    CHECK(decay.states.back()[0] == Approx(std::exp(-1.5)).margin(1e-6));
    CHECK(decay.max_conservation_drift < 1e-12);

    auto tri = simulate(parse_network(kTriangle), {}, {3.0, 0.0, 0.0}, 20.0, 1e-2, 1000);
    for (double v : tri.states.back()) CHECK(v == Approx(1.0).margin(1e-6));

    auto iso = simulate(parse_network("A <-> B : 2, 1"), {}, {0.3, 0.9}, 5.0, 1e-2, 10);
    for (const auto& c : iso.states) CHECK(c[0] + c[1] == Approx(1.2).epsilon(1e-12));

    CHECK_THROWS_AS(simulate(parse_network("A -> B : 1"), {}, {-1.0, 1.0}, 1.0, 0.1), InputError);
    CHECK_THROWS_AS(simulate(parse_network("A -> B : 1"), {}, {0.0, 0.0}, 1.0, 0.1), InputError);
    // A huge step overshoots into negative concentrations.
    CHECK_THROWS_AS(simulate(parse_network("A -> B : 100"), {}, {1.0, 0.0}, 1.0, 0.5), InputError);
}

TEST_CASE("trajectories converge to the Birch point of their class", "[crn][simulate][property]") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> pos(0.2, 2.0);
    int checked = 0;
    for (const auto& entry : testing::crn_corpus()) {
        auto net = parse_network(entry.text);
        auto a = analyze(net);
        if (a.deficiency != 0 || !a.weakly_reversible || !net.rate_symbols().empty()) continue;
        INFO(entry.name);
        std::vector<double> c0(net.species_count());
        for (auto& v : c0) v = pos(rng);
        auto traj = simulate(net, {}, c0, 200.0, 1e-2, 20000);
        auto bp = birch_point(net, {}, c0);
        CHECK(traj.max_conservation_drift < 1e-8);
        for (std::size_t j = 0; j < c0.size(); ++j) CHECK(traj.states.back()[j] == Approx(bp.concentrations[j]).margin(1e-6));
        ++checked;
    }
    CHECK(checked >= 8);
}
