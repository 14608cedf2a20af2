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

#include <algorithm>
#include <cmath>
#include <functional>

#include <toricnet/crn/network.hpp>
#include <toricnet/ncsf/sym.hpp>
#include <toricnet/torictop/characteristic.hpp>
#include <toricnet/torictop/crn_bridge.hpp>
#include <toricnet/torictop/delzant.hpp>

using namespace toricnet;
using namespace toricnet::torictop;
using ncsf::Z;

namespace {

IntMatrix int_matrix(std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<std::vector<BigInt>> r;
    for (const auto& row : rows) {
        r.emplace_back();
        for (long x : row) r.back().emplace_back(x);
    }
    return IntMatrix::from_rows(r);
}

QuasitoricData cp2() {
    return {simplex_boundary(2), int_matrix({{1, 0, -1}, {0, 1, -1}}), {}, false};
}

// Hirzebruch surface: rays (1,0), (0,1), (-1,k), (0,-1) on the 4-cycle.
QuasitoricData hirzebruch(long k) {
    SimplicialComplex square(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    return {square, int_matrix({{1, 0, -1, 0}, {0, 1, k, -1}}), {}, false};
}

// All degree-d monomials (sorted keys) in m variables.
std::vector<std::vector<unsigned>> monomials(unsigned m, unsigned d) {
    std::vector<std::vector<unsigned>> out;
    std::vector<unsigned> key;
    std::function<void(unsigned)> rec = [&](unsigned start) {
        if (key.size() == d) {
            out.push_back(key);
            return;
        }
        for (unsigned i = start; i < m; ++i) {
            key.push_back(i);
            rec(i);
            key.pop_back();
        }
    };
    rec(0);
    return out;
}

// Every linear relation and every non-face, times every monomial that
// completes the degree, must evaluate to zero.
void check_well_defined(const QuasitoricData& q) {
    Evaluator ev(q);
    unsigned n = q.dimension(), m = q.vertex_count();
    for (const auto& mu : monomials(m, n - 1)) {
        VPoly rest = VPoly::basis(mu);
        for (unsigned j = 0; j < n; ++j) {
            VPoly theta;
            for (unsigned i = 0; i < m; ++i) theta.add_term({i}, Rational(q.lambda(j, i)));
            CHECK(ev.evaluate(theta * rest).is_zero());
        }
    }
    for (unsigned d = 1; d <= n; ++d)
        for (const auto& key : monomials(m, d)) {
            if (q.complex.is_face(key)) continue;
            for (const auto& mu : monomials(m, n - d)) CHECK(ev.evaluate(VPoly::basis(key) * VPoly::basis(mu)).is_zero());
        }
}

// Value of a monomial when every v_i is the hyperplane class x with x^n = 1.
Rational projective_oracle(unsigned n, const std::vector<unsigned>& key) {
    std::vector<unsigned> support = key;
    support.erase(std::unique(support.begin(), support.end()), support.end());
    return Rational(support.size() == n + 1 ? 0 : 1);
}

// Hirzebruch surface oracle: v1 = v3 = a, v2 = b, v4 = b + k a with a^2 = 0,
// ab = 1, b^2 = -k.
Rational hirzebruch_oracle(long k, const std::vector<unsigned>& key) {
    // Polynomial in a, b as coefficients of a^i b^j with i + j = 2.
    std::map<std::pair<unsigned, unsigned>, Rational> p{{{0, 0}, Rational(1)}};
    for (unsigned vi : key) {
        std::map<std::pair<unsigned, unsigned>, Rational> next;
        for (const auto& [e, c] : p) {
            if (vi == 0 || vi == 2) next[{e.first + 1, e.second}] += c;
            if (vi == 1 || vi == 3) next[{e.first, e.second + 1}] += c;
            if (vi == 3) next[{e.first + 1, e.second}] += c * Rational(k);
        }
        p = next;
    }
    Rational total;
    for (const auto& [e, c] : p) {
        if (e.first == 1 && e.second == 1) total += c;
        if (e.first == 0 && e.second == 2) total += c * Rational(-k);
    }
    return total;
}

DelzantPolytope polytope(std::initializer_list<std::initializer_list<long>> normals, std::vector<Rational> offsets) {
    return {int_matrix(normals), std::move(offsets)};
}

// Exact polygon area from vertices sorted by angle about their centroid.
Rational polygon_area(std::vector<std::vector<Rational>> pts) {
    double cx = 0, cy = 0;
    for (const auto& p : pts) {
        cx += p[0].to_double();
        cy += p[1].to_double();
    }
    cx /= static_cast<double>(pts.size());
    cy /= static_cast<double>(pts.size());
    std::sort(pts.begin(), pts.end(), [&](const auto& a, const auto& b) {
        return std::atan2(a[1].to_double() - cy, a[0].to_double() - cx) <
               std::atan2(b[1].to_double() - cy, b[0].to_double() - cx);
    });
    Rational twice;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const auto& p = pts[i];
        const auto& q = pts[(i + 1) % pts.size()];
        twice += p[0] * q[1] - q[0] * p[1];
    }
    return twice / Rational(2);
}

}  // namespace

TEST_CASE("quasitoric validation", "[torictop][validate]") {
    auto ok = validate_quasitoric(cp2());
    CHECK(ok.valid);
    CHECK(ok.checks_run.size() >= 7);
    CHECK(facet_minor(cp2().lambda, {0, 1}) == 1);
    CHECK(facet_minor(cp2().lambda, {0, 2}) == -1);
    CHECK(facet_minor(cp2().lambda, {1, 2}) == 1);

    auto bad = validate_quasitoric(simplex_boundary(2), int_matrix({{1, 0, -2}, {0, 1, -1}}));
    CHECK_FALSE(bad.valid);
    REQUIRE(bad.violations.size() == 1);
    CHECK(bad.violations[0].check == "unimodular");
    CHECK(bad.violations[0].face == Face{1, 2});

    SimplicialComplex tripod(4, {{0, 1}, {0, 2}, {0, 3}});
    auto nonpm = validate_quasitoric(tripod, int_matrix({{1, 0, 1, 1}, {0, 1, 1, 2}}));
    CHECK_FALSE(nonpm.valid);
    CHECK(nonpm.violations[0].check == "pseudomanifold");
    CHECK(nonpm.violations[0].face == Face{0});

    SimplicialComplex two_circles(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    auto disc = validate_quasitoric(two_circles, int_matrix({{1, 0, -1, 1, 0, -1}, {0, 1, -1, 0, 1, -1}}));
    CHECK_FALSE(disc.valid);
    CHECK(disc.violations[0].check == "connected_orientable");

    CHECK_THROWS_AS(Evaluator(QuasitoricData{simplex_boundary(2), int_matrix({{1, 0, -2}, {0, 1, -1}}), {}, false}),
                    InputError);
}

TEST_CASE("top evaluation on CP2", "[torictop][evaluate]") {
    CHECK(top_evaluate(cp2(), v(0) * v(1)) == 1);
    CHECK(top_evaluate(cp2(), v(2) * v(2)) == 1);
    CHECK(top_evaluate(cp2(), v(0) * v(2)) == 1);
    CHECK_THROWS_AS(top_evaluate(cp2(), v(0)), InputError);
    // Non-face times anything vanishes (CP^1 x CP^1 has non-face {v1, v2}).
    auto p1p1 = product(projective_space(1), projective_space(1));
    CHECK(top_evaluate(p1p1, v(0) * v(1)) == 0);
    CHECK(top_evaluate(p1p1, v(0) * v(2)) == 1);
    auto flipped = cp2();
    flipped.orientation_flip = true;
    CHECK(top_evaluate(flipped, v(0) * v(1)) == -1);
}

TEST_CASE("facet values follow minors and orientation", "[torictop][evaluate][property]") {
    for (unsigned n = 1; n <= 4; ++n) {
        Evaluator ev(projective_space(n));
        for (std::size_t i = 0; i < ev.data().complex.facets().size(); ++i) CHECK(ev.facet_value(i) == 1);
    }
    Evaluator h(hirzebruch(3));
    for (std::size_t i = 0; i < 4; ++i) {
        const auto& f = h.data().complex.facets()[i];
        CHECK(h.facet_value(i) == hirzebruch_oracle(3, f));
    }
}

TEST_CASE("evaluation is well defined", "[torictop][evaluate][property]") {
    for (unsigned n = 1; n <= 4; ++n) check_well_defined(projective_space(n));
    check_well_defined(product(projective_space(1), projective_space(1)));
    check_well_defined(product(projective_space(1), projective_space(2)));
    for (long k : {0L, 1L, 2L, -3L}) check_well_defined(hirzebruch(k));
}

TEST_CASE("evaluation against closed-form cohomology", "[torictop][evaluate][property]") {
    for (unsigned n = 1; n <= 4; ++n) {
        Evaluator ev(projective_space(n));
        for (const auto& key : monomials(n + 1, n)) CHECK(ev.evaluate(VPoly::basis(key)) == projective_oracle(n, key));
    }
    for (long k : {0L, 1L, 2L, 5L, -1L}) {
        Evaluator ev(hirzebruch(k));
        for (const auto& key : monomials(4, 2)) CHECK(ev.evaluate(VPoly::basis(key)) == hirzebruch_oracle(k, key));
    }
}

TEST_CASE("Chern numbers", "[torictop][chern]") {
    CHECK(chern_number(cp2(), {1, 1}, Bundle::tangent) == 9);
    CHECK(chern_number(cp2(), {2}, Bundle::tangent) == 3);
    CHECK(chern_number(projective_space(1), {1}, Bundle::tangent) == 2);
    CHECK_THROWS_AS(chern_number(cp2(), {1}, Bundle::tangent), InputError);
    // c(nu) = (1 + x)^{-3} = 1 - 3x + 6x^2.
    CHECK(chern_number(cp2(), {1, 1}, Bundle::normal) == 9);
    CHECK(chern_number(cp2(), {2}, Bundle::normal) == 6);
    // Euler characteristic c_n = n + 1; c_1^n = (n+1)^n.
    for (unsigned n = 1; n <= 4; ++n) {
        auto q = projective_space(n);
        CHECK(chern_number(q, {n}, Bundle::tangent) == n + 1);
        CHECK(chern_number(q, ncsf::Partition(n, 1), Bundle::tangent) == pow(Rational(static_cast<long>(n) + 1), n).num());
    }
    // Hirzebruch surfaces: c_2 = 4, c_1^2 = 8.
    for (long k : {0L, 1L, 2L}) {
        auto c = chern_numbers(hirzebruch(k), Bundle::tangent);
        CHECK(c.at({2}) == 4);
        CHECK(c.at({1, 1}) == 8);
    }
}

TEST_CASE("Mxi characteristic numbers", "[torictop][mxi]") {
    CHECK(mxi_numbers(projective_space(1)) == Z({1}) * Rational(2));
    auto cp2_class = mxi_numbers(cp2());
    CHECK(cp2_class == Z({2}) * Rational(3) + Z({1, 1}) * Rational(3));
    CHECK(render_class(cp2_class) == "3·Z[2] + 3·Z[1,1]");
    for (unsigned n = 1; n <= 4; ++n) {
        auto cls = mxi_numbers(projective_space(n));
        for (const auto& alpha : ncsf::compositions(n))
            CHECK(cls.coefficient(alpha) == Rational(binomial(n + 1, static_cast<unsigned>(alpha.size()))));
    }
}

TEST_CASE("Mxi numbers are multiplicative under products", "[torictop][mxi][property]") {
    auto p1 = mxi_numbers(projective_space(1));
    CHECK(mxi_numbers(product(projective_space(1), projective_space(1))) == p1 * p1);
    CHECK(mxi_numbers(product(projective_space(1), projective_space(2))) == p1 * mxi_numbers(cp2()));
    CHECK(mxi_numbers(product(cp2(), projective_space(1))) == mxi_numbers(cp2()) * p1);
}

TEST_CASE("Mxi numbers abelianize to Chern numbers", "[torictop][mxi][property]") {
    // Summing Mxi values over rearrangements gives m_lambda(v)[M]; expanding e_I
    // in the monomial basis then recovers c^I[M].
    for (const auto& q : {cp2(), projective_space(3), product(projective_space(1), projective_space(1)), hirzebruch(1)}) {
        unsigned n = q.dimension();
        auto cls = mxi_numbers(q);
        std::map<ncsf::Partition, Rational> m_values;
        for (const auto& [alpha, c] : cls.terms()) m_values[ncsf::sorted_partition(alpha)] += c;
        auto chern = chern_numbers(q, Bundle::tangent);
        for (const auto& lambda : ncsf::partitions(n)) {
            auto em = ncsf::sym_convert(ncsf::SymF::single(ncsf::SymBasis::e, lambda), ncsf::SymBasis::m);
            Rational total;
            for (const auto& [mu, c] : em.terms()) total += c * m_values[mu];
            CHECK(total == Rational(chern.at(lambda)));
        }
    }
}

TEST_CASE("Delzant polytopes", "[torictop][delzant]") {
    Rational a(5, 2), b(3);
    auto interval = delzant_to_quasitoric(polytope({{1}, {-1}}, {Rational(0), -a}));
    CHECK(interval.symplectic_class == std::vector<Rational>{0, a});
    CHECK(mxi_numbers(interval.data) == Z({1}) * Rational(2));

    auto tri = delzant_to_quasitoric(polytope({{1, 0}, {0, 1}, {-1, -1}}, {Rational(0), Rational(0), -a}));
    CHECK(tri.symplectic_class == std::vector<Rational>{0, 0, a});
    CHECK(tri.data.complex == simplex_boundary(2));
    CHECK(mxi_numbers(tri.data) == mxi_numbers(cp2()));

    auto square = delzant_to_quasitoric(polytope({{1, 0}, {0, 1}, {-1, 0}, {0, -1}}, {Rational(0), Rational(0), -a, -b}));
    CHECK(square.symplectic_class == std::vector<Rational>{0, 0, a, b});
    CHECK(square.data.complex == SimplicialComplex(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}));
    CHECK(mxi_numbers(square.data) == Z({1, 1}) * Rational(4));
}

TEST_CASE("Delzant refusals", "[torictop][delzant]") {
    auto kind = [](const DelzantPolytope& p) {
        try {
            delzant_to_quasitoric(p);
        } catch (const DomainRefusal& e) {
            return e.kind();
        }
        return std::string("accepted");
    };
    CHECK(kind(polytope({{1, 0}, {0, 1}, {1, -1}}, {Rational(0), Rational(0), Rational(-1)})) == "Unbounded");
    CHECK(kind(polytope({{1, 0}, {0, 1}, {-1, -1}, {1, 1}}, {Rational(0), Rational(0), Rational(-1), Rational(0)})) ==
          "NonSimple");
    CHECK(kind(polytope({{1, 0}, {1, 2}, {-1, -1}}, {Rational(0), Rational(0), Rational(-3)})) == "NonDelzant");
    CHECK(kind(polytope({{1, 0}, {0, 1}, {-1, -1}, {-1, 0}}, {Rational(0), Rational(0), Rational(-1), Rational(-5)})) ==
          "Redundant");
    CHECK_THROWS_AS(delzant_to_quasitoric(polytope({{2, 0}, {0, 1}, {-1, -1}}, {Rational(0), Rational(0), Rational(-1)})),
                    InputError);
}

TEST_CASE("Hamiltonian numbers", "[torictop][hamiltonian]") {
    Rational a(7, 3);
    auto interval = delzant_to_quasitoric(polytope({{1}, {-1}}, {Rational(0), -a}));
    auto g = hamiltonian_numbers(interval.data, interval.symplectic_class, HamiltonianConvention::ginzburg);
    REQUIRE(g.size() == 2);
    CHECK((g[0].index.empty() && g[0].weight == 0 && g[0].value == a));
    CHECK((g[1].index == std::vector<unsigned>{1} && g[1].weight == 1 && g[1].value == Rational(-2)));

    auto tri = delzant_to_quasitoric(polytope({{1, 0}, {0, 1}, {-1, -1}}, {Rational(0), Rational(0), -a}));
    auto h = hamiltonian_numbers(tri.data, tri.symplectic_class, HamiltonianConvention::mxi);
    std::map<std::vector<unsigned>, Rational> table;
    for (const auto& e : h) table[e.index] = e.value;
    CHECK(table.at({}) == a * a);
    CHECK(table.at({1}) == Rational(3) * a);
    CHECK(table.at({2}) == Rational(3));
    CHECK(table.at({1, 1}) == Rational(3));

    // u -> 2u scales the weight-i entry by 2^{n-i}.
    std::vector<Rational> doubled;
    for (const auto& c : tri.symplectic_class) doubled.push_back(c * Rational(2));
    auto h2 = hamiltonian_numbers(tri.data, doubled, HamiltonianConvention::mxi);
    auto g2 = hamiltonian_numbers(tri.data, tri.symplectic_class, HamiltonianConvention::ginzburg);
    auto g2d = hamiltonian_numbers(tri.data, doubled, HamiltonianConvention::ginzburg);
    for (std::size_t i = 0; i < h.size(); ++i) CHECK(h2[i].value == h[i].value * pow(Rational(2), 2 - h[i].weight));
    for (std::size_t i = 0; i < g2.size(); ++i) CHECK(g2d[i].value == g2[i].value * pow(Rational(2), 2 - g2[i].weight));
    CHECK_THROWS_AS(hamiltonian_numbers(tri.data, {Rational(1)}, HamiltonianConvention::mxi), InputError);
}

TEST_CASE("symplectic volume", "[torictop][delzant][property]") {
    Rational a(9, 4), b(2), c(1, 3);
    auto interval = delzant_to_quasitoric(polytope({{1}, {-1}}, {Rational(0), -a}));
    Evaluator e1(interval.data);
    CHECK(e1.evaluate(linear_form(interval.symplectic_class)) == a);

    // n! vol(P) = u^n[M] for a triangle, a rectangle and a Hirzebruch trapezoid.
    std::vector<DelzantPolytope> polygons{
        polytope({{1, 0}, {0, 1}, {-1, -1}}, {Rational(0), Rational(0), -a}),
        polytope({{1, 0}, {0, 1}, {-1, 0}, {0, -1}}, {Rational(0), Rational(0), -a, -b}),
        polytope({{1, 0}, {0, 1}, {-1, -2}, {0, -1}}, {Rational(0), Rational(0), -(a + Rational(2) * c), -c}),
    };
    for (const auto& p : polygons) {
        auto d = delzant_to_quasitoric(p);
        Evaluator ev(d.data);
        auto u = linear_form(d.symplectic_class);
        CHECK(ev.evaluate(u * u) == Rational(2) * polygon_area(d.vertices));
    }
}

TEST_CASE("reaction networks to toric manifolds", "[torictop][crn]") {
    auto triangle = crn_to_toric(crn::parse_network("A <-> B : 1, 1\nB <-> C : 1, 1\nC <-> A : 1, 1"));
    CHECK(triangle.dimension == 2);
    CHECK(triangle.mxi == Z({2}) * Rational(3) + Z({1, 1}) * Rational(3));

    auto line = crn_to_toric(crn::parse_network("A <-> 2A : 1, 1"));
    CHECK(line.mxi == Z({1}) * Rational(2));

    auto kind = [](const std::string& text) {
        try {
            crn_to_toric(crn::parse_network(text));
        } catch (const DomainRefusal& e) {
            return e.kind() + ":" + e.detail();
        }
        return std::string("accepted");
    };
    CHECK(kind("2A <-> A + B : 1, 1\nA + B <-> 2B : 1, 1") == "DeficiencyNonzero:deficiency 1");
    CHECK(kind("2A <-> 0 : 1, 1") == "NonSmooth:elementary divisors [2]");
    CHECK(kind("2A <-> 3B : 1, 1") == "accepted");
    CHECK(kind("A -> B : 1") == "NotWeaklyReversible:some linkage class is not strongly connected");
}
