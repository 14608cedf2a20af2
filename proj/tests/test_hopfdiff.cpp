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

#include <toricnet/hopf/coaction.hpp>
#include <toricnet/hopf/diffeo.hpp>
#include <toricnet/hopf/fgl.hpp>
#include <toricnet/hopf/hopf_algebra.hpp>

using namespace toricnet;
using namespace toricnet::hopf;
using ncsf::Z;

namespace {

const NCF kOne{Rational(1)};
const TPoly kT1{Rational(1)};

// Delta_N Z_k read from the left-coefficient composition (Z (x) 1)((1 (x) Z)(T)).
TensorNCF composed_bfk(unsigned k) {
    unsigned order = k + 1;
    auto outer = diffeo_with<TensorNCF>(order, [](unsigned i) { return tensor(ncsf::Zi(i), kOne); });
    auto inner = diffeo_with<TensorNCF>(order, [](unsigned i) { return tensor(kOne, ncsf::Zi(i)); });
    return compose(outer, inner)[k + 1];
}

}  // namespace

TEST_CASE("Landweber-Novikov coproduct", "[hopf][ln]") {
    CHECK(ln_coproduct(t(1)) == tensor(t(1), kT1) + tensor(kT1, t(1)));
    CHECK(ln_coproduct(t(2)) == tensor(t(2), kT1) + tensor(t(1), t(1)) * Rational(2) + tensor(kT1, t(2)));
    auto d3 = ln_coproduct(t(3));
    TPoly left, right;
    for (const auto& [k, c] : d3.terms()) {
        if (k.first.empty()) left.add_term(k.second, c);
        if (k.second.empty()) right.add_term(k.first, c);
    }
    CHECK(left == t(3));
    CHECK(right == t(3));
}

TEST_CASE("Landweber-Novikov antipode", "[hopf][ln]") {
    CHECK(ln_antipode(t(1)) == -t(1));
    CHECK(ln_antipode(t(2)) == t(1) * t(1) * Rational(2) - t(2));
    CHECK(satisfies_antipode(t(2), ln_coproduct, ln_antipode));
    // Series inversion agrees with the graded recursion.
    auto gens = ln_coproduct_generators(8);
    AntipodeTable<TPolyPolicy> recursion([&](unsigned i) { return gens.at(i); });
    auto inverse = ln_antipode_generators(8);
    for (unsigned i = 1; i <= 8; ++i) CHECK(recursion.generator(i) == inverse[i]);
}

TEST_CASE("BFK coproduct", "[hopf][bfk]") {
    CHECK(bfk_coproduct(Z({1})) == tensor(Z({1}), kOne) + tensor(kOne, Z({1})));
    CHECK(bfk_coproduct(Z({2})) == tensor(Z({2}), kOne) + tensor(Z({1}), Z({1})) * Rational(2) + tensor(kOne, Z({2})));
    CHECK(bfk_coproduct(Z({3})) == tensor(Z({3}), kOne) + tensor(Z({2}), Z({1})) * Rational(3) +
                                       tensor(Z({1}), Z({2}) * Rational(2) + Z({1, 1})) + tensor(kOne, Z({3})));
    CHECK(bfk_coproduct(Z({2})).str() == "1⊗Z[2] + 2·Z[1]⊗Z[1] + Z[2]⊗1");
    auto gens = bfk_coproduct_generators(8);
    for (unsigned k = 1; k <= 8; ++k) CHECK(gens[k] == composed_bfk(k));
    CHECK(bfk_coproduct(Z({1, 2})) == bfk_coproduct(Z({1})) * bfk_coproduct(Z({2})));
}

TEST_CASE("BFK antipode", "[hopf][bfk]") {
    CHECK(bfk_antipode(Z({1})) == -Z({1}));
    CHECK(bfk_antipode(Z({2})) == Z({1, 1}) * Rational(2) - Z({2}));
    CHECK(satisfies_antipode(Z({3}), bfk_coproduct, bfk_antipode));
    // Anti-multiplicative.
    CHECK(bfk_antipode(Z({1, 2})) == bfk_antipode(Z({2})) * bfk_antipode(Z({1})));
}

TEST_CASE("Hopf axioms on generators up to weight 8", "[hopf][property]") {
    auto ln = ln_coproduct_generators(8);
    auto ln_delta = [&](const TPoly& p) { return extend_multiplicatively<TensorLN>(p, [&](unsigned i) { return ln.at(i); }); };
    auto bfk = bfk_coproduct_generators(8);
    auto bfk_delta = [&](const NCF& p) { return extend_multiplicatively<TensorNCF>(p, [&](unsigned i) { return bfk.at(i); }); };
    auto chi_n = bfk_antipode_table(8);
    auto chi_s_gens = ln_antipode_generators(8);
    auto chi_s = [&](const TPoly& p) { return extend_multiplicatively<TPoly>(p, [&](unsigned i) { return chi_s_gens.at(i); }); };
    for (unsigned i = 1; i <= 8; ++i) {
        INFO("generator " << i);
        CHECK(is_coassociative(t(i), ln_delta));
        CHECK(is_counital(t(i), ln_delta));
        CHECK(satisfies_antipode(t(i), ln_delta, chi_s));
        CHECK(is_coassociative(Z({i}), bfk_delta));
        CHECK(is_counital(Z({i}), bfk_delta));
        CHECK(satisfies_antipode(Z({i}), bfk_delta, [&](const NCF& x) { return chi_n(x); }));
        // Grading: everything homogeneous of weight i.
        CHECK(ln[i].is_homogeneous(i));
        CHECK(bfk[i].is_homogeneous(i));
        CHECK(chi_s_gens[i].is_homogeneous(i));
        CHECK(chi_n.generator(i).is_homogeneous(i));
    }
    for (unsigned n = 1; n <= 5; ++n)
        for (const auto& alpha : ncsf::compositions(n))
            CHECK(satisfies_antipode(Z(alpha), bfk_delta, [&](const NCF& x) { return chi_n(x); }));
}

TEST_CASE("abelianization of BFK is Landweber-Novikov", "[hopf][abelianize]") {
    CHECK(ab_bfk_to_ln(4).ok);
    CHECK(ncsf::abelianize_diffeo(bfk_antipode(Z({2}))) == ln_antipode(t(2)));
    CHECK(abelianize(bfk_coproduct(Z({2}))) == ln_coproduct(t(2)));
    auto report = ab_bfk_to_ln(8);
    CHECK(report.ok);
    CHECK(report.checked_words == 255);
}

TEST_CASE("MU coaction on logarithm generators", "[hopf][coaction]") {
    CHECK(mu_coaction(cp(1)) == tensor(cp(1), kT1) + tensor(cp(0), t(1)) * Rational(2));
    CPPoly counit_image;
    for (const auto& [k, c] : mu_coaction(cp(2)).terms())
        if (k.second.empty()) counit_image.add_term(k.first, c);
    CHECK(counit_image == cp(2));
    for (unsigned j = 1; j <= 5; ++j) {
        INFO("CP" << j);
        CHECK(is_coaction(cp(j), mu_coaction));
        CHECK(mu_coaction(cp(j)).is_homogeneous(j));
    }
    CHECK(is_coaction(cp(1) * cp(2), mu_coaction));
}

TEST_CASE("MU coaction on the b-series", "[hopf][coaction]") {
    auto b1 = ncsf::BPoly::basis({1});
    CHECK(b_coaction(b1) == tensor(b1, kT1) + tensor(ncsf::BPoly(Rational(1)), t(1)));
    for (unsigned i = 1; i <= 5; ++i) CHECK(is_coaction(ncsf::BPoly::basis({i}), b_coaction));
}

TEST_CASE("formal group law over NSymm", "[hopf][fgl]") {
    auto f = fgl_over_N(6);
    // Unit: F(x,0) = x and F(0,y) = y.
    for (const auto& [e, c] : f.terms()) {
        if (e[1] == 0) CHECK((e[0] == 1 && c == kOne));
        if (e[0] == 0) CHECK((e[1] == 1 && c == kOne));
        CHECK(f.coefficient({e[1], e[0]}) == c);
    }
    CHECK(f.coefficient({1, 1}) == Z({1}) * Rational(2));
    CHECK(abelianize_fgl(f) == commutative_fgl(6));
    CHECK_THROWS_AS(fgl_over_N(9), InputError);
}

TEST_CASE("associativity of the NSymm law", "[hopf][fgl]") {
    CHECK(associativity_report(commutative_fgl(6)).associative);
    CHECK(associativity_report(fgl_over_N(4)).associative);
    // Noncommuting coefficients break associativity at total degree 5.
    auto report = associativity_report(fgl_over_N(6));
    CHECK_FALSE(report.associative);
    CHECK(report.degree == 5);
    CHECK_FALSE(report.difference.empty());
}

TEST_CASE("beta deformation", "[hopf][beta]") {
    auto zero = beta_deform(Rational(0), 6);
    CHECK(zero == TruncSeries<NCF>::constant(kOne, 6));
    auto b = beta_deform(4);
    auto beta = [](unsigned k) { return LinComb<ParameterPolicy>::basis(k); };
    CHECK(b[1] == tensor(beta(1), Z({1})));
    CHECK(b[2] == tensor(beta(1), Z({2}) * Rational(2) - Z({1, 1})) + tensor(beta(2), Z({1, 1}) * Rational(1, 2)));
    // At beta = 1 this is exp(Psi(T)) built from the Cartier elements.
    auto c = ncsf::cartier(6);
    TruncSeries<NCF> psi(6);
    for (unsigned k = 1; k <= 6; ++k) psi.set(k, c.psi[k]);
    auto one = beta_deform(Rational(1), 6);
    CHECK(one == exp(psi));
    CHECK(one[1] == Z({1}));
    // Grouplike: exp of a primitive series.
    for (unsigned k = 1; k <= 4; ++k) {
        TensorNCF expected;
        for (unsigned j = 0; j <= k; ++j) expected += tensor(one[j], one[k - j]);
        CHECK(ncsf::nsf_coproduct(one[k]) == expected);
    }
}
