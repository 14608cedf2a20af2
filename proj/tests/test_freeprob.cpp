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

#include <random>
#include <set>

#include <toricnet/freeprob/cumulants.hpp>
#include <toricnet/freeprob/nc_cumulants.hpp>
#include <toricnet/freeprob/partitions.hpp>

using namespace toricnet;
using namespace toricnet::freeprob;
using ncsf::Z;

namespace {

using Blocks = std::vector<std::vector<unsigned>>;

// Every set partition of {0..n-1}, built by placing each element in turn.
void all_set_partitions(unsigned n, unsigned next, Blocks& cur, std::vector<Blocks>& out) {
    if (next == n) {
        out.push_back(cur);
        return;
    }
    for (std::size_t b = 0; b < cur.size(); ++b) {
        cur[b].push_back(next);
        all_set_partitions(n, next + 1, cur, out);
        cur[b].pop_back();
    }
    cur.push_back({next});
    all_set_partitions(n, next + 1, cur, out);
    cur.pop_back();
}

std::vector<Blocks> all_set_partitions(unsigned n) {
    std::vector<Blocks> out;
    Blocks cur;
    all_set_partitions(n, 0, cur, out);
    return out;
}

bool is_crossing(const Blocks& p) {
    for (std::size_t x = 0; x < p.size(); ++x)
        for (std::size_t y = 0; y < p.size(); ++y) {
            if (x == y) continue;
            for (unsigned a : p[x])
                for (unsigned c : p[x])
                    for (unsigned b : p[y])
                        for (unsigned d : p[y])
                            if (a < b && b < c && c < d) return true;
        }
    return false;
}

MomentSeq partition_moments(const CumulantSeq& k, bool noncrossing_only) {
    MomentSeq m(k.size());
    m[0] = Rational(1);
    for (unsigned n = 1; n < k.size(); ++n)
        for (const auto& p : all_set_partitions(n)) {
            if (noncrossing_only && is_crossing(p)) continue;
            Rational term(1);
            for (const auto& block : p) term *= k[block.size()];
            m[n] += term;
        }
    return m;
}

Rational random_rational(std::mt19937& rng) {
    std::uniform_int_distribution<long> num(-9, 9), den(1, 6);
    return Rational(num(rng), den(rng));
}

CumulantSeq random_sequence(std::mt19937& rng, unsigned n) {
    CumulantSeq k(n + 1);
    for (unsigned i = 1; i <= n; ++i) k[i] = random_rational(rng);
    return k;
}

MomentSeq random_moments(std::mt19937& rng, unsigned n) {
    auto m = random_sequence(rng, n);
    m[0] = Rational(1);
    return m;
}

std::vector<Rational> rats(std::initializer_list<long> xs) {
    std::vector<Rational> out;
    for (long x : xs) out.emplace_back(x);
    return out;
}

BigInt catalan(unsigned n) { return binomial(2 * n, n) / (n + 1); }

}  // namespace

TEST_CASE("non-crossing partition enumeration", "[freeprob][oracle]") {
    CHECK(nc_partition_oracle(3).size() == 5);
    CHECK(nc_partition_oracle(4).size() == 14);
    for (unsigned n = 0; n <= 10; ++n) CHECK(BigInt(nc_partition_oracle(n).size()) == catalan(n));
    CHECK_THROWS_AS(nc_partition_oracle(11), InputError);
    // Same set as filtering all set partitions for crossings.
    for (unsigned n = 1; n <= 7; ++n) {
        std::set<SetPartition> brute;
        for (const auto& p : all_set_partitions(n)) {
            if (is_crossing(p)) continue;
            SetPartition labels(n);
            // Relabel blocks by first appearance.
            std::vector<int> seen(p.size(), -1);
            unsigned next = 0;
            for (unsigned i = 0; i < n; ++i)
                for (std::size_t b = 0; b < p.size(); ++b)
                    for (unsigned e : p[b])
                        if (e == i) {
                            if (seen[b] < 0) seen[b] = static_cast<int>(next++);
                            labels[i] = static_cast<unsigned>(seen[b]);
                        }
            brute.insert(labels);
        }
        auto nc = nc_partition_oracle(n);
        CHECK(std::set<SetPartition>(nc.begin(), nc.end()) == brute);
    }
}

TEST_CASE("free cumulant spot values", "[freeprob][free]") {
    CHECK(moments_to_free_cumulants(rats({1, 1, 1, 1, 1, 1})) == rats({0, 1, 0, 0, 0, 0}));
    CHECK(moments_to_free_cumulants(rats({1, 0, 1, 0, 2, 0, 5})) == rats({0, 0, 1, 0, 0, 0, 0}));
    CHECK(moments_to_free_cumulants(rats({1, 1, 2, 5, 14})) == rats({0, 1, 1, 1, 1}));
    CHECK(free_cumulants_to_moments(rats({0, 0, 1, 0, 0, 0, 0})) == rats({1, 0, 1, 0, 2, 0, 5}));
    CHECK(free_cumulants_to_moments(rats({0, 0, 0, 0, 0})) == rats({1, 0, 0, 0, 0}));
    CHECK(moments_from_nc_partitions(rats({0, 0, 1, 0, 0, 0, 0})) == rats({1, 0, 1, 0, 2, 0, 5}));
    CHECK_THROWS_AS(moments_to_free_cumulants(rats({2, 1})), InputError);
}

TEST_CASE("free transforms against the partition oracle", "[freeprob][property]") {
    std::mt19937 rng(20261019);
    for (int trial = 0; trial < 50; ++trial) {
        auto k = random_sequence(rng, 8);
        auto m = free_cumulants_to_moments(k);
        CHECK(m == moments_from_nc_partitions(k));
        CHECK(moments_to_free_cumulants(m) == k);
    }
    // Independent brute-force filter at lower n.
    for (int trial = 0; trial < 5; ++trial) {
        auto k = random_sequence(rng, 6);
        CHECK(free_cumulants_to_moments(k) == partition_moments(k, true));
    }
}

TEST_CASE("free transforms round trip", "[freeprob][property]") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        auto m = random_moments(rng, 8);
        CHECK(free_cumulants_to_moments(moments_to_free_cumulants(m)) == m);
    }
}

TEST_CASE("classical cumulants", "[freeprob][classical]") {
    Rational c(3, 2);
    MomentSeq point{Rational(1)};
    for (unsigned i = 1; i <= 6; ++i) point.push_back(pow(c, i));
    auto k = classical_cumulants(point);
    CHECK(k[1] == c);
    for (unsigned i = 2; i <= 6; ++i) CHECK(k[i].is_zero());
    CHECK(classical_cumulants(rats({1, 1, 2, 5, 15})) == rats({0, 1, 1, 1, 1}));
    CHECK(classical_cumulants(rats({1, 0, 1, 0, 3})) == rats({0, 0, 1, 0, 0}));
    std::mt19937 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        auto kk = random_sequence(rng, 8);
        auto m = classical_moments(kk);
        CHECK(m == partition_moments(kk, false));
        CHECK(classical_cumulants(m) == kk);
    }
}

TEST_CASE("Hirzebruch K-series", "[freeprob][hirzebruch]") {
    CHECK(hirzebruch_K(rats({0, 1, 0, 0, 0})) == rats({1, 0, 0, 0}));
    CHECK(hirzebruch_K(todd_log(5)) ==
          std::vector<Rational>{1, Rational(1, 2), Rational(1, 12), 0, Rational(-1, 720)});
    CHECK(hirzebruch_K(l_genus_log(5)) == std::vector<Rational>{1, 0, Rational(1, 3), 0, Rational(-1, 45)});
    CHECK_THROWS_AS(hirzebruch_K(rats({0, 2, 1})), InputError);
    // With l_n = m_{n-1} both constructions are z over a compositional inverse.
    std::mt19937 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        auto m = random_moments(rng, 7);
        std::vector<Rational> l{Rational(0)};
        l.insert(l.end(), m.begin(), m.end());
        auto kk = hirzebruch_K(l);
        auto k = moments_to_free_cumulants(m);
        REQUIRE(kk.size() == k.size());
        CHECK(kk[0].is_one());
        for (std::size_t i = 1; i < k.size(); ++i) CHECK(kk[i] == k[i]);
    }
}

TEST_CASE("noncommutative cumulant series", "[freeprob][nc]") {
    auto nc = nc_cumulant_series(3);
    NCF one(Rational(1));
    CHECK(nc.raw[1] == -one);
    CHECK(nc.raw[2] == -Z({1}));
    CHECK(nc.raw[3] == Z({2}) - Z({1, 1}) * Rational(2));
    CHECK(nc.normalized[0] == one);
    CHECK(nc.normalized[1] == Z({1}));
    CHECK(nc.normalized[2] == Z({2}) - Z({1, 1}));
    CHECK_THROWS_AS(nc_cumulant_series(9), InputError);
}

TEST_CASE("noncommutative cumulants abelianize to free cumulants", "[freeprob][nc][property]") {
    auto nc = nc_cumulant_series(7);
    REQUIRE(nc.normalized.order() == 6);
    std::mt19937 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        auto m = random_moments(rng, 6);
        auto k = moments_to_free_cumulants(m);
        for (unsigned n = 1; n <= 6; ++n) CHECK(evaluate_at_moments(nc.normalized[n], m) == k[n]);
    }
}

TEST_CASE("floating moments convert exactly", "[freeprob]") {
    auto m = moments_from_doubles({1.0, 0.5, 0.1});
    CHECK(m[1] == Rational(1, 2));
    CHECK(m[2] == Rational::from_double(0.1));
    CHECK(m[2] != Rational(1, 10));
}
