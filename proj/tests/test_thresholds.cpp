/*
 * Copyright 2026 the tokengames authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "helpers.hpp"
#include "tpg/constructions.hpp"
#include "tpg/thresholds.hpp"

using namespace tpg;

TEST_CASE("single big edge: Breaker blocks forever") {
    for (int k : {2, 3, 4}) {
        std::vector<Vertex> e;
        for (int i = 0; i < k; ++i)
            e.push_back(i);
        Hypergraph h(k, std::vector<std::vector<Vertex>>{e});
        CHECK(!theta(h).has_value());
        CHECK(!tau(h).has_value());
    }
}

TEST_CASE("two crossing 2-edges: theta = tau = 2") {
    Hypergraph h(3, std::vector<std::vector<Vertex>>{{0, 1}, {1, 2}});
    CHECK(theta(h) == 2);
    CHECK(tau(h) == 2);
}

TEST_CASE("singleton edge: tau = 1, theta = 1") {
    Hypergraph h(2, std::vector<std::vector<Vertex>>{{0}});
    CHECK(tau(h) == 1);
    CHECK(theta(h) == 1);
}

TEST_CASE("biggap headline values") {
    CHECK(theta(biggap(4, 9)) == 4);
    CHECK(tau(biggap(4, 9)) == 5);
}

TEST_CASE("diamond nunchaku: theta 3 and a logarithmic tau") {
    Hypergraph h = diamond_nunchaku(9);
    CHECK(theta(h) == 3);
    auto t = tau(h);
    REQUIRE(t.has_value());
    CHECK(*t <= static_cast<int>(std::ceil(std::log2(9))) + 3);
    // even-n padding changes nothing
    Hypergraph padded = diamond_nunchaku(10);
    CHECK(theta(padded) == 3);
    CHECK(tau(padded) == *t);
}

TEST_CASE("the threshold chain ark <= theta <= tau <= ceil(n/2)") {
    std::mt19937_64 rng(101);
    int finite = 0;
    for (int trial = 0; trial < 120; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 5);
        Hypergraph h = testing::random_hypergraph(rng, n, 1 + static_cast<int>(rng() % 4), 1, 3);
        auto th = theta(h);
        auto ta = tau(h);
        CHECK(th.has_value() == ta.has_value());
        if (!th)
            continue;
        ++finite;
        CHECK(*th >= std::max(1, h.antirank().value_or(1)));
        CHECK(*th <= *ta);
        CHECK(*ta <= (n + 1) / 2);
    }
    CHECK(finite > 20);
}

TEST_CASE("isolated vertices change neither threshold") {
    std::mt19937_64 rng(103);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 4);
        Hypergraph h = testing::random_hypergraph(rng, n, 2, 1, 3);
        Hypergraph padded(n + 2, h.edges());
        CHECK(theta(h) == theta(padded));
        CHECK(tau(h) == tau(padded));
    }
}

TEST_CASE("lifting shifts both thresholds by one") {
    std::mt19937_64 rng(107);
    int shifted = 0;
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 3);
        Hypergraph h = testing::random_uniform(rng, n, 2, 1 + static_cast<int>(rng() % 3));
        Hypergraph lifted = lift_plus_one(h);
        auto th = theta(h), thl = theta(lifted);
        auto ta = tau(h), tal = tau(lifted);
        CHECK(th.has_value() == thl.has_value());
        CHECK(ta.has_value() == tal.has_value());
        if (th) {
            CHECK(*thl == *th + 1);
            CHECK(*tal == *ta + 1);
            ++shifted;
        }
    }
    CHECK(shifted > 5);
}
