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

#include <map>
#include <random>

#include "helpers.hpp"
#include "tpg/bounded.hpp"
#include "tpg/constructions.hpp"
#include "tpg/oracle.hpp"
#include "tpg/reach.hpp"

using namespace tpg;
using tpg::testing::board;
using tpg::testing::spec;

TEST_CASE("state keys pack and unpack") {
    const StateKey k = make_key(bit(0) | bit(61), bit(5), Player::Breaker);
    CHECK(key_maker(k) == (bit(0) | bit(61)));
    CHECK(key_breaker(k) == bit(5));
    CHECK(key_to_move(k) == Player::Breaker);
}

TEST_CASE("tiny graph stays within 32 states") {
    GameGraph g = GameGraph::build(board(2, {{0, 1}}), spec(1, 1));
    CHECK(g.state_count() <= 32);
}

TEST_CASE("size bounds hold whenever some budget is at least two") {
    std::mt19937_64 rng(97);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 4);
        Hypergraph h = testing::random_hypergraph(rng, n, 2, 1, 3);
        const int a = 1 + static_cast<int>(rng() % 2);
        GameGraph g = GameGraph::build(Position(std::make_shared<Hypergraph>(h)), spec(a, 2));
        CHECK(g.size_bounds_hold());
    }
}

// 2n^2k with k = max(a,b) undercounts single-token games: partially placed
// token sets push the true state count past the bound. The solver records
// the violation instead of failing.
TEST_CASE("the k=1 bound is genuinely violated and reported") {
    GameGraph g = GameGraph::build(board(5, {{0, 1}}), spec(1, 1));
    CHECK(g.state_count() > 50); // 2 * 5^2
    CHECK(!g.size_bounds_hold());
    CHECK(!g.bounds_note().empty());
}

TEST_CASE("empty winning set makes the start a target") {
    GameGraph g = GameGraph::build(board(2, {{}}), spec(1, 1));
    REQUIRE(g.targets().size() == 1);
    CHECK(g.targets()[0] == g.start_index());
    CHECK(solve_position(board(2, {{}}), spec(1, 1)).winner == Player::Maker);
    CHECK(solve_position(board(2, {{}}), spec(1, 1)).distance == 0);
}

TEST_CASE("single edge with a=2 b=1 is a Breaker win") {
    PositionReport r = solve_position(board(2, {{0, 1}}), spec(2, 1));
    CHECK(r.winner == Player::Breaker);
    CHECK(!r.distance);
}

TEST_CASE("two crossing 2-edges fall in two rounds") {
    PositionReport r = solve_position(board(3, {{0, 1}, {1, 2}}), spec(2, 1));
    CHECK(r.winner == Player::Maker);
    CHECK(r.distance == 2);
    CHECK(r.best_move == Move::place(1));
}

TEST_CASE("empty hypergraph is a Breaker win") {
    CHECK(solve_position(board(3, {}), spec(-1, -1)).winner == Player::Breaker);
}

TEST_CASE("state cap raises ScaleLimit") {
    BuildOptions opts;
    opts.max_states = 10;
    CHECK_THROWS_AS(GameGraph::build(board(4, {{0, 1, 2, 3}}), spec(2, 2), opts), ScaleLimit);
}

TEST_CASE("successor and predecessor enumerations are transposes") {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 4);
        Hypergraph h = testing::random_hypergraph(rng, n, 2, 1, 3);
        const GameSpec sp = spec(1 + static_cast<int>(rng() % 2), 1 + static_cast<int>(rng() % 2),
                                 rng() % 2 ? MoveRule::Sliding : MoveRule::Jumping);
        GameGraph g = GameGraph::build(Position(std::make_shared<Hypergraph>(h)), sp);

        std::map<std::pair<std::uint32_t, std::uint32_t>, int> forward, backward;
        for (std::uint32_t i = 0; i < g.state_count(); ++i)
            for (auto& [mv, j] : g.successors(i))
                ++forward[{i, j}];
        for (std::uint32_t j = 0; j < g.state_count(); ++j)
            g.for_each_predecessor(j, [&](StateKey pk) {
                if (auto i = g.find(pk); i && g.status(*i) == TerminalStatus::Ongoing)
                    ++backward[{*i, j}];
            });
        CHECK(forward == backward);
        // no duplicate arcs anywhere
        for (auto& [arc, count] : forward)
            CHECK(count == 1);
    }
}

TEST_CASE("every arc is a legal move") {
    std::mt19937_64 rng(67);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 4);
        Hypergraph h = testing::random_hypergraph(rng, n, 3, 1, 3);
        const GameSpec sp = spec(2, 1, rng() % 2 ? MoveRule::Sliding : MoveRule::Jumping);
        GameGraph g = GameGraph::build(Position(std::make_shared<Hypergraph>(h)), sp);
        std::uint64_t arcs = 0;
        for (std::uint32_t i = 0; i < g.state_count(); ++i) {
            GameState s = g.state_at(i);
            for (auto& [mv, j] : g.successors(i)) {
                CHECK(is_legal(s, g.effective_spec(), mv));
                ++arcs;
            }
        }
        CHECK(arcs == g.arc_count());
    }
}

TEST_CASE("attractor agrees with the oracle on random boards") {
    std::mt19937_64 rng(71);
    int maker_wins = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 4); // up to 5
        Hypergraph h = testing::random_hypergraph(rng, n, 1 + static_cast<int>(rng() % 3), 1, 3);
        const GameSpec sp = spec(1 + static_cast<int>(rng() % 2), 1 + static_cast<int>(rng() % 2),
                                 rng() % 2 ? MoveRule::Sliding : MoveRule::Jumping);
        Position start(std::make_shared<Hypergraph>(h));
        const Player fast = solve_position(start, sp).winner;
        const Player slow = minimax_oracle(start, sp);
        CHECK(fast == slow);
        maker_wins += fast == Player::Maker;
    }
    CHECK(maker_wins > 30);
    CHECK(maker_wins < 270);
}

TEST_CASE("star-star solving matches the classical game") {
    std::mt19937_64 rng(73);
    for (int trial = 0; trial < 120; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 4);
        Hypergraph h = testing::random_hypergraph(rng, n, 1 + static_cast<int>(rng() % 3), 1, 3);
        Position start(std::make_shared<Hypergraph>(h));
        CHECK(solve_position(start, spec(-1, -1)).winner ==
              testing::classical_maker_breaker(h));
    }
}

TEST_CASE("outcome is monotone in the budgets") {
    std::mt19937_64 rng(79);
    for (int trial = 0; trial < 150; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 4);
        Hypergraph h = testing::random_hypergraph(rng, n, 1 + static_cast<int>(rng() % 3), 1, 3);
        Position start(std::make_shared<Hypergraph>(h));
        const int a = 1 + static_cast<int>(rng() % 2);
        const int b = 2;
        if (solve_position(start, spec(a, b)).winner == Player::Maker) {
            CHECK(solve_position(start, spec(a + 1, b)).winner == Player::Maker);
            CHECK(solve_position(start, spec(a, b - 1)).winner == Player::Maker);
        }
    }
}

TEST_CASE("deleting an edge never flips the outcome toward Maker") {
    std::mt19937_64 rng(83);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 4);
        Hypergraph h = testing::random_hypergraph(rng, n, 2 + static_cast<int>(rng() % 3), 1, 3);
        if (h.edge_count() < 2)
            continue;
        const GameSpec sp = spec(1 + static_cast<int>(rng() % 2), 1 + static_cast<int>(rng() % 2));
        Position start(std::make_shared<Hypergraph>(h));
        if (solve_position(start, sp).winner == Player::Maker)
            continue;
        // Breaker wins the full board: he also wins every subhypergraph
        std::vector<Mask> edges = h.edges();
        edges.erase(edges.begin() + static_cast<long>(rng() % edges.size()));
        Position sub(std::make_shared<Hypergraph>(n, edges));
        CHECK(solve_position(sub, sp).winner == Player::Breaker);
    }
}

TEST_CASE("nunchaku and necklace positions are Maker wins with three tokens") {
    CHECK(solve_position(nunchaku(3), spec(3, -1)).winner == Player::Maker);
    CHECK(solve_position(nunchaku(3), spec(3, -1)).distance <= 3); // 1 + ceil(log2 3)
    CHECK(solve_position(necklace(4), spec(3, -1)).winner == Player::Maker);
}

TEST_CASE("bounded solver reproduces attractor distances") {
    std::mt19937_64 rng(89);
    for (int trial = 0; trial < 150; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 4);
        Hypergraph h = testing::random_hypergraph(rng, n, 1 + static_cast<int>(rng() % 3), 1, 3);
        const GameSpec sp = spec(1 + static_cast<int>(rng() % 2), 1 + static_cast<int>(rng() % 2),
                                 rng() % 2 ? MoveRule::Sliding : MoveRule::Jumping);
        auto shared = std::make_shared<Hypergraph>(h);
        PositionReport full = solve_position(Position(shared), sp);
        BoundedSolver bounded(shared, sp);
        auto d = bounded.distance_deepening(GameState{Position(shared), Player::Maker}, 12);
        if (full.winner == Player::Maker) {
            REQUIRE(d.has_value());
            CHECK(*d == *full.distance);
        } else {
            CHECK(!d.has_value());
        }
    }
}

TEST_CASE("bounded solver matches the attractor on nunchakus") {
    for (int length : {1, 2, 3, 4}) {
        Position p = nunchaku(length);
        const GameSpec sp = spec(3, -1);
        PositionReport full = solve_position(p, sp);
        BoundedSolver bounded(p.board, sp);
        auto d = bounded.distance_deepening(GameState{p, Player::Maker}, 10);
        REQUIRE(d.has_value());
        CHECK(*d == *full.distance);
    }
}
