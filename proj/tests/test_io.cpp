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

#include <random>

#include "helpers.hpp"
#include "tpg/io.hpp"

using namespace tpg;

TEST_CASE("board parsing") {
    const std::string text = "# sample\n"
                             "vertices 5\n"
                             "edge 0 1 2\n"
                             "edge 3 4\n"
                             "edge    # empty winning set\n"
                             "maker 0\n"
                             "breaker 4\n"
                             "pair 1 2\n";
    BoardFile f = parse_board(text);
    CHECK(f.position.hypergraph().vertex_count() == 5);
    CHECK(f.position.hypergraph().edge_count() == 3);
    CHECK(f.position.hypergraph().edges()[2] == 0);
    CHECK(f.position.maker == bit(0));
    CHECK(f.position.breaker == bit(4));
    REQUIRE(f.pairing);
    CHECK(f.pairing->pairs().size() == 1);
}

TEST_CASE("board parse errors carry line numbers") {
    auto expect_line = [](const std::string& text, int line) {
        try {
            parse_board(text);
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line == line);
        }
    };
    expect_line("vertices 3\nedge 0 5\n", 2);
    expect_line("edge 0 1\n", 1);          // vertices must come first
    expect_line("vertices 3\nfoo 1\n", 2); // unknown keyword
    expect_line("vertices 3\nvertices 4\n", 2);
    expect_line("vertices 99\n", 1);
    CHECK_THROWS_AS(parse_board("vertices 3\nmaker 1\nbreaker 1\n"), ParseError);
}

TEST_CASE("board round-trips through format") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 6);
        Hypergraph h = testing::random_hypergraph(rng, n, 4, 0 + 1, std::min(4, n));
        Mask m = 0, b = 0;
        for (int i = 0; i < n; ++i) {
            const int roll = static_cast<int>(rng() % 5);
            if (roll == 0)
                m |= bit(i);
            else if (roll == 1)
                b |= bit(i);
        }
        Position p(std::make_shared<Hypergraph>(h), m, b);
        BoardFile back = parse_board(format_board(p));
        CHECK(back.position.hypergraph() == p.hypergraph());
        CHECK(back.position.maker == p.maker);
        CHECK(back.position.breaker == p.breaker);
    }
}

TEST_CASE("graph parsing and round-trip") {
    GraphFile f = parse_graph("vertices 4\nedge 0 1\nedge 1 2\nguard 2\nguard 0\n");
    CHECK(f.graph.vertex_count() == 4);
    CHECK(f.graph.edges().size() == 2);
    CHECK(f.graph.adjacent(1, 2));
    CHECK(f.guards.guards == (bit(0) | bit(2)));

    GraphFile back = parse_graph(format_graph(f.graph, f.guards));
    CHECK(back.graph.edges() == f.graph.edges());
    CHECK(back.guards.guards == f.guards.guards);

    CHECK_THROWS_AS(parse_graph("vertices 3\nedge 0 1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("vertices 3\nedge 1 1\n"), ParseError);
}
