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

#ifndef TPG_TESTS_HELPERS_HPP
#define TPG_TESTS_HELPERS_HPP

#include <algorithm>
#include <map>
#include <random>
#include <vector>

#include "tpg/game.hpp"

namespace tpg::testing {

inline Position board(int n, const std::vector<std::vector<Vertex>>& edges, Mask maker = 0,
                      Mask breaker = 0) {
    return Position(std::make_shared<Hypergraph>(n, edges), maker, breaker);
}

inline GameSpec spec(int a, int b, MoveRule rule = MoveRule::Jumping) {
    return GameSpec{a < 0 ? Budget::unlimited() : Budget::finite(a),
                    b < 0 ? Budget::unlimited() : Budget::finite(b), rule};
}

// Random hypergraph: m edges, sizes in [min_size, max_size], dedup applied
// by the constructor.
inline Hypergraph random_hypergraph(std::mt19937_64& rng, int n, int m, int min_size,
                                    int max_size) {
    max_size = std::min(max_size, n);
    min_size = std::min(min_size, max_size);
    std::vector<Mask> edges;
    std::uniform_int_distribution<int> size_dist(min_size, max_size);
    std::uniform_int_distribution<int> vertex_dist(0, n - 1);
    for (int i = 0; i < m; ++i) {
        const int size = size_dist(rng);
        Mask e = 0;
        while (popcount(e) < size)
            e |= bit(vertex_dist(rng));
        edges.push_back(e);
    }
    return Hypergraph(n, edges);
}

// Random k-uniform hypergraph with m distinct edges (assumes C(n,k) >= m).
inline Hypergraph random_uniform(std::mt19937_64& rng, int n, int k, int m) {
    std::vector<Mask> edges;
    std::uniform_int_distribution<int> vertex_dist(0, n - 1);
    while (static_cast<int>(edges.size()) < m) {
        Mask e = 0;
        while (popcount(e) < k)
            e |= bit(vertex_dist(rng));
        if (std::find(edges.begin(), edges.end(), e) == edges.end())
            edges.push_back(e);
    }
    return Hypergraph(n, edges);
}

// Minimal classical Maker-Breaker referee (no tokens, no relocations, board
// fills up): a slow but independent check that the star-star token game
// matches the classical game on tiny boards.
inline Player classical_maker_breaker(const Hypergraph& h) {
    std::map<std::tuple<Mask, Mask, bool>, Player> memo;

    auto value = [&](auto&& self, Mask m, Mask b, bool maker_turn) -> Player {
        for (Mask e : h.edges())
            if ((e & ~m) == 0)
                return Player::Maker;
        const Mask free = all_vertices(h.vertex_count()) & ~(m | b);
        if (!free)
            return Player::Breaker;
        auto key = std::make_tuple(m, b, maker_turn);
        if (auto it = memo.find(key); it != memo.end())
            return it->second;
        Player result = maker_turn ? Player::Breaker : Player::Maker;
        for_each_vertex(free, [&](Vertex v) {
            if (result == (maker_turn ? Player::Maker : Player::Breaker))
                return;
            Player sub = maker_turn ? self(self, m | bit(v), b, false)
                                    : self(self, m, b | bit(v), true);
            if (sub == (maker_turn ? Player::Maker : Player::Breaker))
                result = sub;
        });
        memo[key] = result;
        return result;
    };
    return value(value, 0, 0, true);
}

} // namespace tpg::testing

#endif
