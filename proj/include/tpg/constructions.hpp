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

#ifndef TPG_CONSTRUCTIONS_HPP
#define TPG_CONSTRUCTIONS_HPP

#include <array>
#include <optional>

#include "tpg/game.hpp"
#include "tpg/pairing.hpp"

namespace tpg {

// All generators are deterministic: identical parameters give identical
// vertex numbering and edge order.

// Path of triples a_{i-1}, b_i, a_i with Maker already on both ends.
// Vertices: a_i -> i for i in [0, L], b_i -> L + i for i in [1, L].
struct NunchakuLayout {
    int length;
    Vertex a(int i) const { return i; }
    Vertex b(int i) const { return length + i; }
};
Position nunchaku(int length);
std::optional<NunchakuLayout> match_nunchaku(const Position& p);

// Cycle of triples with a single Maker token on a_1.
// Vertices: a_i -> i - 1 for i in [1, L], b_i -> L + i - 1.
struct NecklaceLayout {
    int length;
    Vertex a(int i) const { return i - 1; }
    Vertex b(int i) const { return length + i - 1; }
};
Position necklace(int length);
std::optional<NecklaceLayout> match_necklace(const Position& p);

// Token-free nunchaku: each end token is replaced by a three-vertex diamond
// {x, p, q} with edges {end, x, p} and {end, x, q}, so claiming the end
// forces an answer inside the diamond. n = 2L + 7 (+1 isolated vertex for
// even n). Requires n >= 9.
Hypergraph diamond_nunchaku(int n);

// The floor(k/2)+1 edge family on which Maker wins the (k, 1)-game: a core
// edge u_1..u_k and progressively shorter u-tails padded with fresh
// v-vertices.
Hypergraph k_vs_1(int k);

// Adds v, vbar to a k-uniform board: every old edge gains v, and {v, vbar}
// completes with every (k-1)-subset of the old vertices. Shifts the game by
// exactly one token per side and one round.
Hypergraph lift_plus_one(const Hypergraph& h);

// The k-uniform family with theta = k and tau = ceil(n/2): a 4-uniform
// b-studded cycle plus two guard gadgets (lifted k-4 times for k > 4).
// 4-uniform vertex numbering: a_i -> i - 1 (i in [1, L+1]),
// b_i -> L + i (i in [1, L]), abar_1 -> 2L+1, abar_2 -> 2L+2; the gadget
// vertices u_1..u_5 alias the first five of a_3, ..., a_{L+1}, b_1, ..., b_L.
struct BiggapLayout {
    int n;
    int chain_length; // L = (n' - 3) / 2 of the odd core
    Vertex a(int i) const { return i - 1; }
    Vertex b(int i) const { return chain_length + i; }
    Vertex abar(int i) const { return 2 * chain_length + i; }
    std::array<Vertex, 5> u;
};
Hypergraph biggap(int k, int n);
std::optional<BiggapLayout> match_biggap4(const Position& p);

// The 4-uniform family on 6N+8 vertices with theta = N+2: a 2N-edge ladder
// threaded through c_1..c_N plus one guard gadget per long-lived vertex.
// Numbering: a_i -> i (i in [0, 2N]), b_i -> 2N + i, c_i -> 4N + i,
// cbar_i -> 5N + i, abar_0 -> 6N+1, abar_2N -> 6N+2, u_j -> 6N+2+j.
struct BigthetaLayout {
    int N;
    Vertex a(int i) const { return i; }
    Vertex b(int i) const { return 2 * N + i; }
    Vertex c(int i) const { return 4 * N + i; }
    Vertex cbar(int i) const { return 5 * N + i; }
    Vertex abar0() const { return 6 * N + 1; }
    Vertex abar2N() const { return 6 * N + 2; }
    Vertex u(int j) const { return 6 * N + 2 + j; }
};
struct BigthetaBoard {
    Hypergraph hypergraph;
    Pairing canonical_pairing; // covers every edge except e_N
    BigthetaLayout layout;
};
BigthetaBoard bigtheta(int N);
std::optional<BigthetaLayout> match_bigtheta(const Position& p);

// Closed form for 2-uniform boards with a >= 2: Breaker wins iff the edges
// are pairwise disjoint and b >= min(a, |E|).
Player two_uniform_outcome(const Hypergraph& h, Budget a, Budget b);

} // namespace tpg

#endif
