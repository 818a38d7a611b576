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

#ifndef TPG_ETERNAL_HPP
#define TPG_ETERNAL_HPP

#include <vector>

#include "tpg/game.hpp"

namespace tpg {

// Simple undirected graph for the eternal domination game.
class Graph {
  public:
    Graph() = default;
    Graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges);

    int vertex_count() const { return n_; }
    const std::vector<std::pair<Vertex, Vertex>>& edges() const { return edges_; }
    Mask neighbors(Vertex v) const;
    bool adjacent(Vertex u, Vertex v) const { return has(neighbors(u), v); }

  private:
    int n_ = 0;
    std::vector<std::pair<Vertex, Vertex>> edges_; // normalized u < v, deduped
    std::vector<Mask> adj_;
};

struct GuardConfig {
    Mask guards = 0;
};

struct EdSolveOptions {
    int max_vertices = 20;
};

// Exact solve of the eternal domination game on (g, d): Attacker repeatedly
// attacks an unguarded vertex, Defender must move an adjacent guard onto it.
// Attacker wins iff he can force an attack with no adjacent guard; repeated
// states are Defender-win cycles. Brute force, independent of the token-game
// solvers.
bool ed_attacker_wins(const Graph& g, const GuardConfig& d,
                      const EdSolveOptions& opts = {});

// The rank-2 token-sliding board equivalent to the eternal domination
// instance: vertices u_i (guard side up) and u'_i, singleton winning sets on
// every u'_i, ladder pairs {u_i,u'_i}, all pairs {u_i,u_j}, and {u'_i,u'_j}
// for every graph edge. Maker starts on u_{i0} for the smallest guarded i0;
// Breaker mirrors the guards on the u'_i. Play it as the (1,|D|)-game under
// the sliding rule.
struct SlidingReduction {
    Position position;
    GameSpec spec;
};

SlidingReduction build_sliding_position(const Graph& g, const GuardConfig& d);

struct EquivalenceReport {
    bool attacker_wins;
    bool maker_wins;
    bool equivalent;
};

// Solves both sides and reports whether the outcomes coincide.
EquivalenceReport check_reduction_equivalence(const Graph& g, const GuardConfig& d,
                                              const EdSolveOptions& opts = {});

} // namespace tpg

#endif
