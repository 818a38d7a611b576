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

#include "tpg/eternal.hpp"

#include <algorithm>

#include "tpg/reach.hpp"

namespace tpg {

Graph::Graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges) : n_(n) {
    if (n < 0 || n > kMaxVertices)
        throw InvalidArgument("graph vertex count must be in [0, 64]");
    adj_.assign(static_cast<size_t>(n), 0);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw InvalidArgument("graph edge endpoint out of range");
        if (u == v)
            throw InvalidArgument("graph must be simple (no loops)");
        if (u > v)
            std::swap(u, v);
        if (has(adj_[static_cast<size_t>(u)], v))
            continue;
        adj_[static_cast<size_t>(u)] |= bit(v);
        adj_[static_cast<size_t>(v)] |= bit(u);
        edges_.emplace_back(u, v);
    }
}

Mask Graph::neighbors(Vertex v) const {
    if (v < 0 || v >= n_)
        throw InvalidArgument("vertex id out of range");
    return adj_[static_cast<size_t>(v)];
}

// Exact fixpoint solve of the guard game. States are (guard set, pending
// attack); Attacker wins exactly on the least fixpoint of "some attack is
// unanswerable or every answer stays winning". Everything outside it lets
// Defender cycle forever.
bool ed_attacker_wins(const Graph& g, const GuardConfig& d, const EdSolveOptions& opts) {
    const int n = g.vertex_count();
    if (n > opts.max_vertices || n > 24)
        throw ScaleLimit("eternal domination solver limited to " +
                         std::to_string(std::min(opts.max_vertices, 24)) + " vertices");
    if (d.guards & ~all_vertices(n))
        throw InvalidArgument("guard outside the graph");

    // cell(D, n) = attacker to move; cell(D, v) = attack on v pending.
    const size_t width = static_cast<size_t>(n) + 1;
    const size_t cells = (size_t{1} << n) * width;
    std::vector<std::uint8_t> attacker_win(cells, 0);
    auto cell = [&](Mask guards, int pending) {
        return static_cast<size_t>(guards) * width + static_cast<size_t>(pending);
    };

    for (bool changed = true; changed;) {
        changed = false;
        for (Mask guards = 0; guards < (Mask{1} << n); ++guards) {
            if (popcount(guards) != popcount(d.guards))
                continue;
            // pending attacks: Defender must move an adjacent guard in
            for (Vertex v = 0; v < n; ++v) {
                if (has(guards, v) || attacker_win[cell(guards, v)])
                    continue;
                const Mask answers = g.neighbors(v) & guards;
                bool all_lost = true;
                for_each_vertex(answers, [&](Vertex u) {
                    if (all_lost) {
                        const Mask moved = (guards & ~bit(u)) | bit(v);
                        if (!attacker_win[cell(moved, n)])
                            all_lost = false;
                    }
                });
                if (all_lost) { // includes "no answer at all"
                    attacker_win[cell(guards, v)] = 1;
                    changed = true;
                }
            }
            // attacker to move: pick any winning attack on an unguarded vertex
            if (!attacker_win[cell(guards, n)]) {
                bool wins = false;
                for (Vertex v = 0; v < n && !wins; ++v)
                    if (!has(guards, v) && attacker_win[cell(guards, v)])
                        wins = true;
                if (wins) {
                    attacker_win[cell(guards, n)] = 1;
                    changed = true;
                }
            }
        }
    }
    return attacker_win[cell(d.guards, n)] != 0;
}

SlidingReduction build_sliding_position(const Graph& g, const GuardConfig& d) {
    const int n = g.vertex_count();
    if (!d.guards)
        throw InvalidArgument("the reduction needs at least one guard");
    if (2 * n > kMaxVertices)
        throw ScaleLimit("reduction exceeds the vertex cap");

    auto top = [&](Vertex i) { return i; };          // u_i
    auto bottom = [&](Vertex i) { return n + i; };   // u'_i

    std::vector<Mask> edges;
    for (Vertex i = 0; i < n; ++i)
        edges.push_back(bit(bottom(i)));
    for (Vertex i = 0; i < n; ++i)
        edges.push_back(bit(top(i)) | bit(bottom(i)));
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j)
            edges.push_back(bit(top(i)) | bit(top(j)));
    for (auto [i, j] : g.edges())
        edges.push_back(bit(bottom(i)) | bit(bottom(j)));

    const Vertex seed = std::countr_zero(d.guards); // smallest guarded index
    Mask breaker = 0;
    for_each_vertex(d.guards, [&](Vertex i) { breaker |= bit(bottom(i)); });

    SlidingReduction out;
    out.position = Position(std::make_shared<Hypergraph>(2 * n, std::move(edges)),
                            bit(top(seed)), breaker);
    out.spec = GameSpec{Budget::finite(1), Budget::finite(popcount(d.guards)),
                        MoveRule::Sliding};
    return out;
}

EquivalenceReport check_reduction_equivalence(const Graph& g, const GuardConfig& d,
                                              const EdSolveOptions& opts) {
    EquivalenceReport report{};
    report.attacker_wins = ed_attacker_wins(g, d, opts);
    SlidingReduction red = build_sliding_position(g, d);
    report.maker_wins =
        solve_position(red.position, red.spec).winner == Player::Maker;
    report.equivalent = report.attacker_wins == report.maker_wins;
    return report;
}

} // namespace tpg
