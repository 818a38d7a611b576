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

#ifndef TPG_PAIRING_HPP
#define TPG_PAIRING_HPP

#include <optional>
#include <utility>
#include <vector>

#include "tpg/game.hpp"

namespace tpg {

// A set of pairwise disjoint vertex pairs. Pairs may include already-claimed
// vertices; completeness only ever inspects residual edges.
class Pairing {
  public:
    Pairing() = default;
    explicit Pairing(std::vector<std::pair<Vertex, Vertex>> pairs);

    const std::vector<std::pair<Vertex, Vertex>>& pairs() const { return pairs_; }
    size_t size() const { return pairs_.size(); }

    void add(Vertex u, Vertex v);

    // The pair containing v, if any.
    std::optional<std::pair<Vertex, Vertex>> pair_of(Vertex v) const;

    // Number of pairs entirely inside the free vertices of p, i.e.
    // |Pi intersected with subsets of V(P)|.
    int live_pair_count(const Position& p) const;

    bool operator==(const Pairing&) const = default;

  private:
    std::vector<std::pair<Vertex, Vertex>> pairs_; // normalized u < v, sorted
    Mask used_ = 0;
};

struct CompletenessReport {
    bool complete;
    std::vector<ResidualEdge> uncovered; // residual edges no pair sits inside
};

// True iff every residual edge of p contains both vertices of some pair.
CompletenessReport is_complete(const Pairing& pi, const Position& p);

struct PairingSearchOptions {
    // Exact search is guaranteed only up to this many free vertices; larger
    // boards are refused with ScaleLimit.
    int max_free_vertices = 24;
    // Optional budgets (a, b): when set, a found pairing is returned only if
    // Breaker's spare tokens suffice to defend it from this position,
    // b - |B| >= min(a, live pairs).
    std::optional<std::pair<Budget, Budget>> budget_check;
};

// Exhaustive backtracking search for a pairing complete in p. Branches on
// pairs inside the smallest uncovered residual edge. Deterministic; returns
// nullopt when no complete pairing exists (or none passes the budget check).
std::optional<Pairing> find_complete_pairing(const Position& p,
                                             const PairingSearchOptions& opts = {});

// Breaker's pairing-strategy responder. If some pair has exactly one Maker
// token and its twin free (and not yet Breaker's), answers on the twin:
// a placement when a token is spare, otherwise a relocation from a token
// that is not defending a Maker-hit pair. Returns Pass when nothing needs
// an answer. Throws StrategyInapplicable when an answer is needed but no
// legal responding move exists.
Move pairing_breaker_move(const Pairing& pi, const GameState& s, const GameSpec& spec);

} // namespace tpg

#endif
