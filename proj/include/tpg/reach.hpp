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

#ifndef TPG_REACH_HPP
#define TPG_REACH_HPP

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "tpg/game.hpp"

namespace tpg {

// A packed game state: Maker mask, Breaker mask, player to move. Solvers
// accept boards with at most 62 vertices so a state fits one 128-bit key.
using StateKey = unsigned __int128;

constexpr int kMaxSolverVertices = 62;

constexpr StateKey make_key(Mask maker, Mask breaker, Player to_move) {
    return (static_cast<StateKey>(maker) << 63) | (static_cast<StateKey>(breaker) << 1) |
           static_cast<StateKey>(to_move == Player::Breaker ? 1 : 0);
}
constexpr Mask key_maker(StateKey k) { return static_cast<Mask>(k >> 63); }
constexpr Mask key_breaker(StateKey k) {
    return static_cast<Mask>((k >> 1) & ((StateKey{1} << 62) - 1));
}
constexpr Player key_to_move(StateKey k) {
    return (k & 1) ? Player::Breaker : Player::Maker;
}

struct StateKeyHash {
    size_t operator()(StateKey k) const noexcept {
        std::uint64_t lo = static_cast<std::uint64_t>(k);
        std::uint64_t hi = static_cast<std::uint64_t>(k >> 64);
        std::uint64_t x = (lo + 0x9E3779B97F4A7C15ull) ^ (hi * 0xBF58476D1CE4E5B9ull);
        x ^= x >> 31;
        x *= 0x94D049BB133111EBull;
        x ^= x >> 29;
        return static_cast<size_t>(x);
    }
};

struct BuildOptions {
    std::size_t max_states = 50'000'000;
};

// The directed graph of game states reachable from a start position with
// Maker to move. Arcs are one legal move each; MakerWin and BreakerCertified
// states are sinks (the game is over there). Unlimited budgets play as n
// tokens. Adjacency is regenerated on demand instead of stored: graphs at
// solver scale have far more arcs than states.
class GameGraph {
  public:
    static GameGraph build(const Position& start, const GameSpec& spec,
                           const BuildOptions& opts = {});

    const Position& start() const { return start_; }
    const GameSpec& spec() const { return spec_; }          // as requested
    const GameSpec& effective_spec() const { return eff_; } // budgets capped to n

    std::size_t state_count() const { return states_.size(); }
    std::uint64_t arc_count() const { return arc_count_; }
    StateKey state(std::uint32_t i) const { return states_[i]; }
    TerminalStatus status(std::uint32_t i) const {
        return static_cast<TerminalStatus>(status_[i]);
    }
    std::uint32_t start_index() const { return start_index_; }
    const std::vector<std::uint32_t>& targets() const { return targets_; }

    std::optional<std::uint32_t> find(StateKey k) const;
    GameState state_at(std::uint32_t i) const;

    // Outgoing arcs of state i (empty for sinks), in legal_moves order.
    std::vector<std::pair<Move, std::uint32_t>> successors(std::uint32_t i) const;

    // The size bounds 2n^{2k} states / 2kn^{2k+1} arcs with k = max(a, b),
    // checked against the built graph. See bounds_note() when violated.
    bool size_bounds_hold() const { return bounds_ok_; }
    std::string bounds_note() const { return bounds_note_; }

    // Internal: used by the attractor pass.
    template <typename Fn>
    void for_each_predecessor(std::uint32_t i, Fn&& fn) const;
    std::uint16_t out_degree(std::uint32_t i) const { return out_degree_[i]; }

  private:
    Position start_;
    GameSpec spec_;
    GameSpec eff_;
    std::vector<StateKey> states_;
    std::unordered_map<StateKey, std::uint32_t, StateKeyHash> index_;
    std::vector<std::uint8_t> status_;
    std::vector<std::uint16_t> out_degree_;
    std::vector<std::uint32_t> targets_;
    std::uint64_t arc_count_ = 0;
    std::uint32_t start_index_ = 0;
    bool bounds_ok_ = true;
    std::string bounds_note_;
};

// Winner and Maker-move distance per state. distance[i] >= 0 iff Maker
// forces a fill from state i; -1 means Breaker holds out forever (which by
// the repetition rule is a Breaker win).
struct SolveResult {
    std::vector<std::int32_t> distance;
    bool maker_wins(std::uint32_t i) const { return distance[i] >= 0; }
};

// Backward attractor over the target set with distance layering: Maker
// states enter one layer above their best successor, Breaker states enter
// once every successor is attracted, at the max successor layer. Linear in
// states + arcs.
SolveResult attractor_solve(const GameGraph& g);

// The attracting move at a Maker-winning state, ties broken by smallest
// successor state index. nullopt when the state is a sink or Maker loses.
std::optional<Move> optimal_move(const GameGraph& g, const SolveResult& r,
                                 std::uint32_t i);

struct PositionReport {
    Player winner;
    std::optional<int> distance;   // Maker moves to force a fill
    std::optional<Move> best_move; // for the player to move at start
    std::uint64_t states = 0;
    std::uint64_t arcs = 0;
    bool size_bounds_hold = true;
};

// build + attractor + extraction for a single position, Maker to move.
PositionReport solve_position(const Position& start, const GameSpec& spec,
                              const BuildOptions& opts = {});

// --- inline ---

// Enumerates every predecessor state u (by key) with an arc u -> state i in
// this graph, i.e. inverts move application. fn(StateKey) may be called with
// keys that are not reachable; callers filter through find().
template <typename Fn>
void GameGraph::for_each_predecessor(std::uint32_t i, Fn&& fn) const {
    const StateKey k = states_[i];
    const Mask m = key_maker(k);
    const Mask b = key_breaker(k);
    const Player mover = opponent(key_to_move(k)); // who moved into this state
    const Hypergraph& h = *start_.board;
    const Mask own = mover == Player::Maker ? m : b;
    const Mask other = mover == Player::Maker ? b : m;
    const Mask occupied = m | b;
    const Mask free = all_vertices(h.vertex_count()) & ~occupied;

    auto emit = [&](Mask new_own) {
        Mask pm = mover == Player::Maker ? new_own : m;
        Mask pb = mover == Player::Maker ? b : new_own;
        fn(make_key(pm, pb, mover));
    };

    emit(own); // pass
    for_each_vertex(own, [&](Vertex to) {
        emit(own & ~bit(to)); // place(to)
        Mask sources = free;
        if (eff_.rule == MoveRule::Sliding)
            sources &= h.slide_neighbors(to);
        for_each_vertex(sources, [&](Vertex from) {
            emit((own & ~bit(to)) | bit(from)); // relocate(from, to)
        });
    });
    (void)other;
}

} // namespace tpg

#endif
