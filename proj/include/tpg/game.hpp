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

#ifndef TPG_GAME_HPP
#define TPG_GAME_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "tpg/hypergraph.hpp"

namespace tpg {

enum class Player : std::uint8_t { Maker = 0, Breaker = 1 };

constexpr Player opponent(Player p) {
    return p == Player::Maker ? Player::Breaker : Player::Maker;
}

const char* player_name(Player p);

// Token budget: a positive count, or unlimited (written `star` in the CLI).
class Budget {
  public:
    static constexpr Budget unlimited() { return Budget(-1); }
    static Budget finite(int count) {
        if (count < 1)
            throw InvalidArgument("token budget must be a positive integer");
        return Budget(count);
    }

    bool is_unlimited() const { return count_ < 0; }
    int count() const { return count_; } // -1 when unlimited

    // Effective token cap on an n-vertex board. A player never benefits from
    // more tokens than there are vertices, so unlimited plays as n.
    int effective(int n) const { return is_unlimited() ? n : (count_ < n ? count_ : n); }

    bool operator==(const Budget&) const = default;
    std::string to_string() const { return is_unlimited() ? "star" : std::to_string(count_); }

  private:
    constexpr explicit Budget(int c) : count_(c) {}
    int count_ = -1;
};

enum class MoveRule : std::uint8_t { Jumping = 0, Sliding = 1 };

struct GameSpec {
    Budget maker_budget = Budget::unlimited();
    Budget breaker_budget = Budget::unlimited();
    MoveRule rule = MoveRule::Jumping;

    bool operator==(const GameSpec&) const = default;
};

// (H, M, B): the board plus each player's occupied vertex set.
struct Position {
    std::shared_ptr<const Hypergraph> board;
    Mask maker = 0;
    Mask breaker = 0;

    Position() = default;
    Position(std::shared_ptr<const Hypergraph> h, Mask m = 0, Mask b = 0);

    const Hypergraph& hypergraph() const { return *board; }
    Mask occupied() const { return maker | breaker; }
    Mask free_vertices() const {
        return all_vertices(board->vertex_count()) & ~occupied();
    }
    Mask tokens(Player p) const { return p == Player::Maker ? maker : breaker; }
};

struct GameState {
    Position position;
    Player to_move = Player::Maker;
};

// One residual edge of a position: the source edge index in the hypergraph
// and what Maker still has to fill (may be empty if she already filled it).
struct ResidualEdge {
    int edge_index;
    Mask residual;
};

// The position's view V(P), E(P): free vertices, plus every edge that is
// disjoint from B with Maker's vertices removed.
struct PositionView {
    Mask free;
    std::vector<ResidualEdge> residual_edges;
};

PositionView position_view(const Position& p);

struct Move {
    enum class Kind : std::uint8_t { Pass = 0, Place = 1, Relocate = 2 };

    Kind kind = Kind::Pass;
    Vertex from = -1; // Relocate only
    Vertex to = -1;   // Place and Relocate

    static Move pass() { return Move{}; }
    static Move place(Vertex v) { return Move{Kind::Place, -1, v}; }
    static Move relocate(Vertex from, Vertex to) { return Move{Kind::Relocate, from, to}; }

    auto operator<=>(const Move&) const = default;
    std::string to_string() const; // "pass" | "place 3" | "move 1 4"
};

Move parse_move(const std::string& text);

enum class TerminalStatus : std::uint8_t {
    MakerWin = 0,        // some edge is entirely Maker's (including an empty edge)
    BreakerCertified = 1, // B is a transversal: Breaker can pass forever
    Ongoing = 2,
};

TerminalStatus terminal_status(const Position& p);

// Deterministic order: Pass, then Place ascending, then Relocate in
// lexicographic (from, to) order. Relocating a token onto its own vertex is
// not a move (it is Pass).
std::vector<Move> legal_moves(const GameState& s, const GameSpec& spec);

bool is_legal(const GameState& s, const GameSpec& spec, const Move& m);

// Throws IllegalMove naming the violated precondition.
GameState apply_move(const GameState& s, const GameSpec& spec, const Move& m);

// Allocation-free move iteration for the solvers. Calls fn(Move) for every
// legal move of `s` under `spec`, in the same deterministic order as
// legal_moves. Terminal states (MakerWin / BreakerCertified) still have
// moves here; solvers decide what counts as a sink.
template <typename Fn>
void for_each_move(const GameState& s, const GameSpec& spec, Fn&& fn) {
    const Hypergraph& h = s.position.hypergraph();
    const int n = h.vertex_count();
    const Mask mine = s.position.tokens(s.to_move);
    const Mask free = s.position.free_vertices();
    const Budget budget = s.to_move == Player::Maker ? spec.maker_budget : spec.breaker_budget;

    fn(Move::pass());
    if (budget.is_unlimited() || popcount(mine) < budget.count()) {
        for_each_vertex(free, [&](Vertex v) { fn(Move::place(v)); });
    }
    for_each_vertex(mine, [&](Vertex from) {
        Mask targets = free;
        if (spec.rule == MoveRule::Sliding)
            targets &= h.slide_neighbors(from);
        for_each_vertex(targets, [&](Vertex to) { fn(Move::relocate(from, to)); });
    });
    (void)n;
}

} // namespace tpg

#endif
