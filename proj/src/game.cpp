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

#include "tpg/game.hpp"

#include <sstream>

namespace tpg {

const char* player_name(Player p) {
    return p == Player::Maker ? "Maker" : "Breaker";
}

Position::Position(std::shared_ptr<const Hypergraph> h, Mask m, Mask b)
    : board(std::move(h)), maker(m), breaker(b) {
    if (!board)
        throw InvalidArgument("position requires a board");
    const Mask verts = all_vertices(board->vertex_count());
    if ((maker | breaker) & ~verts)
        throw InvalidArgument("token outside the board");
    if (maker & breaker)
        throw InvalidArgument("maker and breaker tokens overlap");
}

PositionView position_view(const Position& p) {
    PositionView view;
    view.free = p.free_vertices();
    const auto& edges = p.hypergraph().edges();
    view.residual_edges.reserve(edges.size());
    for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
        if (edges[static_cast<size_t>(i)] & p.breaker)
            continue;
        view.residual_edges.push_back({i, edges[static_cast<size_t>(i)] & ~p.maker});
    }
    return view;
}

std::string Move::to_string() const {
    switch (kind) {
    case Kind::Pass:
        return "pass";
    case Kind::Place:
        return "place " + std::to_string(to);
    case Kind::Relocate:
        return "move " + std::to_string(from) + " " + std::to_string(to);
    }
    return "?";
}

Move parse_move(const std::string& text) {
    std::istringstream in(text);
    std::string word;
    if (!(in >> word))
        throw ParseError("empty move");
    auto read_vertex = [&] {
        int v;
        if (!(in >> v) || v < 0)
            throw ParseError("bad vertex in move: " + text);
        return v;
    };
    if (word == "pass")
        return Move::pass();
    if (word == "place")
        return Move::place(read_vertex());
    if (word == "move") {
        Vertex f = read_vertex();
        return Move::relocate(f, read_vertex());
    }
    throw ParseError("unknown move: " + text);
}

TerminalStatus terminal_status(const Position& p) {
    bool transversal = true;
    for (Mask e : p.hypergraph().edges()) {
        if ((e & ~p.maker) == 0)
            return TerminalStatus::MakerWin;
        if (!(e & p.breaker))
            transversal = false;
    }
    // Vacuously true on an edgeless board: nothing for Maker to ever fill.
    return transversal ? TerminalStatus::BreakerCertified : TerminalStatus::Ongoing;
}

std::vector<Move> legal_moves(const GameState& s, const GameSpec& spec) {
    std::vector<Move> out;
    for_each_move(s, spec, [&](const Move& m) { out.push_back(m); });
    return out;
}

namespace {

// Returns an empty string when legal, otherwise the violated precondition.
std::string legality_violation(const GameState& s, const GameSpec& spec, const Move& m) {
    const Hypergraph& h = s.position.hypergraph();
    const int n = h.vertex_count();
    const Mask mine = s.position.tokens(s.to_move);
    const Mask occupied = s.position.occupied();
    const Budget budget =
        s.to_move == Player::Maker ? spec.maker_budget : spec.breaker_budget;

    switch (m.kind) {
    case Move::Kind::Pass:
        return "";
    case Move::Kind::Place:
        if (m.to < 0 || m.to >= n)
            return "placement target is not a board vertex";
        if (has(occupied, m.to))
            return "placement target is occupied";
        if (!budget.is_unlimited() && popcount(mine) >= budget.count())
            return "no unused token left to place";
        return "";
    case Move::Kind::Relocate:
        if (m.from < 0 || m.from >= n || m.to < 0 || m.to >= n)
            return "relocation endpoint is not a board vertex";
        if (m.from == m.to)
            return "relocation must change vertex (use pass)";
        if (!has(mine, m.from))
            return "no own token on the source vertex";
        if (has(occupied, m.to))
            return "relocation target is occupied";
        if (spec.rule == MoveRule::Sliding && !has(h.slide_neighbors(m.from), m.to))
            return "no edge contains both endpoints (sliding rule)";
        return "";
    }
    return "unknown move kind";
}

} // namespace

bool is_legal(const GameState& s, const GameSpec& spec, const Move& m) {
    return legality_violation(s, spec, m).empty();
}

GameState apply_move(const GameState& s, const GameSpec& spec, const Move& m) {
    std::string violation = legality_violation(s, spec, m);
    if (!violation.empty())
        throw IllegalMove("illegal move '" + m.to_string() + "' for " +
                          player_name(s.to_move) + ": " + violation);

    Mask mine = s.position.tokens(s.to_move);
    switch (m.kind) {
    case Move::Kind::Pass:
        break;
    case Move::Kind::Place:
        mine |= bit(m.to);
        break;
    case Move::Kind::Relocate:
        mine = (mine & ~bit(m.from)) | bit(m.to);
        break;
    }

    GameState next = s;
    if (s.to_move == Player::Maker)
        next.position.maker = mine;
    else
        next.position.breaker = mine;
    next.to_move = opponent(s.to_move);
    return next;
}

} // namespace tpg
