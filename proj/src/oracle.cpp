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

#include "tpg/oracle.hpp"

#include <cstdint>
#include <unordered_map>
#include <vector>

namespace tpg {

namespace {

// Local packed state for the oracle: independent of the reach solver's
// encoding on purpose.
struct OracleState {
    Mask maker;
    Mask breaker;
    std::uint8_t maker_to_move;
    bool operator==(const OracleState&) const = default;
};

struct OracleStateHash {
    size_t operator()(const OracleState& s) const noexcept {
        std::uint64_t x = s.maker * 0xC2B2AE3D27D4EB4Full;
        x = (x ^ (x >> 29)) + s.breaker * 0x165667B19E3779F9ull;
        x = (x ^ (x >> 32)) * 0x27D4EB2F165667C5ull;
        return static_cast<size_t>(x ^ (x >> 28) ^ s.maker_to_move);
    }
};

} // namespace

Player minimax_oracle(const Position& start, const GameSpec& spec,
                      const OracleOptions& opts) {
    const Hypergraph& h = start.hypergraph();
    const int n = h.vertex_count();
    if (n > kMaxVertices - 2)
        throw ScaleLimit("oracle supports at most 62 vertices");

    const int a_cap = spec.maker_budget.effective(n);
    const int b_cap = spec.breaker_budget.effective(n);

    std::vector<OracleState> states;
    std::unordered_map<OracleState, std::uint32_t, OracleStateHash> ids;
    std::vector<std::uint8_t> verdict_known; // 1 = terminal
    std::vector<std::uint8_t> win;           // Maker wins here
    std::vector<std::uint32_t> arc_begin;    // into succs
    std::vector<std::uint32_t> succs;

    auto intern = [&](const OracleState& s) -> std::uint32_t {
        auto [it, inserted] = ids.try_emplace(s, static_cast<std::uint32_t>(states.size()));
        if (inserted) {
            if (states.size() >= opts.max_states)
                throw ScaleLimit("oracle state cap exceeded");
            states.push_back(s);
        }
        return it->second;
    };

    intern(OracleState{start.maker, start.breaker, 1});

    for (std::uint32_t i = 0; i < states.size(); ++i) {
        const OracleState s = states[i];
        arc_begin.push_back(static_cast<std::uint32_t>(succs.size()));

        bool maker_done = false, breaker_done = true;
        for (Mask e : h.edges()) {
            if ((e & ~s.maker) == 0)
                maker_done = true;
            if (!(e & s.breaker))
                breaker_done = false;
        }
        if (maker_done || breaker_done) {
            verdict_known.push_back(1);
            win.push_back(maker_done ? 1 : 0);
            continue;
        }
        verdict_known.push_back(0);
        win.push_back(0);

        const Mask own = s.maker_to_move ? s.maker : s.breaker;
        const Mask free = all_vertices(n) & ~(s.maker | s.breaker);
        const int cap = s.maker_to_move ? a_cap : b_cap;

        auto push_succ = [&](Mask new_own) {
            OracleState next{s.maker_to_move ? new_own : s.maker,
                             s.maker_to_move ? s.breaker : new_own,
                             static_cast<std::uint8_t>(1 - s.maker_to_move)};
            if (succs.size() >= opts.max_arcs)
                throw ScaleLimit("oracle arc cap exceeded");
            succs.push_back(intern(next));
        };

        push_succ(own); // pass
        if (popcount(own) < cap)
            for_each_vertex(free, [&](Vertex v) { push_succ(own | bit(v)); });
        for_each_vertex(own, [&](Vertex from) {
            Mask targets = free;
            if (spec.rule == MoveRule::Sliding)
                targets &= h.slide_neighbors(from);
            for_each_vertex(targets, [&](Vertex to) {
                push_succ((own & ~bit(from)) | bit(to));
            });
        });
    }
    arc_begin.push_back(static_cast<std::uint32_t>(succs.size()));

    // Least fixpoint of the minimax recurrence.
    for (bool changed = true; changed;) {
        changed = false;
        for (std::uint32_t i = static_cast<std::uint32_t>(states.size()); i-- > 0;) {
            if (win[i] || verdict_known[i])
                continue;
            const bool maker_turn = states[i].maker_to_move;
            bool value = !maker_turn;
            for (std::uint32_t a = arc_begin[i]; a < arc_begin[i + 1]; ++a) {
                const bool w = win[succs[a]];
                if (maker_turn ? w : !w) {
                    value = maker_turn;
                    break;
                }
            }
            if (value) {
                win[i] = 1;
                changed = true;
            }
        }
    }
    return win[0] ? Player::Maker : Player::Breaker;
}

} // namespace tpg
