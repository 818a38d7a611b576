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

#include "tpg/bounded.hpp"

#include <algorithm>

namespace tpg {

namespace {

struct Successor {
    Mask own;
    int score; // smaller explored first
};

} // namespace

BoundedSolver::BoundedSolver(std::shared_ptr<const Hypergraph> board, const GameSpec& spec)
    : board_(std::move(board)), spec_(spec) {
    const int n = board_->vertex_count();
    if (n > kMaxSolverVertices)
        throw ScaleLimit("bounded solver supports at most 62 vertices");
    maker_cap_ = spec.maker_budget.effective(n);
    breaker_cap_ = spec.breaker_budget.effective(n);
}

// Size of the smallest Breaker-free residual edge, or a large value when
// none is open. Drives move ordering: Maker chases small threats, Breaker
// kills them.
int BoundedSolver::smallest_open_threat(Mask maker, Mask breaker) const {
    int best = kFail;
    for (Mask e : board_->edges()) {
        if (e & breaker)
            continue;
        best = std::min(best, popcount(e & ~maker));
    }
    return best;
}

int BoundedSolver::search(Mask maker, Mask breaker, Player to_move, int budget) {
    bool filled = false, transversal = true;
    for (Mask e : board_->edges()) {
        if ((e & ~maker) == 0) {
            filled = true;
            break;
        }
        if (!(e & breaker))
            transversal = false;
    }
    if (filled)
        return 0;

    const StateKey key = make_key(maker, breaker, to_move);
    Entry& entry = memo_[key];
    if (transversal) {
        entry.lose = kFail; // Breaker sits on a transversal: never winnable
        return kFail;
    }
    if (entry.win <= budget)
        return entry.win;
    if (entry.lose >= budget)
        return kFail;
    if (to_move == Player::Maker && budget <= 0) {
        entry.lose = std::max<std::int16_t>(entry.lose, 0);
        return kFail;
    }

    const Mask own = to_move == Player::Maker ? maker : breaker;
    const Mask free = all_vertices(board_->vertex_count()) & ~(maker | breaker);
    const int cap = to_move == Player::Maker ? maker_cap_ : breaker_cap_;

    std::vector<Successor> next;
    next.reserve(static_cast<size_t>(popcount(free)) * (1 + static_cast<size_t>(popcount(own))) + 1);
    auto opposing = [&](Mask new_own) {
        return to_move == Player::Maker ? smallest_open_threat(new_own, breaker)
                                        : smallest_open_threat(maker, new_own);
    };
    next.push_back({own, opposing(own)}); // pass
    if (popcount(own) < cap)
        for_each_vertex(free, [&](Vertex v) {
            next.push_back({own | bit(v), opposing(own | bit(v))});
        });
    for_each_vertex(own, [&](Vertex from) {
        Mask targets = free;
        if (spec_.rule == MoveRule::Sliding)
            targets &= board_->slide_neighbors(from);
        for_each_vertex(targets, [&](Vertex to) {
            Mask new_own = (own & ~bit(from)) | bit(to);
            next.push_back({new_own, opposing(new_own)});
        });
    });

    if (to_move == Player::Maker) {
        // chase the smallest remaining threat first
        std::stable_sort(next.begin(), next.end(),
                         [](const Successor& x, const Successor& y) { return x.score < y.score; });
        int best = kFail;
        for (const Successor& s : next) {
            const int child_budget = std::min(budget, best == kFail ? kFail : best - 1) - 1;
            if (child_budget < 0)
                break;
            const int v = search(s.own, breaker, Player::Breaker, child_budget);
            if (v != kFail) {
                best = std::min(best, 1 + v);
                if (best == 1)
                    break;
            }
        }
        auto& e2 = memo_[key]; // map may rehash during recursion
        if (best == kFail) {
            e2.lose = std::max<std::int16_t>(e2.lose, static_cast<std::int16_t>(budget));
            return kFail;
        }
        e2.win = static_cast<std::int16_t>(best);
        return best;
    }

    // Breaker: survive if any reply does; otherwise the value is the worst
    // (largest) reply. Blocking replies explored first.
    std::stable_sort(next.begin(), next.end(),
                     [](const Successor& x, const Successor& y) { return x.score > y.score; });
    int worst = 0;
    for (const Successor& s : next) {
        const int v = search(maker, s.own, Player::Maker, budget);
        if (v == kFail) {
            auto& e2 = memo_[key];
            e2.lose = std::max<std::int16_t>(e2.lose, static_cast<std::int16_t>(budget));
            return kFail;
        }
        worst = std::max(worst, v);
    }
    auto& e2 = memo_[key];
    e2.win = static_cast<std::int16_t>(worst);
    return worst;
}

std::optional<int> BoundedSolver::distance_within(const GameState& s, int horizon) {
    if (s.position.board.get() != board_.get() && !(*s.position.board == *board_))
        throw InvalidArgument("state belongs to a different board");
    const int v = search(s.position.maker, s.position.breaker, s.to_move, horizon);
    if (v == kFail)
        return std::nullopt;
    return v;
}

std::optional<int> BoundedSolver::distance_deepening(const GameState& s, int horizon_cap) {
    for (int t = 0; t <= horizon_cap; ++t)
        if (auto d = distance_within(s, t))
            return d;
    return std::nullopt;
}

} // namespace tpg
