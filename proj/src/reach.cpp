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

#include "tpg/reach.hpp"

#include <cmath>
#include <sstream>

namespace tpg {

namespace {

GameSpec cap_budgets(const GameSpec& spec, int n) {
    GameSpec eff = spec;
    if (n >= 1) {
        eff.maker_budget = Budget::finite(spec.maker_budget.effective(n) < 1
                                              ? 1
                                              : spec.maker_budget.effective(n));
        eff.breaker_budget = Budget::finite(spec.breaker_budget.effective(n) < 1
                                                ? 1
                                                : spec.breaker_budget.effective(n));
    }
    return eff;
}

TerminalStatus status_of(const Hypergraph& h, Mask maker, Mask breaker) {
    bool transversal = true;
    for (Mask e : h.edges()) {
        if ((e & ~maker) == 0)
            return TerminalStatus::MakerWin;
        if (!(e & breaker))
            transversal = false;
    }
    return transversal ? TerminalStatus::BreakerCertified : TerminalStatus::Ongoing;
}

} // namespace

GameGraph GameGraph::build(const Position& start, const GameSpec& spec,
                           const BuildOptions& opts) {
    const Hypergraph& h = start.hypergraph();
    const int n = h.vertex_count();
    if (n > kMaxSolverVertices)
        throw ScaleLimit("solver supports at most " + std::to_string(kMaxSolverVertices) +
                         " vertices, got " + std::to_string(n));

    GameGraph g;
    g.start_ = start;
    g.spec_ = spec;
    g.eff_ = cap_budgets(spec, n);

    const int a_cap = n >= 1 ? g.eff_.maker_budget.count() : 0;
    const int b_cap = n >= 1 ? g.eff_.breaker_budget.count() : 0;
    if (popcount(start.maker) > a_cap && n >= 1)
        throw InvalidArgument("start position holds more Maker tokens than the budget");
    if (popcount(start.breaker) > b_cap && n >= 1)
        throw InvalidArgument("start position holds more Breaker tokens than the budget");

    auto intern = [&](StateKey k) -> std::uint32_t {
        auto [it, inserted] = g.index_.try_emplace(k, static_cast<std::uint32_t>(g.states_.size()));
        if (inserted) {
            if (g.states_.size() >= opts.max_states)
                throw ScaleLimit("state limit exceeded (" + std::to_string(opts.max_states) +
                                 " states)");
            g.states_.push_back(k);
        }
        return it->second;
    };

    const StateKey start_key = make_key(start.maker, start.breaker, Player::Maker);
    g.start_index_ = intern(start_key);

    for (std::uint32_t i = 0; i < g.states_.size(); ++i) {
        const StateKey k = g.states_[i];
        const Mask m = key_maker(k);
        const Mask b = key_breaker(k);
        const Player turn = key_to_move(k);
        const TerminalStatus st = status_of(h, m, b);
        g.status_.push_back(static_cast<std::uint8_t>(st));
        if (st == TerminalStatus::MakerWin)
            g.targets_.push_back(i);
        if (st != TerminalStatus::Ongoing) {
            g.out_degree_.push_back(0);
            continue;
        }

        GameState s{Position(start.board, m, b), turn};
        std::uint16_t degree = 0;
        for_each_move(s, g.eff_, [&](const Move& mv) {
            Mask own = turn == Player::Maker ? m : b;
            switch (mv.kind) {
            case Move::Kind::Pass:
                break;
            case Move::Kind::Place:
                own |= bit(mv.to);
                break;
            case Move::Kind::Relocate:
                own = (own & ~bit(mv.from)) | bit(mv.to);
                break;
            }
            const Mask nm = turn == Player::Maker ? own : m;
            const Mask nb = turn == Player::Maker ? b : own;
            intern(make_key(nm, nb, opponent(turn)));
            ++degree;
        });
        g.out_degree_.push_back(degree);
        g.arc_count_ += degree;
    }

    // Check the built graph against the 2n^{2k} / 2kn^{2k+1} size bounds
    // (k = max budget, unlimited playing as n). Compared in log space to
    // avoid overflow. Violations are recorded, not fatal.
    if (n >= 1) {
        const int k = std::max(spec.maker_budget.is_unlimited() ? n : spec.maker_budget.count(),
                               spec.breaker_budget.is_unlimited() ? n : spec.breaker_budget.count());
        const long double ln_n = std::log(static_cast<long double>(n));
        const long double ln_states_bound = std::log(2.0L) + 2.0L * k * ln_n;
        const long double ln_arcs_bound =
            std::log(2.0L) + std::log(static_cast<long double>(k)) + (2.0L * k + 1.0L) * ln_n;
        std::ostringstream note;
        if (std::log(static_cast<long double>(g.states_.size())) > ln_states_bound) {
            g.bounds_ok_ = false;
            note << g.states_.size() << " states exceed 2n^2k (n=" << n << ", k=" << k << ")";
        }
        if (g.arc_count_ > 0 &&
            std::log(static_cast<long double>(g.arc_count_)) > ln_arcs_bound) {
            if (!g.bounds_ok_)
                note << "; ";
            g.bounds_ok_ = false;
            note << g.arc_count_ << " arcs exceed 2kn^(2k+1) (n=" << n << ", k=" << k << ")";
        }
        g.bounds_note_ = note.str();
    }
    return g;
}

std::optional<std::uint32_t> GameGraph::find(StateKey k) const {
    auto it = index_.find(k);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

GameState GameGraph::state_at(std::uint32_t i) const {
    const StateKey k = states_[i];
    return GameState{Position(start_.board, key_maker(k), key_breaker(k)), key_to_move(k)};
}

std::vector<std::pair<Move, std::uint32_t>> GameGraph::successors(std::uint32_t i) const {
    std::vector<std::pair<Move, std::uint32_t>> out;
    if (status(i) != TerminalStatus::Ongoing)
        return out;
    const GameState s = state_at(i);
    out.reserve(out_degree_[i]);
    for_each_move(s, eff_, [&](const Move& mv) {
        GameState next = apply_move(s, eff_, mv);
        auto j = find(make_key(next.position.maker, next.position.breaker, next.to_move));
        out.emplace_back(mv, *j);
    });
    return out;
}

SolveResult attractor_solve(const GameGraph& g) {
    const std::size_t count = g.state_count();
    SolveResult res;
    res.distance.assign(count, -1);

    std::vector<std::uint16_t> pending(count);
    for (std::uint32_t i = 0; i < count; ++i)
        pending[i] = g.out_degree(i);

    std::vector<std::vector<std::uint32_t>> layers(1);
    for (std::uint32_t t : g.targets()) {
        res.distance[t] = 0;
        layers[0].push_back(t);
    }

    for (std::size_t d = 0; d < layers.size(); ++d) {
        for (std::size_t qi = 0; qi < layers[d].size(); ++qi) { // grows while iterating
            const std::uint32_t s = layers[d][qi];
            g.for_each_predecessor(s, [&](StateKey pk) {
                auto found = g.find(pk);
                if (!found)
                    return; // not reachable from the start, no such arc
                const std::uint32_t p = *found;
                if (g.status(p) != TerminalStatus::Ongoing || res.distance[p] >= 0)
                    return;
                if (key_to_move(pk) == Player::Maker) {
                    res.distance[p] = static_cast<std::int32_t>(d) + 1;
                    if (layers.size() <= d + 1)
                        layers.resize(d + 2);
                    layers[d + 1].push_back(p);
                } else if (--pending[p] == 0) {
                    // last successor attracted; d is the max over successors
                    res.distance[p] = static_cast<std::int32_t>(d);
                    layers[d].push_back(p);
                }
            });
        }
    }
    return res;
}

std::optional<Move> optimal_move(const GameGraph& g, const SolveResult& r, std::uint32_t i) {
    if (g.status(i) != TerminalStatus::Ongoing || !r.maker_wins(i))
        return std::nullopt;
    const Player mover = key_to_move(g.state(i));
    const std::int32_t want =
        mover == Player::Maker ? r.distance[i] - 1 : r.distance[i];
    std::optional<Move> best;
    std::uint32_t best_index = 0;
    for (auto& [mv, j] : g.successors(i)) {
        if (r.distance[j] != want)
            continue;
        if (!best || j < best_index) {
            best = mv;
            best_index = j;
        }
    }
    return best;
}

PositionReport solve_position(const Position& start, const GameSpec& spec,
                              const BuildOptions& opts) {
    GameGraph g = GameGraph::build(start, spec, opts);
    SolveResult r = attractor_solve(g);
    PositionReport report;
    report.states = g.state_count();
    report.arcs = g.arc_count();
    report.size_bounds_hold = g.size_bounds_hold();
    const std::int32_t d = r.distance[g.start_index()];
    report.winner = d >= 0 ? Player::Maker : Player::Breaker;
    if (d >= 0)
        report.distance = d;
    report.best_move = optimal_move(g, r, g.start_index());
    return report;
}

} // namespace tpg
