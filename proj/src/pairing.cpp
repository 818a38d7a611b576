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

#include "tpg/pairing.hpp"

#include <algorithm>

namespace tpg {

Pairing::Pairing(std::vector<std::pair<Vertex, Vertex>> pairs) {
    for (auto [u, v] : pairs)
        add(u, v);
}

void Pairing::add(Vertex u, Vertex v) {
    if (u == v)
        throw InvalidArgument("a pair must join two distinct vertices");
    if (u > v)
        std::swap(u, v);
    Mask pm = bit(u) | bit(v);
    if (used_ & pm)
        throw InvalidArgument("pairs must be pairwise disjoint");
    used_ |= pm;
    pairs_.emplace_back(u, v);
    std::sort(pairs_.begin(), pairs_.end());
}

std::optional<std::pair<Vertex, Vertex>> Pairing::pair_of(Vertex v) const {
    for (auto& pr : pairs_)
        if (pr.first == v || pr.second == v)
            return pr;
    return std::nullopt;
}

int Pairing::live_pair_count(const Position& p) const {
    const Mask free = p.free_vertices();
    int count = 0;
    for (auto [u, v] : pairs_)
        if (has(free, u) && has(free, v))
            ++count;
    return count;
}

CompletenessReport is_complete(const Pairing& pi, const Position& p) {
    CompletenessReport report{true, {}};
    for (const ResidualEdge& re : position_view(p).residual_edges) {
        bool covered = false;
        for (auto [u, v] : pi.pairs()) {
            Mask pm = bit(u) | bit(v);
            if ((re.residual & pm) == pm) {
                covered = true;
                break;
            }
        }
        if (!covered) {
            report.complete = false;
            report.uncovered.push_back(re);
        }
    }
    return report;
}

namespace {

struct PairingSearch {
    std::vector<Mask> edges; // minimal residual edges, size-ascending
    std::vector<std::pair<Vertex, Vertex>> chosen;
    std::vector<Mask> chosen_masks;

    bool covered(Mask edge) const {
        for (Mask pm : chosen_masks)
            if ((edge & pm) == pm)
                return true;
        return false;
    }

    bool solve(Mask used) {
        size_t next = edges.size();
        for (size_t i = 0; i < edges.size(); ++i) {
            if (!covered(edges[i])) {
                next = i;
                break;
            }
        }
        if (next == edges.size())
            return true;

        // Branch on pairs inside the smallest uncovered edge, in
        // lexicographic order.
        auto vs = to_vertices(edges[next] & ~used);
        for (size_t i = 0; i < vs.size(); ++i) {
            for (size_t j = i + 1; j < vs.size(); ++j) {
                Mask pm = bit(vs[i]) | bit(vs[j]);
                chosen.emplace_back(vs[i], vs[j]);
                chosen_masks.push_back(pm);
                if (solve(used | pm))
                    return true;
                chosen.pop_back();
                chosen_masks.pop_back();
            }
        }
        return false;
    }
};

} // namespace

std::optional<Pairing> find_complete_pairing(const Position& p,
                                             const PairingSearchOptions& opts) {
    const PositionView view = position_view(p);
    if (popcount(view.free) > opts.max_free_vertices)
        throw ScaleLimit("pairing search limit exceeded: " +
                         std::to_string(popcount(view.free)) + " free vertices (max " +
                         std::to_string(opts.max_free_vertices) + ")");

    PairingSearch search;
    for (const ResidualEdge& re : view.residual_edges) {
        if (popcount(re.residual) < 2)
            return std::nullopt; // an edge no pair can sit inside
        search.edges.push_back(re.residual);
    }

    // Covering an edge covers all its supersets, so only minimal residual
    // edges constrain the search.
    std::sort(search.edges.begin(), search.edges.end(),
              [](Mask a, Mask b) { return popcount(a) < popcount(b) || (popcount(a) == popcount(b) && a < b); });
    search.edges.erase(std::unique(search.edges.begin(), search.edges.end()),
                       search.edges.end());
    std::vector<Mask> minimal;
    for (Mask e : search.edges) {
        bool dominated = false;
        for (Mask m : minimal) {
            if ((e & m) == m) {
                dominated = true;
                break;
            }
        }
        if (!dominated)
            minimal.push_back(e);
    }
    std::sort(minimal.begin(), minimal.end(), [](Mask a, Mask b) {
        return popcount(a) < popcount(b) || (popcount(a) == popcount(b) && a < b);
    });
    search.edges = std::move(minimal);

    if (!search.solve(0))
        return std::nullopt;

    Pairing pi(std::move(search.chosen));
    if (opts.budget_check) {
        auto [a, b] = *opts.budget_check;
        if (!b.is_unlimited()) {
            int spare = b.count() - popcount(p.breaker);
            int live = pi.live_pair_count(p);
            int needed = a.is_unlimited() ? live : std::min(a.count(), live);
            if (spare < needed)
                return std::nullopt;
        }
    }
    return pi;
}

Move pairing_breaker_move(const Pairing& pi, const GameState& s, const GameSpec& spec) {
    if (s.to_move != Player::Breaker)
        throw InvalidArgument("pairing responder plays Breaker's turns only");

    const Position& p = s.position;
    const Mask free = p.free_vertices();

    // A pair needs an answer when Maker sits on one side and the twin is
    // still free.
    Vertex answer = -1;
    for (auto [u, v] : pi.pairs()) {
        bool mu = has(p.maker, u), mv = has(p.maker, v);
        if (mu == mv)
            continue;
        Vertex twin = mu ? v : u;
        if (has(free, twin)) {
            answer = twin;
            break;
        }
    }
    if (answer < 0)
        return Move::pass();

    if (is_legal(s, spec, Move::place(answer)))
        return Move::place(answer);

    // All tokens on the board: pull one that is not defending a pair whose
    // twin Maker holds.
    Move found = Move::pass();
    bool ok = false;
    for_each_vertex(p.breaker, [&](Vertex src) {
        if (ok)
            return;
        if (auto pr = pi.pair_of(src)) {
            Vertex other = pr->first == src ? pr->second : pr->first;
            if (has(p.maker, other))
                return; // defending, keep it
        }
        Move m = Move::relocate(src, answer);
        if (is_legal(s, spec, m)) {
            found = m;
            ok = true;
        }
    });
    if (!ok)
        throw StrategyInapplicable(
            "pairing strategy has no legal answer on vertex " + std::to_string(answer) +
            " (token condition violated)");
    return found;
}

} // namespace tpg
