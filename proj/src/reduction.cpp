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

#include "tpg/reduction.hpp"

#include <algorithm>

namespace tpg {

bool is_a_reducible(Mask e1, Mask e2, Budget a) {
    if (e1 == e2)
        throw InvalidArgument("a-reducibility is defined for distinct edges");
    if (a.is_unlimited())
        return true; // the inequality holds for any a >= |e1| + |e2| - 2
    return popcount(e1 & e2) >= popcount(e1) + popcount(e2) - a.count() - 2;
}

bool contraction_applies(Mask e1, Mask e2, Budget a) {
    if (e1 == e2)
        throw InvalidArgument("contraction is defined for distinct edges");
    const Mask inter = e1 & e2;
    if (inter == e1 || inter == e2)
        return true; // the superset edge is redundant under jumping
    if (a.is_unlimited())
        return true;
    const int setup = popcount(e1) + popcount(e2) - popcount(inter) - 2;
    const bool sources = popcount(e1 & ~e2) >= 2 && popcount(e2 & ~e1) >= 2;
    return a.count() >= setup + (sources ? 0 : 1);
}

ReductionResult solve_a1(const Hypergraph& h, Budget a) {
    ReductionResult result;
    std::vector<Mask> edges = h.edges();

    auto has_empty_edge = [&] {
        return std::find(edges.begin(), edges.end(), Mask{0}) != edges.end();
    };

    if (has_empty_edge()) {
        result.winner = Player::Maker;
        result.final_edges = std::move(edges);
        return result;
    }

    for (;;) {
        bool contracted = false;
        for (size_t i = 0; i + 1 < edges.size() && !contracted; ++i) {
            for (size_t j = i + 1; j < edges.size() && !contracted; ++j) {
                if (!contraction_applies(edges[i], edges[j], a))
                    continue;
                Mask inter = edges[i] & edges[j];
                result.trace.push_back({edges[i], edges[j], inter});
                edges[i] = inter;
                edges.erase(edges.begin() + static_cast<long>(j));
                // Contraction can introduce an exact duplicate; drop later
                // copies, keeping list order.
                std::vector<Mask> dedup;
                dedup.reserve(edges.size());
                for (Mask e : edges)
                    if (std::find(dedup.begin(), dedup.end(), e) == dedup.end())
                        dedup.push_back(e);
                edges = std::move(dedup);
                contracted = true;
            }
        }
        if (has_empty_edge()) {
            result.winner = Player::Maker;
            result.final_edges = std::move(edges);
            return result;
        }
        if (!contracted)
            break;
    }

    bool small_edge = std::any_of(edges.begin(), edges.end(),
                                  [](Mask e) { return popcount(e) <= 1; });
    result.winner = small_edge ? Player::Maker : Player::Breaker;
    result.final_edges = std::move(edges);
    return result;
}

} // namespace tpg
