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

#include "tpg/thresholds.hpp"

#include <algorithm>

namespace tpg {

std::optional<int> theta(const Hypergraph& h, const BuildOptions& opts) {
    Position start(std::make_shared<Hypergraph>(h));
    const GameSpec classical{Budget::unlimited(), Budget::unlimited(), MoveRule::Jumping};
    if (solve_position(start, classical, opts).winner == Player::Breaker)
        return std::nullopt;

    const int n = h.vertex_count();
    const int lo = std::max(1, h.antirank().value_or(1));
    const int hi = std::max(lo, (n + 1) / 2);
    for (int a = lo; a <= hi; ++a) {
        GameSpec spec{Budget::finite(a), Budget::unlimited(), MoveRule::Jumping};
        if (solve_position(start, spec, opts).winner == Player::Maker)
            return a;
    }
    // Unreachable: a Maker win in t rounds needs at most t <= ceil(n/2) tokens.
    throw Error("theta search exhausted its upper bound");
}

std::optional<int> tau(const Hypergraph& h, const BuildOptions& opts) {
    Position start(std::make_shared<Hypergraph>(h));
    const GameSpec classical{Budget::unlimited(), Budget::unlimited(), MoveRule::Jumping};
    PositionReport report = solve_position(start, classical, opts);
    if (report.winner == Player::Breaker)
        return std::nullopt;
    return report.distance;
}

} // namespace tpg
