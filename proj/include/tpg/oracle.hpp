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

#ifndef TPG_ORACLE_HPP
#define TPG_ORACLE_HPP

#include "tpg/game.hpp"

namespace tpg {

struct OracleOptions {
    std::size_t max_states = 1'000'000;
    std::size_t max_arcs = 30'000'000;
};

// Exhaustive independence oracle: enumerates every position of the game and
// reads off the winner by iterating the minimax recurrence to its least
// fixpoint (Maker wins where she can a move into the winning set, Breaker
// holds everything that never converges, which the repetition rule scores
// for him). Deliberately shares no solving machinery with attractor_solve.
// Small boards only.
Player minimax_oracle(const Position& start, const GameSpec& spec,
                      const OracleOptions& opts = {});

} // namespace tpg

#endif
