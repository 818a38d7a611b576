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

#ifndef TPG_STRATEGIES_HPP
#define TPG_STRATEGIES_HPP

#include <memory>
#include <string>
#include <vector>

#include "tpg/constructions.hpp"
#include "tpg/game.hpp"

namespace tpg {

// A strategy instance drives one side through one game. Implementations are
// deterministic given their construction arguments; they throw
// StrategyInapplicable when they have no playable move left (their way of
// resigning) and FamilyMismatch when armed on a board they do not
// recognize.
class Strategy {
  public:
    virtual ~Strategy() = default;
    virtual std::string name() const = 0;
    virtual Move next_move(const GameState& s) = 0;
};

enum class StrategyKind {
    ForcingMaker,    // nunchaku/necklace walk-through with one-move threats
    DichotomyMaker,  // nunchaku/necklace midpoint splitting
    RegularPlayMaker, // scripted play for biggap / bigtheta boards
    TwoPhaseBreaker, // bigtheta: pairing responder, then complete-pairing lock
    RandomLegal,     // seeded uniform choice among legal moves
    Optimal,         // plays the solver's line (attractor, or horizon-bounded
                     // search when the state graph is too large)
};

StrategyKind parse_strategy_kind(const std::string& name);
const char* strategy_kind_name(StrategyKind k);

struct StrategyOptions {
    std::uint64_t seed = 1;                      // RandomLegal
    std::size_t optimal_state_cap = 4'000'000;   // attractor fallback threshold
    int optimal_horizon_cap = 40;                // bounded-search fallback
};

// Builds a strategy for the given start position and spec. Scripted kinds
// recognize the board against the canonical generators and refuse anything
// else.
std::unique_ptr<Strategy> scripted_strategy(StrategyKind kind, const Position& start,
                                            const GameSpec& spec,
                                            const StrategyOptions& opts = {});

struct TranscriptEntry {
    int round; // 1-based; Maker and Breaker moves of one round share it
    Player side;
    Move move;
    Mask maker_after;
    Mask breaker_after;
    std::string to_string() const;
};

enum class Verdict { MakerWin, BreakerSurvives };

struct ArenaResult {
    Verdict verdict;
    int rounds; // Maker moves played; the filling round for MakerWin
    std::vector<TranscriptEntry> transcript;
    std::string note; // "state repeated" / "round cap reached" / ""
    Position final_position;
};

struct ArenaOptions {
    // 0 = the practical default cap 4 * n * (a + b).
    int max_rounds = 0;
};

// Alternating play from the start position, Maker first. Ends with MakerWin
// at the filling move, or BreakerSurvives when a state repeats or the round
// cap elapses. Throws StrategyInapplicable (wrapped with the strategy name
// and round) if a side produces an illegal move or resigns.
ArenaResult arena(Strategy& maker, Strategy& breaker, const Position& start,
                  const GameSpec& spec, const ArenaOptions& opts = {});

} // namespace tpg

#endif
