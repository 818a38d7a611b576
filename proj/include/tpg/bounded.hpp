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

#ifndef TPG_BOUNDED_HPP
#define TPG_BOUNDED_HPP

#include <memory>
#include <optional>
#include <unordered_map>

#include "tpg/reach.hpp"

namespace tpg {

// Horizon-bounded exact solver: computes the minimal number of Maker moves
// to force a fill, provided it is at most a given horizon. Useful where the
// full state graph is out of reach but the claimed distance is small: the
// states touched within t rounds carry at most t extra Breaker tokens.
//
// Every Maker turn (including a pass) consumes one round, so the recursion
// is well founded and wasted cycles exhaust the budget; this matches the
// attractor's distance layers, against which it is cross-checked in tests.
class BoundedSolver {
  public:
    BoundedSolver(std::shared_ptr<const Hypergraph> board, const GameSpec& spec);

    // Minimal rounds from s, if <= horizon; nullopt otherwise.
    std::optional<int> distance_within(const GameState& s, int horizon);

    // Iterative deepening up to horizon_cap. Memoized bounds persist across
    // calls, so repeated queries during one game stay cheap.
    std::optional<int> distance_deepening(const GameState& s, int horizon_cap);

    std::size_t memo_size() const { return memo_.size(); }

  private:
    static constexpr int kFail = 1 << 14;

    struct Entry {
        std::int16_t win = kFail; // exact value once proven
        std::int16_t lose = -1;   // largest horizon proven unattainable
    };

    int search(Mask maker, Mask breaker, Player to_move, int budget);
    int smallest_open_threat(Mask maker, Mask breaker) const;

    std::shared_ptr<const Hypergraph> board_;
    GameSpec spec_;
    int maker_cap_;
    int breaker_cap_;
    std::unordered_map<StateKey, Entry, StateKeyHash> memo_;
};

} // namespace tpg

#endif
