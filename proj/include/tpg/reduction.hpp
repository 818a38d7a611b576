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

#ifndef TPG_REDUCTION_HPP
#define TPG_REDUCTION_HPP

#include <vector>

#include "tpg/game.hpp"

namespace tpg {

// The a-reducibility inequality: |e1 & e2| >= |e1| + |e2| - a - 2. Two
// distinct edges this holds for carry enough room for a double threat.
// Disjoint edges qualify for large a.
bool is_a_reducible(Mask e1, Mask e2, Budget a);

// Whether solve_a1 may contract the pair. Reducibility alone is not enough
// for small a: Maker must also be able to finish the two-edge endgame, which
// takes |e1 u e2| - 2 tokens plus a spare unless both e1 \ e2 and e2 \ e1
// leave a movable token behind the final fill. (With a = 1 on {0,1},{0,2}
// the pair is 1-reducible yet one token can never fill a 2-edge.)
// Comparable edges always collapse to the smaller one.
bool contraction_applies(Mask e1, Mask e2, Budget a);

struct Contraction {
    Mask e1;
    Mask e2;
    Mask intersection;
};

struct ReductionResult {
    Player winner;
    std::vector<Contraction> trace;
    std::vector<Mask> final_edges;
};

// Polynomial solver for the (a,1)-game: repeatedly contract the first pair
// contraction_applies accepts (lexicographically smallest (i, j) in the
// current edge list) into its intersection, then read the outcome off the
// fixpoint: Maker wins iff an edge of size <= 1 remains. An empty edge ends
// the run immediately with a Maker verdict. Cross-checked exhaustively
// against the minimax oracle in the tests.
ReductionResult solve_a1(const Hypergraph& h, Budget a);

} // namespace tpg

#endif
