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

#ifndef TPG_THRESHOLDS_HPP
#define TPG_THRESHOLDS_HPP

#include <optional>

#include "tpg/reach.hpp"

namespace tpg {

// theta: the least Maker token count that beats an unlimited Breaker.
// nullopt when Breaker wins the unrestricted game. Searches a upward from
// the antirank (cheap instances first; outcome is monotone in a), bounded
// above by ceil(n/2) since a win in t rounds needs at most t tokens.
std::optional<int> theta(const Hypergraph& h, const BuildOptions& opts = {});

// tau: the least t such that Maker can force a fill within t rounds of the
// unrestricted game; nullopt when Breaker wins. Read off the attractor
// distance at the start state.
std::optional<int> tau(const Hypergraph& h, const BuildOptions& opts = {});

} // namespace tpg

#endif
