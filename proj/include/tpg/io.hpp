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

#ifndef TPG_IO_HPP
#define TPG_IO_HPP

#include <optional>
#include <string>

#include "tpg/game.hpp"
#include "tpg/pairing.hpp"
#include "tpg/eternal.hpp"

namespace tpg {

// Line-oriented board format, '#' starts a comment:
//   vertices <n>
//   edge v1 v2 ...        (one line per edge; a bare "edge" is the empty edge)
//   maker v1 ...          (optional, may repeat)
//   breaker v1 ...        (optional, may repeat)
//   pair u v              (optional pairing lines)
struct BoardFile {
    Position position;
    std::optional<Pairing> pairing;
};

BoardFile parse_board(const std::string& text);
std::string format_board(const Position& p, const Pairing* pairing = nullptr);

// Guard-graph format:
//   vertices <n>
//   edge u v
//   guard v
struct GraphFile {
    Graph graph;
    GuardConfig guards;
};

GraphFile parse_graph(const std::string& text);
std::string format_graph(const Graph& g, const GuardConfig& guards);

std::string read_file(const std::string& path);

} // namespace tpg

#endif
