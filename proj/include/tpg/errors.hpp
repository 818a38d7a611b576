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

#ifndef TPG_ERRORS_HPP
#define TPG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tpg {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed board/graph text. `line` is 1-based, 0 when unknown.
struct ParseError : Error {
    ParseError(const std::string& msg, int line_no = 0)
        : Error(line_no > 0 ? "line " + std::to_string(line_no) + ": " + msg : msg),
          line(line_no) {}
    int line;
};

struct InvalidArgument : Error {
    using Error::Error;
};

// A move that violates one of the legality preconditions.
struct IllegalMove : Error {
    using Error::Error;
};

// State/search/depth caps: solver asked to do more than its configured scale.
struct ScaleLimit : Error {
    using Error::Error;
};

// A scripted strategy was armed on a board it does not recognize.
struct FamilyMismatch : Error {
    using Error::Error;
};

// A strategy has no applicable move (e.g. the pairing token condition broke).
struct StrategyInapplicable : Error {
    using Error::Error;
};

} // namespace tpg

#endif
