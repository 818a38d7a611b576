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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    const std::string command = std::string(TPG_CLI_PATH) + " " + args + " 2>&1";
    std::array<char, 4096> buffer{};
    RunResult result{};
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (size_t got = fread(buffer.data(), 1, buffer.size(), pipe))
        result.output.append(buffer.data(), got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string write_temp(const std::string& name, const std::string& content) {
    const std::string path = "/tmp/tpg_cli_" + name;
    std::ofstream out(path, std::ios::binary);
    out << content;
    return path;
}

} // namespace

TEST_CASE("solve pipeline from gen through stdin") {
    RunResult gen = run_cli("gen biggap 4 9");
    REQUIRE(gen.exit_code == 0);
    const std::string board = write_temp("bg49.board", gen.output);

    RunResult solve = run_cli("solve --a 4 --b star " + board);
    REQUIRE(solve.exit_code == 0);
    CHECK(solve.output.find("winner: Maker") != std::string::npos);
    CHECK(solve.output.find("distance: 5") != std::string::npos);
}

TEST_CASE("usage and scale exit codes") {
    CHECK(run_cli("solve --a nope --b 1 -").exit_code == 2);
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("gen nunchaku 0").exit_code == 2);
    const std::string board = write_temp("tri.board", "vertices 3\nedge 0 1 2\n");
    CHECK(run_cli("solve --a 3 --b 1 --max-states 2 " + board).exit_code == 3);
    RunResult missing = run_cli("solve --a 1 --b 1 /tmp/does_not_exist.board");
    CHECK(missing.exit_code == 2);
    CHECK(missing.output.find("/tmp/does_not_exist.board") != std::string::npos);
    // parse errors carry the line number
    const std::string broken = write_temp("broken.board", "vertices 2\nedge 0 5\n");
    RunResult parse = run_cli("solve --a 1 --b 1 " + broken);
    CHECK(parse.exit_code == 2);
    CHECK(parse.output.find("line 2") != std::string::npos);
}

TEST_CASE("simple subcommands") {
    const std::string tri = write_temp("tri.board", "vertices 3\nedge 0 1 2\n");
    CHECK(run_cli("solve --a 3 --b 1 " + tri).output.find("winner: Breaker") !=
          std::string::npos);
    CHECK(run_cli("oracle --a 3 --b 1 " + tri).output.find("winner: Breaker") !=
          std::string::npos);
    CHECK(run_cli("theta " + tri).output.find("infinity") != std::string::npos);

    RunResult reduce = run_cli("reduce --a 3 " + tri);
    CHECK(reduce.output.find("winner: Breaker") != std::string::npos);

    const std::string graph = write_temp(
        "fig.graph", "vertices 5\nedge 0 1\nedge 1 2\nedge 0 2\nedge 2 3\nedge 2 4\nguard 2 4\n");
    CHECK(run_cli("ed-solve " + graph).output.find("winner: Attacker") != std::string::npos);
    CHECK(run_cli("ed-check " + graph).output.find("equivalent: true") != std::string::npos);
    RunResult reduced = run_cli("ed-reduce " + graph);
    CHECK(reduced.output.find("vertices 10") != std::string::npos);
}

TEST_CASE("arena transcript serializes numbered moves") {
    RunResult gen = run_cli("gen nunchaku 3");
    const std::string board = write_temp("n3.board", gen.output);
    RunResult game = run_cli("arena --maker forcing --breaker optimal --a 3 --b star " + board);
    REQUIRE(game.exit_code == 0);
    CHECK(game.output.find("1 maker place") != std::string::npos);
    CHECK(game.output.find("verdict: MakerWin") != std::string::npos);
}

// Re-running a JSON report's params against its input must reproduce the
// result object exactly.
TEST_CASE("json reports round-trip") {
    RunResult gen = run_cli("gen biggap 4 9");
    const std::string board = write_temp("bg49rt.board", gen.output);

    auto rerun = [&](const json& report) {
        const json& params = report["params"];
        std::string args = report["command"].get<std::string>();
        if (params.contains("a"))
            args += " --a " + params["a"].get<std::string>();
        if (params.contains("b"))
            args += " --b " + params["b"].get<std::string>();
        if (params.value("rule", "jumping") == std::string("sliding"))
            args += " --sliding";
        if (params.contains("maker"))
            args += " --maker " + params["maker"].get<std::string>() + " --breaker " +
                    params["breaker"].get<std::string>() + " --seed " +
                    std::to_string(params["seed"].get<std::uint64_t>()) + " --max-rounds " +
                    std::to_string(params["max_rounds"].get<int>());
        args += " --json " + report["input"].get<std::string>();
        RunResult again = run_cli(args);
        REQUIRE(again.exit_code == 0);
        return json::parse(again.output);
    };

    for (const std::string& cmd :
         {std::string("solve --a 4 --b star"), std::string("tau"),
          std::string("arena --maker regular --breaker optimal --a 4 --b star")}) {
        RunResult first = run_cli(cmd + " --json " + board);
        REQUIRE(first.exit_code == 0);
        json report = json::parse(first.output);
        json second = rerun(report);
        CAPTURE(cmd);
        CHECK(report["result"] == second["result"]);
    }
}
