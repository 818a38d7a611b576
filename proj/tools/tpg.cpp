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

// Command-line frontend for the token positional game solver, built solely
// on the C API of the shared library.

#include <chrono>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tokengames.h"

namespace {

using nlohmann::json;

constexpr int kExitUsage = 2;
constexpr int kExitScale = 3;

struct CliError {
    int code;
    std::string message;
};

[[noreturn]] void bail(tpg_status status) {
    const std::string msg = tpg_last_error();
    switch (status) {
    case TPG_ERR_SCALE:
        throw CliError{kExitScale, msg};
    case TPG_ERR_PARSE:
    case TPG_ERR_ARG:
        throw CliError{kExitUsage, msg};
    default:
        throw CliError{1, msg};
    }
}

void check(tpg_status status) {
    if (status != TPG_OK)
        bail(status);
}

std::string take_string(char* s) {
    if (!s)
        return "";
    std::string out = s;
    tpg_string_free(s);
    return out;
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw CliError{kExitUsage, "cannot open file: " + path};
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int64_t parse_budget(const std::string& text, const std::string& flag) {
    if (text == "star" || text == "*")
        return TPG_UNLIMITED;
    try {
        size_t used = 0;
        long long v = std::stoll(text, &used);
        if (used == text.size() && v >= 1)
            return v;
    } catch (...) {
    }
    throw CliError{kExitUsage, flag + " expects a positive integer or 'star', got '" + text + "'"};
}

std::string budget_string(int64_t v) {
    return v == TPG_UNLIMITED ? "star" : std::to_string(v);
}

using BoardPtr = std::unique_ptr<tpg_board, decltype(&tpg_board_free)>;
using GraphPtr = std::unique_ptr<tpg_graph, decltype(&tpg_graph_free)>;

BoardPtr load_board(const std::string& path) {
    tpg_board* raw = nullptr;
    tpg_status st = tpg_board_parse(read_input(path).c_str(), &raw);
    if (st != TPG_OK)
        throw CliError{st == TPG_ERR_SCALE ? kExitScale : kExitUsage,
                       path + ": " + tpg_last_error()};
    return BoardPtr(raw, &tpg_board_free);
}

GraphPtr load_graph(const std::string& path) {
    tpg_graph* raw = nullptr;
    tpg_status st = tpg_graph_parse(read_input(path).c_str(), &raw);
    if (st != TPG_OK)
        throw CliError{st == TPG_ERR_SCALE ? kExitScale : kExitUsage,
                       path + ": " + tpg_last_error()};
    return GraphPtr(raw, &tpg_graph_free);
}

class Reporter {
  public:
    Reporter(std::string command, std::string input, bool as_json)
        : as_json_(as_json), start_(std::chrono::steady_clock::now()) {
        doc_["command"] = std::move(command);
        doc_["input"] = std::move(input);
        doc_["params"] = json::object();
        doc_["result"] = json::object();
    }

    json& params() { return doc_["params"]; }
    json& result() { return doc_["result"]; }

    void set_counts(uint64_t states, uint64_t arcs) {
        states_ = states;
        arcs_ = arcs;
    }

    // Human-readable body, printed instead of the JSON document.
    void line(const std::string& text) { lines_.push_back(text); }

    void flush() {
        const auto elapsed = std::chrono::steady_clock::now() - start_;
        if (as_json_) {
            doc_["stats"] = {
                {"states", states_},
                {"arcs", arcs_},
                {"millis",
                 std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count()},
            };
            std::cout << doc_.dump(2) << "\n";
        } else {
            for (const std::string& l : lines_)
                std::cout << l << "\n";
        }
    }

  private:
    bool as_json_;
    json doc_;
    std::vector<std::string> lines_;
    uint64_t states_ = 0;
    uint64_t arcs_ = 0;
    std::chrono::steady_clock::time_point start_;
};

const char* player_string(tpg_player p) { return p == TPG_MAKER ? "Maker" : "Breaker"; }

json distance_json(int64_t d) {
    if (d == TPG_INFINITE)
        return "infinity";
    return d;
}

void run_solve_like(const std::string& cmd, const std::string& file, int64_t a, int64_t b,
                    bool sliding, uint64_t max_states, bool as_json) {
    BoardPtr board = load_board(file);
    Reporter rep(cmd, file, as_json);
    rep.params() = {{"a", budget_string(a)},
                    {"b", budget_string(b)},
                    {"rule", sliding ? "sliding" : "jumping"}};

    if (cmd == "solve") {
        tpg_solve_result* raw = nullptr;
        check(tpg_solve(board.get(), a, b, sliding ? 1 : 0, max_states, &raw));
        std::unique_ptr<tpg_solve_result, decltype(&tpg_result_free)> res(raw, &tpg_result_free);
        const tpg_player winner = tpg_result_winner(res.get());
        const int64_t dist = tpg_result_distance(res.get());
        const std::string first = take_string(tpg_result_first_move(res.get()));
        rep.set_counts(tpg_result_states(res.get()), tpg_result_arcs(res.get()));
        rep.result()["winner"] = player_string(winner);
        rep.result()["distance"] = distance_json(dist);
        rep.result()["first_move"] = first.empty() ? json(nullptr) : json(first);
        rep.line(std::string("winner: ") + player_string(winner));
        rep.line("distance: " + (dist == TPG_INFINITE ? "infinity" : std::to_string(dist)));
        if (!first.empty())
            rep.line("first move: " + first);
        rep.line("states: " + std::to_string(tpg_result_states(res.get())));
        rep.line("arcs: " + std::to_string(tpg_result_arcs(res.get())));
    } else { // oracle
        tpg_player winner;
        check(tpg_oracle(board.get(), a, b, sliding ? 1 : 0, &winner));
        rep.result()["winner"] = player_string(winner);
        rep.line(std::string("winner: ") + player_string(winner));
    }
    rep.flush();
}

void run_threshold(const std::string& cmd, const std::string& file, bool as_json) {
    BoardPtr board = load_board(file);
    Reporter rep(cmd, file, as_json);
    int64_t value = 0;
    check(cmd == "theta" ? tpg_theta(board.get(), &value) : tpg_tau(board.get(), &value));
    rep.result()["value"] = distance_json(value);
    rep.line(cmd + ": " + (value == TPG_INFINITE ? "infinity" : std::to_string(value)));
    rep.flush();
}

void run_gen(const std::string& family, const std::vector<int64_t>& params,
             const std::string& lift_input, const std::string& out_path, bool as_json) {
    tpg_board* raw = nullptr;
    if (family == "lift") {
        if (lift_input.empty())
            throw CliError{kExitUsage, "gen lift needs --input <board>"};
        BoardPtr base = load_board(lift_input);
        check(tpg_board_lift(base.get(), &raw));
    } else {
        check(tpg_board_generate(family.c_str(), params.data(), params.size(), &raw));
    }
    BoardPtr board(raw, &tpg_board_free);
    const std::string text = take_string(tpg_board_format(board.get()));

    Reporter rep("gen", family, as_json);
    rep.params()["family"] = family;
    rep.params()["values"] = params;
    rep.result()["vertices"] = tpg_board_vertices(board.get());
    rep.result()["edges"] = tpg_board_edges(board.get());
    rep.result()["board"] = text;

    if (!out_path.empty()) {
        std::ofstream out(out_path, std::ios::binary);
        if (!out)
            throw CliError{kExitUsage, "cannot write file: " + out_path};
        out << text;
        rep.line("wrote " + out_path);
    } else {
        std::istringstream in(text);
        std::string l;
        while (std::getline(in, l))
            rep.line(l);
    }
    rep.flush();
}

void run_reduce(const std::string& file, int64_t a, bool as_json) {
    BoardPtr board = load_board(file);
    Reporter rep("reduce", file, as_json);
    rep.params()["a"] = budget_string(a);
    tpg_reduction* raw = nullptr;
    check(tpg_reduce(board.get(), a, &raw));
    std::unique_ptr<tpg_reduction, decltype(&tpg_reduction_free)> red(raw, &tpg_reduction_free);
    json steps = json::array();
    for (size_t i = 0; i < tpg_reduction_steps(red.get()); ++i) {
        const std::string step = take_string(tpg_reduction_step(red.get(), i));
        steps.push_back(step);
        rep.line(step);
    }
    const char* winner = player_string(tpg_reduction_winner(red.get()));
    rep.result()["winner"] = winner;
    rep.result()["steps"] = steps;
    rep.line(std::string("winner: ") + winner);
    rep.flush();
}

void run_arena(const std::string& file, const std::string& maker, const std::string& breaker,
               int64_t a, int64_t b, bool sliding, int max_rounds, uint64_t seed,
               bool as_json) {
    BoardPtr board = load_board(file);
    Reporter rep("arena", file, as_json);
    rep.params() = {{"maker", maker},     {"breaker", breaker},
                    {"a", budget_string(a)}, {"b", budget_string(b)},
                    {"rule", sliding ? "sliding" : "jumping"},
                    {"max_rounds", max_rounds}, {"seed", seed}};
    tpg_transcript* raw = nullptr;
    check(tpg_arena(board.get(), maker.c_str(), breaker.c_str(), a, b, sliding ? 1 : 0,
                    max_rounds, seed, &raw));
    std::unique_ptr<tpg_transcript, decltype(&tpg_transcript_free)> tr(raw,
                                                                       &tpg_transcript_free);
    json lines = json::array();
    for (size_t i = 0; i < tpg_transcript_lines(tr.get()); ++i) {
        const std::string line = take_string(tpg_transcript_line(tr.get(), i));
        lines.push_back(line);
        rep.line(line);
    }
    const bool maker_won = tpg_transcript_maker_won(tr.get()) != 0;
    const std::string note = take_string(tpg_transcript_note(tr.get()));
    rep.result()["verdict"] = maker_won ? "MakerWin" : "BreakerSurvives";
    rep.result()["rounds"] = tpg_transcript_rounds(tr.get());
    rep.result()["note"] = note;
    rep.result()["transcript"] = lines;
    rep.line(std::string("verdict: ") + (maker_won ? "MakerWin" : "BreakerSurvives") +
             " after round " + std::to_string(tpg_transcript_rounds(tr.get())) +
             (note.empty() ? "" : " (" + note + ")"));
    rep.flush();
}

void run_ed(const std::string& cmd, const std::string& file, const std::string& out_path,
            bool as_json) {
    GraphPtr graph = load_graph(file);
    Reporter rep(cmd, file, as_json);
    if (cmd == "ed-solve") {
        int attacker = 0;
        check(tpg_ed_solve(graph.get(), &attacker));
        rep.result()["attacker_wins"] = attacker != 0;
        rep.line(std::string("winner: ") + (attacker ? "Attacker" : "Defender"));
    } else if (cmd == "ed-reduce") {
        tpg_board* raw = nullptr;
        int64_t guards = 0;
        check(tpg_ed_reduce(graph.get(), &raw, &guards));
        BoardPtr board(raw, &tpg_board_free);
        std::string text = "# play as the (1," + std::to_string(guards) +
                           ")-game with --sliding\n" +
                           take_string(tpg_board_format(board.get()));
        rep.result()["board"] = text;
        rep.result()["breaker_budget"] = guards;
        if (!out_path.empty()) {
            std::ofstream out(out_path, std::ios::binary);
            if (!out)
                throw CliError{kExitUsage, "cannot write file: " + out_path};
            out << text;
            rep.line("wrote " + out_path);
        } else {
            std::istringstream in(text);
            std::string l;
            while (std::getline(in, l))
                rep.line(l);
        }
    } else { // ed-check
        int equivalent = 0, attacker = 0, maker = 0;
        check(tpg_ed_check(graph.get(), &equivalent, &attacker, &maker));
        rep.result()["equivalent"] = equivalent != 0;
        rep.result()["attacker_wins"] = attacker != 0;
        rep.result()["maker_wins"] = maker != 0;
        rep.line(std::string("attacker wins: ") + (attacker ? "true" : "false"));
        rep.line(std::string("maker wins sliding game: ") + (maker ? "true" : "false"));
        rep.line(std::string("equivalent: ") + (equivalent ? "true" : "false"));
    }
    rep.flush();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"token positional game solver"};
    app.require_subcommand(1);

    std::string file = "-", a_text = "star", b_text = "star", maker = "optimal",
                breaker = "optimal", family, out_path, lift_input;
    std::vector<int64_t> gen_params;
    bool sliding = false, as_json = false;
    uint64_t max_states = 0, seed = 1;
    int max_rounds = 0;

    auto add_board_arg = [&](CLI::App* cmd) {
        cmd->add_option("file", file, "board file ('-' reads standard input)");
    };
    auto add_json = [&](CLI::App* cmd) { cmd->add_flag("--json", as_json, "machine output"); };
    auto add_budgets = [&](CLI::App* cmd) {
        cmd->add_option("--a", a_text, "Maker token budget (integer or 'star')");
        cmd->add_option("--b", b_text, "Breaker token budget (integer or 'star')");
        cmd->add_flag("--sliding", sliding, "token sliding rule");
    };

    CLI::App* solve = app.add_subcommand("solve", "exact solve via the state-graph attractor");
    add_budgets(solve);
    solve->add_option("--max-states", max_states, "state cap override");
    add_json(solve);
    add_board_arg(solve);

    CLI::App* oracle = app.add_subcommand("oracle", "independent exhaustive minimax oracle");
    add_budgets(oracle);
    add_json(oracle);
    add_board_arg(oracle);

    CLI::App* theta_cmd = app.add_subcommand("theta", "least Maker budget beating star");
    add_json(theta_cmd);
    add_board_arg(theta_cmd);
    CLI::App* tau_cmd = app.add_subcommand("tau", "rounds Maker needs in the classical game");
    add_json(tau_cmd);
    add_board_arg(tau_cmd);

    CLI::App* gen = app.add_subcommand("gen", "generate a board family");
    gen->add_option("family", family,
                    "nunchaku|necklace|diamond-nunchaku|k-vs-1|biggap|bigtheta|lift")
        ->required();
    gen->add_option("params", gen_params, "family parameters");
    gen->add_option("-o,--output", out_path, "write the board to a file");
    gen->add_option("--input", lift_input, "input board (gen lift)");
    add_json(gen);

    CLI::App* reduce = app.add_subcommand("reduce", "the (a,1) contraction solver");
    reduce->add_option("--a", a_text, "Maker token budget")->required();
    add_json(reduce);
    add_board_arg(reduce);

    CLI::App* arena_cmd = app.add_subcommand("arena", "play two strategies against each other");
    arena_cmd->add_option("--maker", maker, "forcing|dichotomy|regular|twophase|random|optimal");
    arena_cmd->add_option("--breaker", breaker, "strategy for Breaker");
    add_budgets(arena_cmd);
    arena_cmd->add_option("--max-rounds", max_rounds, "round cap (0 = default)");
    arena_cmd->add_option("--seed", seed, "seed for random strategies");
    add_json(arena_cmd);
    add_board_arg(arena_cmd);

    CLI::App* ed_solve = app.add_subcommand("ed-solve", "solve an eternal domination instance");
    add_json(ed_solve);
    add_board_arg(ed_solve);
    CLI::App* ed_reduce = app.add_subcommand("ed-reduce", "emit the sliding-game board");
    ed_reduce->add_option("-o,--output", out_path, "write the board to a file");
    add_json(ed_reduce);
    add_board_arg(ed_reduce);
    CLI::App* ed_check = app.add_subcommand("ed-check", "verify the reduction equivalence");
    add_json(ed_check);
    add_board_arg(ed_check);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) // --help
            return app.exit(e);
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (solve->parsed() || oracle->parsed()) {
            run_solve_like(solve->parsed() ? "solve" : "oracle", file,
                           parse_budget(a_text, "--a"), parse_budget(b_text, "--b"), sliding,
                           max_states, as_json);
        } else if (theta_cmd->parsed() || tau_cmd->parsed()) {
            run_threshold(theta_cmd->parsed() ? "theta" : "tau", file, as_json);
        } else if (gen->parsed()) {
            run_gen(family, gen_params, lift_input, out_path, as_json);
        } else if (reduce->parsed()) {
            const int64_t a = parse_budget(a_text, "--a");
            if (a == TPG_UNLIMITED)
                throw CliError{kExitUsage, "reduce needs a finite --a"};
            run_reduce(file, a, as_json);
        } else if (arena_cmd->parsed()) {
            run_arena(file, maker, breaker, parse_budget(a_text, "--a"),
                      parse_budget(b_text, "--b"), sliding, max_rounds, seed, as_json);
        } else if (ed_solve->parsed() || ed_reduce->parsed() || ed_check->parsed()) {
            run_ed(ed_solve->parsed() ? "ed-solve" : ed_reduce->parsed() ? "ed-reduce" : "ed-check",
                   file, out_path, as_json);
        }
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
