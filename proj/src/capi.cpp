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

#include "tokengames.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "tpg/constructions.hpp"
#include "tpg/eternal.hpp"
#include "tpg/io.hpp"
#include "tpg/oracle.hpp"
#include "tpg/reach.hpp"
#include "tpg/reduction.hpp"
#include "tpg/strategies.hpp"
#include "tpg/thresholds.hpp"

struct tpg_board {
    tpg::Position position;
};

struct tpg_graph {
    tpg::Graph graph;
    tpg::GuardConfig guards;
};

struct tpg_solve_result {
    tpg::PositionReport report;
};

struct tpg_reduction {
    tpg::ReductionResult result;
};

struct tpg_transcript {
    tpg::ArenaResult result;
};

namespace {

thread_local std::string g_last_error;

tpg_status fail(tpg_status code, const std::string& message) {
    g_last_error = message;
    return code;
}

template <typename Fn>
tpg_status guarded(Fn&& fn) {
    try {
        fn();
        return TPG_OK;
    } catch (const tpg::ParseError& e) {
        return fail(TPG_ERR_PARSE, e.what());
    } catch (const tpg::ScaleLimit& e) {
        return fail(TPG_ERR_SCALE, e.what());
    } catch (const tpg::FamilyMismatch& e) {
        return fail(TPG_ERR_ARG, e.what());
    } catch (const tpg::InvalidArgument& e) {
        return fail(TPG_ERR_ARG, e.what());
    } catch (const tpg::StrategyInapplicable& e) {
        return fail(TPG_ERR_ARG, e.what());
    } catch (const std::exception& e) {
        return fail(TPG_ERR_INTERNAL, e.what());
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

tpg::Budget to_budget(int64_t v) {
    if (v == TPG_UNLIMITED)
        return tpg::Budget::unlimited();
    if (v < 1 || v > 1'000'000)
        throw tpg::InvalidArgument("token budget must be positive or TPG_UNLIMITED");
    return tpg::Budget::finite(static_cast<int>(v));
}

tpg::GameSpec to_spec(int64_t a, int64_t b, int sliding) {
    return tpg::GameSpec{to_budget(a), to_budget(b),
                         sliding ? tpg::MoveRule::Sliding : tpg::MoveRule::Jumping};
}

tpg::BuildOptions build_options(uint64_t max_states) {
    tpg::BuildOptions opts;
    if (max_states > 0) {
        opts.max_states = max_states;
    } else if (const char* env = std::getenv("TPG_MAX_STATES")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0)
            opts.max_states = v;
    }
    return opts;
}

} // namespace

extern "C" {

const char* tpg_last_error(void) { return g_last_error.c_str(); }

void tpg_string_free(char* s) { std::free(s); }

tpg_status tpg_board_parse(const char* text, tpg_board** out) {
    return guarded([&] {
        if (!text || !out)
            throw tpg::InvalidArgument("null argument");
        *out = new tpg_board{tpg::parse_board(text).position};
    });
}

tpg_status tpg_board_generate(const char* family, const int64_t* params, size_t n_params,
                              tpg_board** out) {
    return guarded([&] {
        if (!family || !out || (n_params > 0 && !params))
            throw tpg::InvalidArgument("null argument");
        const std::string name = family;
        auto want = [&](size_t count) {
            if (n_params != count)
                throw tpg::InvalidArgument("family '" + name + "' takes " +
                                           std::to_string(count) + " parameter(s)");
        };
        auto p = [&](size_t i) { return static_cast<int>(params[i]); };
        tpg::Position pos;
        if (name == "nunchaku") {
            want(1);
            pos = tpg::nunchaku(p(0));
        } else if (name == "necklace") {
            want(1);
            pos = tpg::necklace(p(0));
        } else if (name == "diamond-nunchaku") {
            want(1);
            pos = tpg::Position(std::make_shared<tpg::Hypergraph>(tpg::diamond_nunchaku(p(0))));
        } else if (name == "k-vs-1") {
            want(1);
            pos = tpg::Position(std::make_shared<tpg::Hypergraph>(tpg::k_vs_1(p(0))));
        } else if (name == "biggap") {
            want(2);
            pos = tpg::Position(std::make_shared<tpg::Hypergraph>(tpg::biggap(p(0), p(1))));
        } else if (name == "bigtheta") {
            want(1);
            pos = tpg::Position(
                std::make_shared<tpg::Hypergraph>(tpg::bigtheta(p(0)).hypergraph));
        } else {
            throw tpg::InvalidArgument(
                "unknown family '" + name +
                "' (nunchaku|necklace|diamond-nunchaku|k-vs-1|biggap|bigtheta)");
        }
        *out = new tpg_board{std::move(pos)};
    });
}

tpg_status tpg_board_lift(const tpg_board* in, tpg_board** out) {
    return guarded([&] {
        if (!in || !out)
            throw tpg::InvalidArgument("null argument");
        if (in->position.maker || in->position.breaker)
            throw tpg::InvalidArgument("lift applies to token-free boards");
        auto lifted = std::make_shared<tpg::Hypergraph>(
            tpg::lift_plus_one(in->position.hypergraph()));
        *out = new tpg_board{tpg::Position(std::move(lifted))};
    });
}

char* tpg_board_format(const tpg_board* b) {
    if (!b)
        return nullptr;
    return dup_string(tpg::format_board(b->position));
}

int tpg_board_vertices(const tpg_board* b) {
    return b ? b->position.hypergraph().vertex_count() : -1;
}

int tpg_board_edges(const tpg_board* b) {
    return b ? b->position.hypergraph().edge_count() : -1;
}

void tpg_board_free(tpg_board* b) { delete b; }

tpg_status tpg_solve(const tpg_board* b, int64_t a, int64_t bb, int sliding,
                     uint64_t max_states, tpg_solve_result** out) {
    return guarded([&] {
        if (!b || !out)
            throw tpg::InvalidArgument("null argument");
        *out = new tpg_solve_result{
            tpg::solve_position(b->position, to_spec(a, bb, sliding), build_options(max_states))};
    });
}

tpg_player tpg_result_winner(const tpg_solve_result* r) {
    return r->report.winner == tpg::Player::Maker ? TPG_MAKER : TPG_BREAKER;
}

int64_t tpg_result_distance(const tpg_solve_result* r) {
    return r->report.distance ? *r->report.distance : TPG_INFINITE;
}

char* tpg_result_first_move(const tpg_solve_result* r) {
    if (!r->report.best_move)
        return nullptr;
    return dup_string(r->report.best_move->to_string());
}

uint64_t tpg_result_states(const tpg_solve_result* r) { return r->report.states; }
uint64_t tpg_result_arcs(const tpg_solve_result* r) { return r->report.arcs; }
int tpg_result_size_bounds_hold(const tpg_solve_result* r) {
    return r->report.size_bounds_hold ? 1 : 0;
}
void tpg_result_free(tpg_solve_result* r) { delete r; }

tpg_status tpg_oracle(const tpg_board* b, int64_t a, int64_t bb, int sliding,
                      tpg_player* winner) {
    return guarded([&] {
        if (!b || !winner)
            throw tpg::InvalidArgument("null argument");
        tpg::Player w = tpg::minimax_oracle(b->position, to_spec(a, bb, sliding));
        *winner = w == tpg::Player::Maker ? TPG_MAKER : TPG_BREAKER;
    });
}

tpg_status tpg_theta(const tpg_board* b, int64_t* out) {
    return guarded([&] {
        if (!b || !out)
            throw tpg::InvalidArgument("null argument");
        auto t = tpg::theta(b->position.hypergraph(), build_options(0));
        *out = t ? *t : TPG_INFINITE;
    });
}

tpg_status tpg_tau(const tpg_board* b, int64_t* out) {
    return guarded([&] {
        if (!b || !out)
            throw tpg::InvalidArgument("null argument");
        auto t = tpg::tau(b->position.hypergraph(), build_options(0));
        *out = t ? *t : TPG_INFINITE;
    });
}

tpg_status tpg_reduce(const tpg_board* b, int64_t a, tpg_reduction** out) {
    return guarded([&] {
        if (!b || !out)
            throw tpg::InvalidArgument("null argument");
        *out = new tpg_reduction{tpg::solve_a1(b->position.hypergraph(), to_budget(a))};
    });
}

tpg_player tpg_reduction_winner(const tpg_reduction* r) {
    return r->result.winner == tpg::Player::Maker ? TPG_MAKER : TPG_BREAKER;
}

size_t tpg_reduction_steps(const tpg_reduction* r) { return r->result.trace.size(); }

char* tpg_reduction_step(const tpg_reduction* r, size_t i) {
    if (!r || i >= r->result.trace.size())
        return nullptr;
    const tpg::Contraction& c = r->result.trace[i];
    return dup_string("contract " + tpg::mask_to_string(c.e1) + " " +
                      tpg::mask_to_string(c.e2) + " -> " +
                      tpg::mask_to_string(c.intersection));
}

void tpg_reduction_free(tpg_reduction* r) { delete r; }

tpg_status tpg_arena(const tpg_board* b, const char* maker, const char* breaker, int64_t a,
                     int64_t bb, int sliding, int max_rounds, uint64_t seed,
                     tpg_transcript** out) {
    return guarded([&] {
        if (!b || !maker || !breaker || !out)
            throw tpg::InvalidArgument("null argument");
        const tpg::GameSpec spec = to_spec(a, bb, sliding);
        tpg::StrategyOptions opts;
        opts.seed = seed;
        auto maker_side = tpg::scripted_strategy(tpg::parse_strategy_kind(maker), b->position,
                                                 spec, opts);
        opts.seed = seed + 1; // distinct stream for the second seat
        auto breaker_side = tpg::scripted_strategy(tpg::parse_strategy_kind(breaker),
                                                   b->position, spec, opts);
        tpg::ArenaOptions arena_opts;
        arena_opts.max_rounds = max_rounds;
        *out = new tpg_transcript{
            tpg::arena(*maker_side, *breaker_side, b->position, spec, arena_opts)};
    });
}

int tpg_transcript_maker_won(const tpg_transcript* t) {
    return t->result.verdict == tpg::Verdict::MakerWin ? 1 : 0;
}

int tpg_transcript_rounds(const tpg_transcript* t) { return t->result.rounds; }

char* tpg_transcript_note(const tpg_transcript* t) { return dup_string(t->result.note); }

size_t tpg_transcript_lines(const tpg_transcript* t) { return t->result.transcript.size(); }

char* tpg_transcript_line(const tpg_transcript* t, size_t i) {
    if (!t || i >= t->result.transcript.size())
        return nullptr;
    return dup_string(t->result.transcript[i].to_string());
}

void tpg_transcript_free(tpg_transcript* t) { delete t; }

tpg_status tpg_graph_parse(const char* text, tpg_graph** out) {
    return guarded([&] {
        if (!text || !out)
            throw tpg::InvalidArgument("null argument");
        tpg::GraphFile f = tpg::parse_graph(text);
        *out = new tpg_graph{std::move(f.graph), f.guards};
    });
}

void tpg_graph_free(tpg_graph* g) { delete g; }

tpg_status tpg_ed_solve(const tpg_graph* g, int* attacker_wins) {
    return guarded([&] {
        if (!g || !attacker_wins)
            throw tpg::InvalidArgument("null argument");
        *attacker_wins = tpg::ed_attacker_wins(g->graph, g->guards) ? 1 : 0;
    });
}

tpg_status tpg_ed_reduce(const tpg_graph* g, tpg_board** out, int64_t* breaker_budget) {
    return guarded([&] {
        if (!g || !out)
            throw tpg::InvalidArgument("null argument");
        tpg::SlidingReduction red = tpg::build_sliding_position(g->graph, g->guards);
        if (breaker_budget)
            *breaker_budget = red.spec.breaker_budget.count();
        *out = new tpg_board{std::move(red.position)};
    });
}

tpg_status tpg_ed_check(const tpg_graph* g, int* equivalent, int* attacker_wins,
                        int* maker_wins) {
    return guarded([&] {
        if (!g || !equivalent)
            throw tpg::InvalidArgument("null argument");
        tpg::EquivalenceReport rep = tpg::check_reduction_equivalence(g->graph, g->guards);
        *equivalent = rep.equivalent ? 1 : 0;
        if (attacker_wins)
            *attacker_wins = rep.attacker_wins ? 1 : 0;
        if (maker_wins)
            *maker_wins = rep.maker_wins ? 1 : 0;
    });
}

} // extern "C"
