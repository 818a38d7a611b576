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

/* C interface to the token positional game solver library. All objects are
 * opaque handles freed with their tpg_*_free function; every fallible call
 * returns a tpg_status and leaves a message for tpg_last_error() on
 * failure. Strings returned as char* are heap copies for
 * tpg_string_free(). */

#ifndef TOKENGAMES_H
#define TOKENGAMES_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct tpg_board tpg_board;           /* hypergraph + seeded position */
typedef struct tpg_graph tpg_graph;           /* guard graph */
typedef struct tpg_solve_result tpg_solve_result;
typedef struct tpg_reduction tpg_reduction;   /* (a,1) contraction trace */
typedef struct tpg_transcript tpg_transcript; /* arena record */

typedef enum {
    TPG_OK = 0,
    TPG_ERR_PARSE = 1,    /* malformed input text */
    TPG_ERR_ARG = 2,      /* bad parameter / unknown name / family mismatch */
    TPG_ERR_SCALE = 3,    /* a state, search or depth cap was exceeded */
    TPG_ERR_INTERNAL = 4,
} tpg_status;

typedef enum { TPG_MAKER = 0, TPG_BREAKER = 1 } tpg_player;

/* Budget value for an unlimited token stock ("star"). */
#define TPG_UNLIMITED (-1)
/* Returned by theta/tau/distance when Breaker wins. */
#define TPG_INFINITE (-1)

/* Message describing the most recent failure on this thread. */
const char* tpg_last_error(void);

void tpg_string_free(char* s);

/* ---- boards ---- */

tpg_status tpg_board_parse(const char* text, tpg_board** out);
/* Families: nunchaku L | necklace L | diamond-nunchaku n | k-vs-1 k |
 * biggap k n | bigtheta N. */
tpg_status tpg_board_generate(const char* family, const int64_t* params,
                              size_t n_params, tpg_board** out);
tpg_status tpg_board_lift(const tpg_board* in, tpg_board** out);
char* tpg_board_format(const tpg_board* b);
int tpg_board_vertices(const tpg_board* b);
int tpg_board_edges(const tpg_board* b);
void tpg_board_free(tpg_board* b);

/* ---- solving ---- */

/* a, b: token budgets (TPG_UNLIMITED for star). sliding: 0 jump, 1 slide.
 * max_states: 0 keeps the default cap (also overridable through the
 * TPG_MAX_STATES environment variable). */
tpg_status tpg_solve(const tpg_board* b, int64_t a, int64_t bb, int sliding,
                     uint64_t max_states, tpg_solve_result** out);
tpg_player tpg_result_winner(const tpg_solve_result* r);
int64_t tpg_result_distance(const tpg_solve_result* r); /* TPG_INFINITE if none */
char* tpg_result_first_move(const tpg_solve_result* r); /* NULL if none */
uint64_t tpg_result_states(const tpg_solve_result* r);
uint64_t tpg_result_arcs(const tpg_solve_result* r);
int tpg_result_size_bounds_hold(const tpg_solve_result* r);
void tpg_result_free(tpg_solve_result* r);

tpg_status tpg_oracle(const tpg_board* b, int64_t a, int64_t bb, int sliding,
                      tpg_player* winner);

tpg_status tpg_theta(const tpg_board* b, int64_t* out);
tpg_status tpg_tau(const tpg_board* b, int64_t* out);

/* ---- the (a,1) reduction solver ---- */

tpg_status tpg_reduce(const tpg_board* b, int64_t a, tpg_reduction** out);
tpg_player tpg_reduction_winner(const tpg_reduction* r);
size_t tpg_reduction_steps(const tpg_reduction* r);
/* "contract {..} {..} -> {..}" */
char* tpg_reduction_step(const tpg_reduction* r, size_t i);
void tpg_reduction_free(tpg_reduction* r);

/* ---- arenas ---- */

/* maker/breaker: forcing | dichotomy | regular | twophase | random |
 * optimal. max_rounds 0 picks the practical default. */
tpg_status tpg_arena(const tpg_board* b, const char* maker, const char* breaker,
                     int64_t a, int64_t bb, int sliding, int max_rounds,
                     uint64_t seed, tpg_transcript** out);
int tpg_transcript_maker_won(const tpg_transcript* t);
int tpg_transcript_rounds(const tpg_transcript* t);
char* tpg_transcript_note(const tpg_transcript* t);
size_t tpg_transcript_lines(const tpg_transcript* t);
char* tpg_transcript_line(const tpg_transcript* t, size_t i);
void tpg_transcript_free(tpg_transcript* t);

/* ---- eternal domination ---- */

tpg_status tpg_graph_parse(const char* text, tpg_graph** out);
void tpg_graph_free(tpg_graph* g);
tpg_status tpg_ed_solve(const tpg_graph* g, int* attacker_wins);
/* The rank-2 sliding board; solve it as the (1, guards)-game with sliding.
 * breaker_budget receives the guard count. */
tpg_status tpg_ed_reduce(const tpg_graph* g, tpg_board** out, int64_t* breaker_budget);
tpg_status tpg_ed_check(const tpg_graph* g, int* equivalent, int* attacker_wins,
                        int* maker_wins);

#ifdef __cplusplus
}
#endif

#endif
