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

#include <cmath>

#include "helpers.hpp"
#include "tpg/strategies.hpp"

using namespace tpg;
using tpg::testing::spec;

namespace {

int max_maker_tokens(const ArenaResult& r) {
    int most = 0;
    for (const TranscriptEntry& e : r.transcript)
        most = std::max(most, popcount(e.maker_after));
    return most;
}

// Replaying the transcript through apply_move must land on the recorded
// final position.
void check_transcript_integrity(const ArenaResult& r, const Position& start,
                                const GameSpec& sp) {
    GameState s{start, Player::Maker};
    for (const TranscriptEntry& e : r.transcript) {
        s = apply_move(s, sp, e.move);
        CHECK(s.position.maker == e.maker_after);
        CHECK(s.position.breaker == e.breaker_after);
    }
    CHECK(s.position.maker == r.final_position.maker);
    CHECK(s.position.breaker == r.final_position.breaker);
}

ArenaResult run(StrategyKind maker, StrategyKind breaker, const Position& start,
                const GameSpec& sp, int max_rounds = 0, std::uint64_t seed = 1) {
    StrategyOptions opts;
    opts.seed = seed;
    auto m = scripted_strategy(maker, start, sp, opts);
    opts.seed = seed + 1;
    auto b = scripted_strategy(breaker, start, sp, opts);
    ArenaOptions ao;
    ao.max_rounds = max_rounds;
    return arena(*m, *b, start, sp, ao);
}

} // namespace

TEST_CASE("family mismatch is refused") {
    Position tri = testing::board(3, {{0, 1}, {1, 2}});
    CHECK_THROWS_AS(scripted_strategy(StrategyKind::ForcingMaker, tri, spec(3, -1)),
                    FamilyMismatch);
    CHECK_THROWS_AS(scripted_strategy(StrategyKind::TwoPhaseBreaker, tri, spec(3, -1)),
                    FamilyMismatch);
    CHECK_THROWS_AS(
        scripted_strategy(StrategyKind::ForcingMaker, nunchaku(3), spec(3, -1, MoveRule::Sliding)),
        FamilyMismatch);
    CHECK_NOTHROW(scripted_strategy(StrategyKind::RandomLegal, tri, spec(2, 2)));
}

TEST_CASE("empty winning set ends the arena at round zero") {
    Position p = testing::board(2, {{}});
    ArenaResult r = run(StrategyKind::RandomLegal, StrategyKind::RandomLegal, p, spec(1, 1));
    CHECK(r.verdict == Verdict::MakerWin);
    CHECK(r.rounds == 0);
}

TEST_CASE("forcing maker beats the optimal breaker on nunchakus") {
    for (int length = 1; length <= 6; ++length) {
        Position p = nunchaku(length);
        const GameSpec sp = spec(3, -1);
        ArenaResult r = run(StrategyKind::ForcingMaker, StrategyKind::Optimal, p, sp);
        CAPTURE(length);
        CHECK(r.verdict == Verdict::MakerWin);
        CHECK(r.rounds <= length + 1);
        CHECK(max_maker_tokens(r) <= 3);
        check_transcript_integrity(r, p, sp);
    }
}

TEST_CASE("forcing maker beats random breakers on necklaces") {
    for (int length = 2; length <= 5; ++length) {
        for (std::uint64_t seed = 1; seed <= 10; ++seed) {
            Position p = necklace(length);
            ArenaResult r =
                run(StrategyKind::ForcingMaker, StrategyKind::RandomLegal, p, spec(3, -1), 0, seed);
            CAPTURE(length);
            CAPTURE(seed);
            CHECK(r.verdict == Verdict::MakerWin);
            CHECK(r.rounds <= length + 1);
            CHECK(max_maker_tokens(r) <= 3);
        }
    }
}

TEST_CASE("forcing maker punishes a breaker that ignores threats") {
    for (int length = 2; length <= 5; ++length) {
        for (std::uint64_t seed = 3; seed <= 8; ++seed) {
            Position p = nunchaku(length);
            ArenaResult r =
                run(StrategyKind::ForcingMaker, StrategyKind::RandomLegal, p, spec(3, -1), 0, seed);
            CHECK(r.verdict == Verdict::MakerWin);
        }
    }
}

TEST_CASE("dichotomy maker wins in exactly 1 + ceil(log2 L) rounds") {
    for (int length : {2, 3, 4, 5, 8}) {
        Position p = nunchaku(length);
        const GameSpec sp = spec(3, -1);
        ArenaResult r = run(StrategyKind::DichotomyMaker, StrategyKind::Optimal, p, sp);
        CAPTURE(length);
        CHECK(r.verdict == Verdict::MakerWin);
        CHECK(r.rounds == 1 + static_cast<int>(std::ceil(std::log2(length))));
        CHECK(max_maker_tokens(r) <= 3);
        check_transcript_integrity(r, p, sp);
    }
}

TEST_CASE("dichotomy maker handles necklaces") {
    for (int length : {2, 3, 4, 6}) {
        Position p = necklace(length);
        ArenaResult r = run(StrategyKind::DichotomyMaker, StrategyKind::Optimal, p, spec(3, -1));
        CAPTURE(length);
        CHECK(r.verdict == Verdict::MakerWin);
        CHECK(r.rounds <= 2 + static_cast<int>(std::ceil(std::log2(length))));
    }
}

TEST_CASE("regular play wins biggap in (n+1)/2 rounds with four tokens") {
    Position p(std::make_shared<Hypergraph>(biggap(4, 9)));
    const GameSpec sp = spec(4, -1);
    ArenaResult r = run(StrategyKind::RegularPlayMaker, StrategyKind::Optimal, p, sp);
    CHECK(r.verdict == Verdict::MakerWin);
    CHECK(r.rounds == 5);
    CHECK(max_maker_tokens(r) <= 4);
    check_transcript_integrity(r, p, sp);
}

TEST_CASE("regular play punishes a skipped guard reply") {
    // a random Breaker will not answer a_1 with abar_1; the guard gadget
    // then falls in a few moves
    Position p(std::make_shared<Hypergraph>(biggap(4, 9)));
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        ArenaResult r =
            run(StrategyKind::RegularPlayMaker, StrategyKind::RandomLegal, p, spec(4, -1), 0, seed);
        CAPTURE(seed);
        CHECK(r.verdict == Verdict::MakerWin);
    }
}

TEST_CASE("optimal vs optimal on biggap(4,9) ends at round 5") {
    Position p(std::make_shared<Hypergraph>(biggap(4, 9)));
    const GameSpec sp = spec(4, -1);
    ArenaResult r = run(StrategyKind::Optimal, StrategyKind::Optimal, p, sp);
    CHECK(r.verdict == Verdict::MakerWin);
    CHECK(r.rounds == 5);
}

TEST_CASE("regular play with N+2 tokens beats the two-phase breaker") {
    BigthetaBoard bt = bigtheta(2);
    Position p(std::make_shared<Hypergraph>(bt.hypergraph));
    const GameSpec sp = spec(4, -1);
    ArenaResult r = run(StrategyKind::RegularPlayMaker, StrategyKind::TwoPhaseBreaker, p, sp);
    CHECK(r.verdict == Verdict::MakerWin);
    CHECK(max_maker_tokens(r) <= 4);
    check_transcript_integrity(r, p, sp);
}

TEST_CASE("two-phase breaker survives the one-token-short regular play") {
    BigthetaBoard bt = bigtheta(2);
    Position p(std::make_shared<Hypergraph>(bt.hypergraph));
    ArenaResult r =
        run(StrategyKind::RegularPlayMaker, StrategyKind::TwoPhaseBreaker, p, spec(3, -1), 200);
    CHECK(r.verdict == Verdict::BreakerSurvives);
}

TEST_CASE("two-phase breaker never vacates a claimed vertex") {
    BigthetaBoard bt = bigtheta(2);
    Position p(std::make_shared<Hypergraph>(bt.hypergraph));
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        ArenaResult r =
            run(StrategyKind::RandomLegal, StrategyKind::TwoPhaseBreaker, p, spec(3, -1), 200, seed);
        CAPTURE(seed);
        CHECK(r.verdict == Verdict::BreakerSurvives);
        Mask before = 0;
        for (const TranscriptEntry& e : r.transcript) {
            if (e.side == Player::Breaker)
                CHECK((before & ~e.breaker_after) == 0); // monotone growth
            before = e.breaker_after;
        }
    }
}

TEST_CASE("two-phase breaker holds a larger board through the case pairings") {
    // 26 free vertices exceed the exact pairing-search limit, so the watch
    // runs on the survival argument's hand-built pairings.
    BigthetaBoard bt = bigtheta(3);
    Position p(std::make_shared<Hypergraph>(bt.hypergraph));
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        ArenaResult r = run(StrategyKind::RandomLegal, StrategyKind::TwoPhaseBreaker, p,
                            spec(4, -1), 120, seed);
        CAPTURE(seed);
        CHECK(r.verdict == Verdict::BreakerSurvives);
    }
}

TEST_CASE("arena flags an illegal scripted move with strategy and round") {
    struct Cheater : Strategy {
        std::string name() const override { return "cheater"; }
        Move next_move(const GameState&) override { return Move::place(0); }
    };
    Position p = testing::board(2, {{0, 1}}, bit(0), 0); // vertex 0 occupied
    Cheater maker;
    StrategyOptions opts;
    auto breaker = scripted_strategy(StrategyKind::RandomLegal, p, spec(2, 2), opts);
    try {
        arena(maker, *breaker, p, spec(2, 2));
        FAIL("expected StrategyInapplicable");
    } catch (const StrategyInapplicable& e) {
        const std::string msg = e.what();
        CHECK(msg.find("cheater") != std::string::npos);
        CHECK(msg.find("round 1") != std::string::npos);
    }
}

TEST_CASE("repetition ends the game for Breaker") {
    struct Passer : Strategy {
        std::string name() const override { return "passer"; }
        Move next_move(const GameState&) override { return Move::pass(); }
    };
    Position p = testing::board(3, {{0, 1, 2}});
    Passer a, b;
    ArenaResult r = arena(a, b, p, spec(1, 1));
    CHECK(r.verdict == Verdict::BreakerSurvives);
    CHECK(r.note == "state repeated");
    CHECK(r.rounds == 1);
}

TEST_CASE("strategy kinds parse") {
    CHECK(parse_strategy_kind("forcing") == StrategyKind::ForcingMaker);
    CHECK(parse_strategy_kind("optimal") == StrategyKind::Optimal);
    CHECK_THROWS_AS(parse_strategy_kind("bogus"), InvalidArgument);
    CHECK(std::string(strategy_kind_name(StrategyKind::TwoPhaseBreaker)) == "twophase");
}
