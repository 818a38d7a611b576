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

#include "tpg/strategies.hpp"

#include <algorithm>
#include <random>
#include <unordered_set>

#include "tpg/bounded.hpp"
#include "tpg/pairing.hpp"
#include "tpg/reach.hpp"

namespace tpg {

namespace {

// A move that fills an edge right now: some Breaker-free edge has exactly
// one vertex left and Maker can put a token there without vacating the rest
// of it.
std::optional<Move> find_filling_move(const GameState& s, const GameSpec& spec) {
    if (s.to_move != Player::Maker)
        return std::nullopt;
    const Position& p = s.position;
    for (Mask e : p.hypergraph().edges()) {
        if (e & p.breaker)
            continue;
        const Mask missing = e & ~p.maker;
        if (popcount(missing) != 1)
            continue;
        const Vertex x = std::countr_zero(missing);
        if (is_legal(s, spec, Move::place(x)))
            return Move::place(x);
        std::optional<Move> found;
        for_each_vertex(p.maker & ~e, [&](Vertex from) {
            if (!found && is_legal(s, spec, Move::relocate(from, x)))
                found = Move::relocate(from, x);
        });
        if (found)
            return found;
    }
    return std::nullopt;
}

// Puts a token on x: a placement when the budget allows, otherwise a
// relocation from the lowest token outside `keep`.
Move acquire(const GameState& s, const GameSpec& spec, Vertex x, Mask keep) {
    if (is_legal(s, spec, Move::place(x)))
        return Move::place(x);
    std::optional<Move> found;
    for_each_vertex(s.position.tokens(s.to_move) & ~keep, [&](Vertex from) {
        if (!found && is_legal(s, spec, Move::relocate(from, x)))
            found = Move::relocate(from, x);
    });
    if (!found)
        throw StrategyInapplicable("cannot put a token on vertex " + std::to_string(x));
    return *found;
}

void require_jumping(const GameSpec& spec, const char* who) {
    if (spec.rule != MoveRule::Jumping)
        throw FamilyMismatch(std::string(who) + " is scripted for the jumping rule");
}

// Regular play run with fewer tokens than the script assumes eventually has
// nothing useful left; it passes rather than resigning so the game can run
// to its verdict.
Move acquire_or_pass(const GameState& s, const GameSpec& spec, Vertex x, Mask keep) {
    try {
        return acquire(s, spec, x, keep);
    } catch (const StrategyInapplicable&) {
        return Move::pass();
    }
}

// ---------------------------------------------------------------- forcing

class ForcingNunchaku final : public Strategy {
  public:
    explicit ForcingNunchaku(NunchakuLayout lay) : lay_(lay), next_(1) {}
    std::string name() const override { return "forcing"; }

    Move next_move(const GameState& s) override {
        if (auto fill = find_filling_move(s, spec_))
            return *fill;
        // Place the third token on a_1, then shuttle a_{i-2} -> a_i; each
        // step is a one-move threat Breaker must answer on b_i.
        if (next_ == 1) {
            if (next_++ > lay_.length - 1)
                throw StrategyInapplicable("forcing script exhausted");
            return acquire(s, spec_, lay_.a(1), bit(lay_.a(0)) | bit(lay_.a(lay_.length)));
        }
        const int i = next_++;
        if (i > lay_.length - 1)
            throw StrategyInapplicable("forcing script exhausted");
        return Move::relocate(lay_.a(i - 2), lay_.a(i));
    }

    GameSpec spec_;

  private:
    NunchakuLayout lay_;
    int next_;
};

class ForcingNecklace final : public Strategy {
  public:
    explicit ForcingNecklace(NecklaceLayout lay) : lay_(lay), next_(2) {}
    std::string name() const override { return "forcing"; }

    Move next_move(const GameState& s) override {
        if (auto fill = find_filling_move(s, spec_))
            return *fill;
        // Keep the token on a_1 and run threats around the cycle until the
        // far side closes into a double threat.
        const int i = next_++;
        if (i > lay_.length)
            throw StrategyInapplicable("forcing script exhausted");
        if (i <= 3)
            return acquire(s, spec_, lay_.a(i), bit(lay_.a(1)));
        return Move::relocate(lay_.a(i - 2), lay_.a(i));
    }

    GameSpec spec_;

  private:
    NecklaceLayout lay_;
    int next_;
};

// -------------------------------------------------------------- dichotomy

// A chain of a-vertices with the b-vertex of each connecting edge.
struct Chain {
    std::vector<Vertex> a; // a.size() == b.size() + 1
    std::vector<Vertex> b;

    int length() const { return static_cast<int>(b.size()); }
    Mask vertices() const {
        Mask m = 0;
        for (Vertex v : a)
            m |= bit(v);
        for (Vertex v : b)
            m |= bit(v);
        return m;
    }
    Chain slice(int from, int to) const { // a[from..to]
        Chain c;
        c.a.assign(a.begin() + from, a.begin() + to + 1);
        c.b.assign(b.begin() + from, b.begin() + to);
        return c;
    }
};

class DichotomyMaker final : public Strategy {
  public:
    DichotomyMaker(Chain whole, std::optional<Chain> second)
        : candidates_{std::move(whole)} {
        if (second)
            candidates_.push_back(std::move(*second));
    }
    std::string name() const override { return "dichotomy"; }

    Move next_move(const GameState& s) override {
        if (auto fill = find_filling_move(s, spec_))
            return *fill;

        // Recurse into an intact candidate (Breaker cannot have entered
        // both), preferring the shorter one.
        const Chain* active = nullptr;
        for (const Chain& c : candidates_)
            if (!(c.vertices() & s.position.breaker))
                if (!active || c.length() < active->length())
                    active = &c;
        if (!active)
            throw StrategyInapplicable("no intact chain left to split");

        const int len = active->length();
        if (len < 2)
            throw StrategyInapplicable("dichotomy script stuck on a settled chain");
        const int mid = (len + 1) / 2;
        const Vertex target = active->a[static_cast<size_t>(mid)];
        const Mask keep = bit(active->a.front()) | bit(active->a.back());
        Move mv = acquire(s, spec_, target, keep);
        Chain left = active->slice(0, mid);
        Chain right = active->slice(mid, len);
        candidates_ = {std::move(left), std::move(right)};
        return mv;
    }

    GameSpec spec_;

  private:
    std::vector<Chain> candidates_;
};

Chain nunchaku_chain(const NunchakuLayout& lay) {
    Chain c;
    for (int i = 0; i <= lay.length; ++i)
        c.a.push_back(lay.a(i));
    for (int i = 1; i <= lay.length; ++i)
        c.b.push_back(lay.b(i));
    return c;
}

// A necklace is the chain that wraps: both ends are the one vertex Maker
// already holds, so the generic midpoint logic applies unchanged.
std::unique_ptr<DichotomyMaker> necklace_dichotomy(const NecklaceLayout& lay) {
    Chain cycle;
    for (int i = 1; i <= lay.length; ++i)
        cycle.a.push_back(lay.a(i));
    cycle.a.push_back(lay.a(1));
    for (int i = 1; i <= lay.length; ++i)
        cycle.b.push_back(lay.b(i));
    return std::make_unique<DichotomyMaker>(std::move(cycle), std::nullopt);
}

// ----------------------------------------------------------- regular play

// Scripted fastest play on the biggap board: claim a_1, a_2 behind the
// guard gadgets, then run one-move threats along the cycle. If Breaker ever
// skips a guard reply, switch to chasing the opened guard family.
class RegularBiggap final : public Strategy {
  public:
    explicit RegularBiggap(BiggapLayout lay) : lay_(lay) {}
    std::string name() const override { return "regular"; }

    Move next_move(const GameState& s) override {
        if (auto fill = find_filling_move(s, spec_))
            return *fill;
        const Mask free = s.position.free_vertices();

        if (punish_ == 0 && step_ >= 2 && has(free, lay_.abar(1)))
            punish_ = 1;
        if (punish_ == 0 && step_ >= 3 && has(free, lay_.abar(2)))
            punish_ = 2;
        if (punish_ != 0)
            return punish_move(s);

        const int L = lay_.chain_length;
        const int step = step_++;
        if (step <= 4) // a_1, a_2, a_3, a_4
            return acquire_or_pass(s, spec_, lay_.a(step), protected_now());
        const int i = step - 2; // threat step i in [3, L-1]
        if (i <= L - 1)
            return Move::relocate(lay_.a(i - 1), lay_.a(i + 2));
        if (i == L)
            return Move::relocate(lay_.a(L - 1), lay_.b(L));
        return Move::pass(); // script exhausted; keep the game alive
    }

    GameSpec spec_;

  private:
    Mask protected_now() const {
        return bit(lay_.a(1)) | bit(lay_.a(2)) | bit(lay_.a(3)) | bit(lay_.a(4));
    }

    Move punish_move(const GameState& s) {
        // Guard family i is open: take abar_i, then any gadget vertex; the
        // filling move check finishes the job.
        const Vertex vbar = lay_.abar(punish_);
        const Mask keep = bit(lay_.a(punish_)) | bit(vbar);
        if (!has(s.position.maker, vbar) && has(s.position.free_vertices(), vbar))
            return acquire_or_pass(s, spec_, vbar, keep);
        for (Vertex u : lay_.u)
            if (has(s.position.free_vertices(), u))
                return acquire_or_pass(s, spec_, u, keep | (s.position.maker & u_mask()));
        return Move::pass();
    }

    Mask u_mask() const {
        Mask m = 0;
        for (Vertex u : lay_.u)
            m |= bit(u);
        return m;
    }

    BiggapLayout lay_;
    int step_ = 1;
    int punish_ = 0;
};

// Scripted play for the bigtheta board: occupy a_0 and every c_i (each
// placement forces the matching guard reply), then thread threats along
// e_1..e_2N and finish in the a_2N guard family.
class RegularBigtheta final : public Strategy {
  public:
    explicit RegularBigtheta(BigthetaLayout lay) : lay_(lay) {}
    std::string name() const override { return "regular"; }

    Move next_move(const GameState& s) override {
        if (auto fill = find_filling_move(s, spec_))
            return *fill;
        const Mask free = s.position.free_vertices();

        if (punish_ < 0) {
            // A guard reply was skipped for the last claimed vertex?
            for (size_t g = 0; g < claimed_guarded_.size(); ++g) {
                auto [v, vbar] = claimed_guarded_[g];
                if (has(s.position.maker, v) && has(free, vbar)) {
                    punish_ = static_cast<int>(g);
                    break;
                }
            }
        }
        if (punish_ >= 0)
            return punish_move(s);

        const int N = lay_.N;
        const int step = step_++;
        if (step == 1) {
            claimed_guarded_.emplace_back(lay_.a(0), lay_.abar0());
            return acquire_or_pass(s, spec_, lay_.a(0), protected_now());
        }
        if (step <= N + 1) { // c_1..c_N
            const int i = step - 1;
            claimed_guarded_.emplace_back(lay_.c(i), lay_.cbar(i));
            return acquire_or_pass(s, spec_, lay_.c(i), protected_now());
        }
        if (step == N + 2) // the threat runner
            return acquire_or_pass(s, spec_, lay_.a(1), bit(lay_.a(0)) | bit(lay_.c(1)));
        const int i = step - N - 1; // threat e_i, i in [2, 2N]
        if (i <= 2 * N) {
            Move mv = Move::relocate(lay_.a(i - 2), lay_.a(i));
            if (is_legal(s, spec_, mv))
                return mv;
            return Move::pass(); // blocked: the position is already lost
        }
        // Endgame: open the a_2N guard family.
        if (has(free, lay_.abar2N()))
            return acquire_or_pass(s, spec_, lay_.abar2N(),
                                   bit(lay_.a(2 * N)) | bit(lay_.abar2N()));
        for (int j = 1; j <= 5; ++j)
            if (has(free, lay_.u(j)))
                return acquire_or_pass(s, spec_, lay_.u(j),
                                       bit(lay_.a(2 * N)) | bit(lay_.abar2N()) |
                                           claimed_u_mask(s));
        return Move::pass();
    }

    GameSpec spec_;

  private:
    Mask protected_now() const {
        Mask m = bit(lay_.a(0));
        for (int i = 1; i <= lay_.N; ++i)
            m |= bit(lay_.c(i));
        return m;
    }

    Mask claimed_u_mask(const GameState& s) const {
        Mask m = 0;
        for (int j = 1; j <= 5; ++j)
            m |= bit(lay_.u(j));
        return m & s.position.maker;
    }

    Move punish_move(const GameState& s) {
        auto [v, vbar] = claimed_guarded_[static_cast<size_t>(punish_)];
        const Mask keep = bit(v) | bit(vbar);
        const Mask free = s.position.free_vertices();
        if (has(free, vbar))
            return acquire_or_pass(s, spec_, vbar, keep);
        for (int j = 1; j <= 5; ++j)
            if (has(free, lay_.u(j)))
                return acquire_or_pass(s, spec_, lay_.u(j), keep | claimed_u_mask(s));
        return Move::pass();
    }

    BigthetaLayout lay_;
    int step_ = 1;
    int punish_ = -1;
    std::vector<std::pair<Vertex, Vertex>> claimed_guarded_;
};

// ------------------------------------------------------------- two-phase

// The pairing variants used by the bigtheta survival argument: the base
// pairing with the pairs inside one interval window rewired around a freed
// vertex. Boards too large for exact pairing search fall back to testing
// these.
std::vector<Pairing> bigtheta_case_pairings(const BigthetaLayout& lay, const Pairing& base) {
    const int N = lay.N;
    std::vector<Pairing> out;

    auto region_mask = [&](int a_lo, int a_hi, int b_lo, int b_hi, Mask extra) {
        Mask m = extra;
        for (int t = a_lo; t <= a_hi; ++t)
            m |= bit(lay.a(t));
        for (int t = b_lo; t <= b_hi; ++t)
            m |= bit(lay.b(t));
        return m;
    };
    auto rebuild = [&](Mask region, const std::vector<std::pair<Vertex, Vertex>>& repl) {
        std::vector<std::pair<Vertex, Vertex>> pairs;
        for (auto [u, v] : base.pairs())
            if (!(region & (bit(u) | bit(v))))
                pairs.emplace_back(u, v);
        pairs.insert(pairs.end(), repl.begin(), repl.end());
        try {
            out.emplace_back(std::move(pairs));
        } catch (const InvalidArgument&) {
            // overlapping variant; not a valid pairing, skip
        }
    };

    for (int i = 1; i <= N; ++i) {
        const Mask window = region_mask(i, N + i - 1, i, N + i, 0);
        {
            std::vector<std::pair<Vertex, Vertex>> repl;
            for (int t = i + 1; t <= N + i - 1; ++t)
                repl.emplace_back(lay.a(t), lay.b(t));
            rebuild(window, repl);
        }
        for (int j = i + 1; j <= N + i - 1; ++j) {
            std::vector<std::pair<Vertex, Vertex>> repl;
            repl.emplace_back(lay.a(j - 1), lay.a(j));
            for (int t = i; t <= j - 2; ++t)
                repl.emplace_back(lay.a(t), lay.b(t + 1));
            for (int t = j + 1; t <= N + i - 1; ++t)
                repl.emplace_back(lay.a(t), lay.b(t));
            rebuild(window, repl);
        }
        for (int j = i; j <= N + i - 1; ++j) {
            std::vector<std::pair<Vertex, Vertex>> repl;
            for (int t = i; t <= j - 1; ++t)
                repl.emplace_back(lay.a(t), lay.b(t + 1));
            for (int t = j + 1; t <= N + i - 1; ++t)
                repl.emplace_back(lay.a(t), lay.b(t));
            rebuild(window, repl);
        }
        {
            // left interval freed together with c_i
            const Mask region = region_mask(i, N - 1, i, N, bit(lay.c(i)));
            std::vector<std::pair<Vertex, Vertex>> repl;
            repl.emplace_back(lay.c(i), lay.b(i));
            for (int t = i; t <= N - 1; ++t)
                repl.emplace_back(lay.a(t), lay.b(t + 1));
            rebuild(region, repl);
        }
        {
            // right interval freed together with c_i
            const Mask region = region_mask(N, N + i - 1, N, N + i, bit(lay.c(i)));
            std::vector<std::pair<Vertex, Vertex>> repl;
            repl.emplace_back(lay.c(i), lay.b(N + i));
            for (int t = N; t <= N + i - 1; ++t)
                repl.emplace_back(lay.a(t), lay.b(t));
            rebuild(region, repl);
        }
    }
    return out;
}

bool passes_token_condition(const Pairing& pi, const Position& p, const GameSpec& spec) {
    if (spec.breaker_budget.is_unlimited())
        return true;
    const int spare = spec.breaker_budget.count() - popcount(p.breaker);
    const int live = pi.live_pair_count(p);
    const int needed =
        spec.maker_budget.is_unlimited() ? live : std::min(spec.maker_budget.count(), live);
    return spare >= needed;
}

class TwoPhaseBreaker final : public Strategy {
  public:
    TwoPhaseBreaker(const BigthetaLayout& lay, Pairing pi, GameSpec spec)
        : pi_(std::move(pi)), spec_(spec), layout_(lay) {}
    std::string name() const override { return "twophase"; }

    Move next_move(const GameState& s) override {
        if (phase_ == 2)
            return pairing_breaker_move(armed_, s, spec_);

        // Watch: can one claim turn the position into one with a complete
        // pairing? Exact search within its limit, the survival argument's
        // hand-built pairings beyond it.
        const Mask free = s.position.free_vertices();
        const bool exact = popcount(free) <= PairingSearchOptions{}.max_free_vertices;
        if (!exact && fallback_.empty())
            fallback_ = bigtheta_case_pairings(layout_, pi_);

        std::optional<Move> lock;
        for_each_vertex(free, [&](Vertex y) {
            if (lock)
                return;
            if (!is_legal(s, spec_, Move::place(y)))
                return;
            Position after(s.position.board, s.position.maker, s.position.breaker | bit(y));
            if (exact) {
                PairingSearchOptions opts;
                opts.budget_check = {{spec_.maker_budget, spec_.breaker_budget}};
                if (auto found = find_complete_pairing(after, opts)) {
                    armed_ = std::move(*found);
                    phase_ = 2;
                    lock = Move::place(y);
                }
                return;
            }
            for (const Pairing& cand : fallback_) {
                if (is_complete(cand, after).complete &&
                    passes_token_condition(cand, after, spec_)) {
                    armed_ = cand;
                    phase_ = 2;
                    lock = Move::place(y);
                    return;
                }
            }
        });
        if (lock)
            return *lock;
        return pairing_breaker_move(pi_, s, spec_);
    }

    int phase() const { return phase_; }

  private:
    Pairing pi_;
    Pairing armed_;
    GameSpec spec_;
    BigthetaLayout layout_;
    std::vector<Pairing> fallback_;
    int phase_ = 1;
};

// ----------------------------------------------------------- random play

class RandomLegal final : public Strategy {
  public:
    explicit RandomLegal(std::uint64_t seed) : rng_(seed) {}
    std::string name() const override { return "random"; }

    Move next_move(const GameState& s) override {
        std::vector<Move> moves = legal_moves(s, spec_);
        std::uniform_int_distribution<size_t> pick(0, moves.size() - 1);
        return moves[pick(rng_)];
    }

    GameSpec spec_;

  private:
    std::mt19937_64 rng_;
};

// --------------------------------------------------------------- optimal

// Upper estimate of the reachable state count: token sets of every size the
// budgets allow, both turns. Used to skip attractor builds that would only
// run into the cap.
double state_count_estimate(const Position& start, const GameSpec& spec) {
    const int n = start.hypergraph().vertex_count();
    auto sets_between = [&](int lo, int hi) {
        double total = 0, choose = 1;
        for (int i = 0; i <= hi && i <= n; ++i) {
            if (i > 0)
                choose = choose * (n - i + 1) / i;
            if (i >= lo)
                total += choose;
            if (total > 1e18)
                break;
        }
        return total;
    };
    const double maker = sets_between(popcount(start.maker), spec.maker_budget.effective(n));
    const double breaker = sets_between(popcount(start.breaker), spec.breaker_budget.effective(n));
    return 2.0 * maker * breaker;
}

class OptimalStrategy final : public Strategy {
  public:
    OptimalStrategy(const Position& start, const GameSpec& spec, const StrategyOptions& opts)
        : spec_(spec), horizon_cap_(opts.optimal_horizon_cap) {
        if (state_count_estimate(start, spec) > static_cast<double>(opts.optimal_state_cap)) {
            bounded_.emplace(start.board, spec);
            return;
        }
        try {
            graph_.emplace(GameGraph::build(start, spec, {opts.optimal_state_cap}));
            solved_.emplace(attractor_solve(*graph_));
        } catch (const ScaleLimit&) {
            graph_.reset();
            bounded_.emplace(start.board, spec);
        }
    }
    std::string name() const override { return "optimal"; }

    Move next_move(const GameState& s) override {
        return graph_ ? from_attractor(s) : from_bounded(s);
    }

  private:
    Move from_attractor(const GameState& s) {
        auto idx = graph_->find(make_key(s.position.maker, s.position.breaker, s.to_move));
        if (!idx)
            throw StrategyInapplicable("optimal strategy is off its own game graph");
        const std::uint32_t i = *idx;
        if (graph_->status(i) != TerminalStatus::Ongoing)
            return Move::pass();
        const auto& dist = solved_->distance;
        if (s.to_move == Player::Maker) {
            if (dist[i] < 0)
                return Move::pass(); // lost; stall deterministically
            return *optimal_move(*graph_, *solved_, i);
        }
        std::optional<Move> best;
        if (dist[i] < 0) {
            // winning: stay outside the attractor, smallest successor index
            std::uint32_t best_j = 0;
            for (auto& [mv, j] : graph_->successors(i))
                if (dist[j] < 0 && (!best || j < best_j)) {
                    best = mv;
                    best_j = j;
                }
        } else {
            return *optimal_move(*graph_, *solved_, i); // maximal delay
        }
        if (!best)
            throw StrategyInapplicable("optimal breaker found no move");
        return *best;
    }

    Move from_bounded(const GameState& s) {
        auto d = bounded_->distance_deepening(s, horizon_cap_);
        std::optional<Move> choice;
        if (s.to_move == Player::Maker) {
            if (!d || *d == 0)
                return Move::pass();
            for_each_move(s, spec_, [&](const Move& mv) {
                if (choice)
                    return;
                GameState next = apply_move(s, spec_, mv);
                if (auto v = bounded_->distance_within(next, *d - 1); v && *v == *d - 1)
                    choice = mv;
            });
            if (!choice)
                throw StrategyInapplicable("bounded optimal maker lost its line");
            return *choice;
        }
        // Breaker: survive past the horizon if possible, otherwise pick the
        // slowest loss.
        int best = -1;
        for_each_move(s, spec_, [&](const Move& mv) {
            GameState next = apply_move(s, spec_, mv);
            auto v = bounded_->distance_within(next, d ? *d : horizon_cap_);
            if (!v) {
                if (best < kEscape) {
                    best = kEscape;
                    choice = mv;
                }
            } else if (*v > best && best < kEscape) {
                best = *v;
                choice = mv;
            }
        });
        if (!choice)
            throw StrategyInapplicable("bounded optimal breaker found no move");
        return *choice;
    }

    static constexpr int kEscape = 1 << 20;

    GameSpec spec_;
    int horizon_cap_;
    std::optional<GameGraph> graph_;
    std::optional<SolveResult> solved_;
    std::optional<BoundedSolver> bounded_;
};

} // namespace

// ----------------------------------------------------------------- facade

StrategyKind parse_strategy_kind(const std::string& name) {
    if (name == "forcing")
        return StrategyKind::ForcingMaker;
    if (name == "dichotomy")
        return StrategyKind::DichotomyMaker;
    if (name == "regular")
        return StrategyKind::RegularPlayMaker;
    if (name == "twophase")
        return StrategyKind::TwoPhaseBreaker;
    if (name == "random")
        return StrategyKind::RandomLegal;
    if (name == "optimal")
        return StrategyKind::Optimal;
    throw InvalidArgument("unknown strategy '" + name +
                          "' (forcing|dichotomy|regular|twophase|random|optimal)");
}

const char* strategy_kind_name(StrategyKind k) {
    switch (k) {
    case StrategyKind::ForcingMaker:
        return "forcing";
    case StrategyKind::DichotomyMaker:
        return "dichotomy";
    case StrategyKind::RegularPlayMaker:
        return "regular";
    case StrategyKind::TwoPhaseBreaker:
        return "twophase";
    case StrategyKind::RandomLegal:
        return "random";
    case StrategyKind::Optimal:
        return "optimal";
    }
    return "?";
}

std::unique_ptr<Strategy> scripted_strategy(StrategyKind kind, const Position& start,
                                            const GameSpec& spec, const StrategyOptions& opts) {
    switch (kind) {
    case StrategyKind::ForcingMaker: {
        require_jumping(spec, "forcing");
        if (auto lay = match_nunchaku(start)) {
            auto st = std::make_unique<ForcingNunchaku>(*lay);
            st->spec_ = spec;
            return st;
        }
        if (auto lay = match_necklace(start)) {
            auto st = std::make_unique<ForcingNecklace>(*lay);
            st->spec_ = spec;
            return st;
        }
        throw FamilyMismatch("forcing plays nunchaku or necklace boards only");
    }
    case StrategyKind::DichotomyMaker: {
        require_jumping(spec, "dichotomy");
        if (auto lay = match_nunchaku(start)) {
            auto st = std::make_unique<DichotomyMaker>(nunchaku_chain(*lay), std::nullopt);
            st->spec_ = spec;
            return st;
        }
        if (auto lay = match_necklace(start)) {
            auto st = necklace_dichotomy(*lay);
            st->spec_ = spec;
            return st;
        }
        throw FamilyMismatch("dichotomy plays nunchaku or necklace boards only");
    }
    case StrategyKind::RegularPlayMaker: {
        require_jumping(spec, "regular");
        if (auto lay = match_biggap4(start)) {
            auto st = std::make_unique<RegularBiggap>(*lay);
            st->spec_ = spec;
            return st;
        }
        if (auto lay = match_bigtheta(start)) {
            auto st = std::make_unique<RegularBigtheta>(*lay);
            st->spec_ = spec;
            return st;
        }
        throw FamilyMismatch("regular play needs a biggap or bigtheta board");
    }
    case StrategyKind::TwoPhaseBreaker: {
        require_jumping(spec, "twophase");
        if (auto lay = match_bigtheta(start))
            return std::make_unique<TwoPhaseBreaker>(*lay, bigtheta(lay->N).canonical_pairing,
                                                     spec);
        throw FamilyMismatch("twophase defends bigtheta boards only");
    }
    case StrategyKind::RandomLegal: {
        auto st = std::make_unique<RandomLegal>(opts.seed);
        st->spec_ = spec;
        return st;
    }
    case StrategyKind::Optimal:
        return std::make_unique<OptimalStrategy>(start, spec, opts);
    }
    throw InvalidArgument("unknown strategy kind");
}

std::string TranscriptEntry::to_string() const {
    return std::to_string(round) + " " + (side == Player::Maker ? "maker" : "breaker") + " " +
           move.to_string() + "  M=" + mask_to_string(maker_after) +
           " B=" + mask_to_string(breaker_after);
}

ArenaResult arena(Strategy& maker, Strategy& breaker, const Position& start,
                  const GameSpec& spec, const ArenaOptions& opts) {
    const int n = start.hypergraph().vertex_count();
    int max_rounds = opts.max_rounds;
    if (max_rounds <= 0)
        max_rounds = 4 * std::max(1, n) *
                     (spec.maker_budget.effective(n) + spec.breaker_budget.effective(n));

    ArenaResult result;
    GameState state{start, Player::Maker};
    if (terminal_status(start) == TerminalStatus::MakerWin) {
        result.verdict = Verdict::MakerWin;
        result.rounds = 0;
        result.final_position = start;
        return result;
    }

    std::unordered_set<StateKey, StateKeyHash> seen;
    seen.insert(make_key(state.position.maker, state.position.breaker, state.to_move));

    auto play_one = [&](Strategy& side, int round) -> bool {
        Move mv;
        try {
            mv = side.next_move(state);
        } catch (const Error& e) {
            throw StrategyInapplicable(side.name() + (" (" +
                                       std::string(player_name(state.to_move)) + ") resigned at round " +
                                       std::to_string(round) + ": ") + e.what());
        }
        if (!is_legal(state, spec, mv))
            throw StrategyInapplicable(side.name() + " (" +
                                       std::string(player_name(state.to_move)) +
                                       ") produced an illegal move '" + mv.to_string() +
                                       "' at round " + std::to_string(round));
        state = apply_move(state, spec, mv);
        result.transcript.push_back({round, opponent(state.to_move), mv, state.position.maker,
                                     state.position.breaker});
        if (terminal_status(state.position) == TerminalStatus::MakerWin) {
            result.verdict = Verdict::MakerWin;
            result.rounds = round;
            return true;
        }
        if (!seen.insert(make_key(state.position.maker, state.position.breaker, state.to_move))
                 .second) {
            result.verdict = Verdict::BreakerSurvives;
            result.rounds = round;
            result.note = "state repeated";
            return true;
        }
        return false;
    };

    for (int round = 1; round <= max_rounds; ++round) {
        if (play_one(maker, round) || play_one(breaker, round)) {
            result.final_position = state.position;
            return result;
        }
    }
    result.verdict = Verdict::BreakerSurvives;
    result.rounds = max_rounds;
    result.note = "round cap reached";
    result.final_position = state.position;
    return result;
}

} // namespace tpg
