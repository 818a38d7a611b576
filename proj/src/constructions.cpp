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

#include "tpg/constructions.hpp"

#include <algorithm>
#include <numeric>

namespace tpg {

namespace {

std::shared_ptr<Hypergraph> own(Hypergraph h) {
    return std::make_shared<Hypergraph>(std::move(h));
}

// All k-subsets of [0, n) in lexicographic order.
template <typename Fn>
void for_each_subset(int n, int k, Fn&& fn) {
    if (k == 0) {
        fn(Mask{0});
        return;
    }
    if (k > n)
        return;
    std::vector<int> idx(static_cast<size_t>(k));
    std::iota(idx.begin(), idx.end(), 0);
    for (;;) {
        Mask m = 0;
        for (int v : idx)
            m |= bit(v);
        fn(m);
        int i = k - 1;
        while (i >= 0 && idx[static_cast<size_t>(i)] == n - k + i)
            --i;
        if (i < 0)
            return;
        ++idx[static_cast<size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
    }
}

} // namespace

Position nunchaku(int length) {
    if (length < 1)
        throw InvalidArgument("nunchaku length must be >= 1");
    NunchakuLayout lay{length};
    const int n = 2 * length + 1;
    std::vector<Mask> edges;
    for (int i = 1; i <= length; ++i)
        edges.push_back(bit(lay.a(i - 1)) | bit(lay.b(i)) | bit(lay.a(i)));
    return Position(own(Hypergraph(n, std::move(edges))),
                    bit(lay.a(0)) | bit(lay.a(length)), 0);
}

std::optional<NunchakuLayout> match_nunchaku(const Position& p) {
    const int n = p.hypergraph().vertex_count();
    if (n < 3 || n % 2 == 0)
        return std::nullopt;
    const int length = (n - 1) / 2;
    Position canon = nunchaku(length);
    if (p.hypergraph().same_edge_set(canon.hypergraph()) && p.maker == canon.maker &&
        p.breaker == 0)
        return NunchakuLayout{length};
    return std::nullopt;
}

Position necklace(int length) {
    if (length < 2)
        throw InvalidArgument("necklace length must be >= 2");
    NecklaceLayout lay{length};
    const int n = 2 * length;
    std::vector<Mask> edges;
    for (int i = 1; i <= length - 1; ++i)
        edges.push_back(bit(lay.a(i)) | bit(lay.b(i)) | bit(lay.a(i + 1)));
    edges.push_back(bit(lay.a(length)) | bit(lay.b(length)) | bit(lay.a(1)));
    return Position(own(Hypergraph(n, std::move(edges))), bit(lay.a(1)), 0);
}

std::optional<NecklaceLayout> match_necklace(const Position& p) {
    const int n = p.hypergraph().vertex_count();
    if (n < 4 || n % 2 != 0)
        return std::nullopt;
    const int length = n / 2;
    Position canon = necklace(length);
    if (p.hypergraph().same_edge_set(canon.hypergraph()) && p.maker == canon.maker &&
        p.breaker == 0)
        return NecklaceLayout{length};
    return std::nullopt;
}

Hypergraph diamond_nunchaku(int n) {
    if (n < 9)
        throw InvalidArgument("diamond nunchaku needs at least 9 vertices");
    const int core = n % 2 == 1 ? n : n - 1; // even n pads one isolated vertex
    const int length = (core - 7) / 2;
    auto a = [&](int i) { return i; };
    auto b = [&](int i) { return length + i; };
    const Vertex x0 = 2 * length + 1, p0 = 2 * length + 2, q0 = 2 * length + 3;
    const Vertex x1 = 2 * length + 4, p1 = 2 * length + 5, q1 = 2 * length + 6;

    std::vector<Mask> edges;
    for (int i = 1; i <= length; ++i)
        edges.push_back(bit(a(i - 1)) | bit(b(i)) | bit(a(i)));
    edges.push_back(bit(a(0)) | bit(x0) | bit(p0));
    edges.push_back(bit(a(0)) | bit(x0) | bit(q0));
    edges.push_back(bit(a(length)) | bit(x1) | bit(p1));
    edges.push_back(bit(a(length)) | bit(x1) | bit(q1));
    return Hypergraph(n, std::move(edges));
}

Hypergraph k_vs_1(int k) {
    if (k < 1)
        throw InvalidArgument("k must be >= 1");
    const int half = k / 2;
    auto u = [&](int j) { return j - 1; }; // u_1..u_k
    int next = k;

    std::vector<Mask> edges;
    Mask core = 0;
    for (int j = 1; j <= k; ++j)
        core |= bit(u(j));
    edges.push_back(core);
    for (int i = 1; i <= half; ++i) {
        const int fresh = k - 1 - 2 * (half - i);
        Mask e = 0;
        for (int t = 0; t < fresh; ++t)
            e |= bit(next++);
        for (int j = k - 2 * (half - i); j <= k; ++j)
            e |= bit(u(j));
        edges.push_back(e);
    }
    return Hypergraph(next, std::move(edges));
}

Hypergraph lift_plus_one(const Hypergraph& h) {
    auto lo = h.antirank(), hi = h.rank();
    if (!lo || *lo != *hi)
        throw InvalidArgument("lift requires a uniform hypergraph");
    const int k = *lo;
    const int n = h.vertex_count();
    if (n + 2 > kMaxVertices)
        throw ScaleLimit("lift exceeds the vertex cap");

    const Vertex v = n, vbar = n + 1;
    std::vector<Mask> edges;
    for (Mask e : h.edges())
        edges.push_back(e | bit(v));
    for_each_subset(n, k - 1, [&](Mask u_set) {
        if (edges.size() > 1'000'000)
            throw ScaleLimit("lift generates too many edges");
        edges.push_back(u_set | bit(v) | bit(vbar));
    });
    return Hypergraph(n + 2, std::move(edges));
}

namespace {

// The odd-n 4-uniform core; `total` >= core size, extra vertices isolated.
Hypergraph biggap4_core(int core_n, int total) {
    const int L = (core_n - 3) / 2;
    BiggapLayout lay{total, L, {}};
    // u_1..u_5 alias the first five of a_3, ..., a_{L+1}, b_1, ..., b_L
    std::vector<Vertex> pool;
    for (int i = 3; i <= L + 1; ++i)
        pool.push_back(lay.a(i));
    for (int i = 1; i <= L; ++i)
        pool.push_back(lay.b(i));
    for (int j = 0; j < 5; ++j)
        lay.u[static_cast<size_t>(j)] = pool[static_cast<size_t>(j)];

    std::vector<Mask> edges;
    for (int i = 1; i <= L - 1; ++i)
        edges.push_back(bit(lay.a(i)) | bit(lay.a(i + 1)) | bit(lay.a(i + 2)) | bit(lay.b(i)));
    edges.push_back(bit(lay.a(L)) | bit(lay.a(L + 1)) | bit(lay.a(1)) | bit(lay.b(L)));
    for (int i = 1; i <= 2; ++i)
        for (int j = 0; j < 5; ++j)
            for (int jp = j + 1; jp < 5; ++jp)
                edges.push_back(bit(lay.a(i)) | bit(lay.abar(i)) | bit(lay.u[static_cast<size_t>(j)]) |
                                bit(lay.u[static_cast<size_t>(jp)]));
    return Hypergraph(total, std::move(edges));
}

} // namespace

Hypergraph biggap(int k, int n) {
    if (k < 4)
        throw InvalidArgument("biggap requires k >= 4");
    if (n < 2 * k + 1)
        throw InvalidArgument("biggap requires n >= 2k+1");
    if (k == 4) {
        const int core = n % 2 == 1 ? n : n - 1;
        return biggap4_core(core, n);
    }
    // Lift the 4-uniform base k-4 times; parity padding happens at the end.
    int base = n - 2 * (k - 4);
    const bool pad = base % 2 == 0;
    if (pad)
        --base;
    Hypergraph h = biggap4_core(base, base);
    for (int i = 4; i < k; ++i)
        h = lift_plus_one(h);
    if (!pad)
        return h;
    return Hypergraph(n, h.edges());
}

std::optional<BiggapLayout> match_biggap4(const Position& p) {
    const int n = p.hypergraph().vertex_count();
    if (n < 9 || p.maker || p.breaker)
        return std::nullopt;
    const int core = n % 2 == 1 ? n : n - 1;
    Hypergraph canon = biggap4_core(core, n);
    if (!p.hypergraph().same_edge_set(canon))
        return std::nullopt;
    const int L = (core - 3) / 2;
    BiggapLayout lay{n, L, {}};
    std::vector<Vertex> pool;
    for (int i = 3; i <= L + 1; ++i)
        pool.push_back(lay.a(i));
    for (int i = 1; i <= L; ++i)
        pool.push_back(lay.b(i));
    for (int j = 0; j < 5; ++j)
        lay.u[static_cast<size_t>(j)] = pool[static_cast<size_t>(j)];
    return lay;
}

BigthetaBoard bigtheta(int N) {
    if (N < 2)
        throw InvalidArgument("bigtheta requires N >= 2");
    BigthetaLayout lay{N};
    const int n = 6 * N + 8;
    if (n > kMaxVertices)
        throw ScaleLimit("bigtheta exceeds the vertex cap");

    std::vector<Mask> edges;
    for (int i = 1; i <= 2 * N; ++i) {
        const Vertex ci = i <= N ? lay.c(i) : lay.c(i - N);
        edges.push_back(bit(lay.a(i - 1)) | bit(lay.a(i)) | bit(lay.b(i)) | bit(ci));
    }
    std::vector<std::pair<Vertex, Vertex>> guarded;
    guarded.emplace_back(lay.a(0), lay.abar0());
    guarded.emplace_back(lay.a(2 * N), lay.abar2N());
    for (int i = 1; i <= N; ++i)
        guarded.emplace_back(lay.c(i), lay.cbar(i));
    for (auto [v, vbar] : guarded)
        for (int j = 1; j <= 5; ++j)
            for (int jp = j + 1; jp <= 5; ++jp)
                edges.push_back(bit(v) | bit(vbar) | bit(lay.u(j)) | bit(lay.u(jp)));

    Pairing pi;
    for (auto [v, vbar] : guarded)
        pi.add(v, vbar);
    for (int i = 1; i <= N - 1; ++i)
        pi.add(lay.a(i), lay.b(i));
    for (int i = N; i <= 2 * N - 1; ++i)
        pi.add(lay.a(i), lay.b(i + 1));

    return BigthetaBoard{Hypergraph(n, std::move(edges)), std::move(pi), lay};
}

std::optional<BigthetaLayout> match_bigtheta(const Position& p) {
    const int n = p.hypergraph().vertex_count();
    if (p.maker || p.breaker || n < 20 || (n - 8) % 6 != 0)
        return std::nullopt;
    const int N = (n - 8) / 6;
    BigthetaBoard canon = bigtheta(N);
    if (!p.hypergraph().same_edge_set(canon.hypergraph))
        return std::nullopt;
    return canon.layout;
}

Player two_uniform_outcome(const Hypergraph& h, Budget a, Budget b) {
    for (Mask e : h.edges())
        if (popcount(e) != 2)
            throw InvalidArgument("two_uniform_outcome requires rank exactly 2");
    if (!a.is_unlimited() && a.count() < 2)
        throw InvalidArgument("two_uniform_outcome requires a >= 2");

    bool disjoint = true;
    Mask seen = 0;
    for (Mask e : h.edges()) {
        if (seen & e) {
            disjoint = false;
            break;
        }
        seen |= e;
    }
    if (!disjoint)
        return Player::Maker;
    const long long m = h.edge_count();
    const long long needed = a.is_unlimited() ? m : std::min<long long>(a.count(), m);
    const bool breaker_covers = b.is_unlimited() || b.count() >= needed;
    return breaker_covers ? Player::Breaker : Player::Maker;
}

} // namespace tpg
