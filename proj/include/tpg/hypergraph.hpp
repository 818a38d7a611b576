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

#ifndef TPG_HYPERGRAPH_HPP
#define TPG_HYPERGRAPH_HPP

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tpg/errors.hpp"

namespace tpg {

// Vertices are 0-indexed integers; vertex sets are bit masks. The whole
// library is built for desk-scale boards, so 64 vertices is a hard cap.
using Vertex = int;
using Mask = std::uint64_t;

constexpr int kMaxVertices = 64;

constexpr Mask bit(Vertex v) { return Mask{1} << v; }
constexpr bool has(Mask m, Vertex v) { return (m >> v) & 1; }
constexpr int popcount(Mask m) { return std::popcount(m); }

// Full board mask for n vertices (n <= 64).
constexpr Mask all_vertices(int n) {
    return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}

// Iterates the set bits of `m` in ascending order.
template <typename Fn>
void for_each_vertex(Mask m, Fn&& fn) {
    while (m) {
        Vertex v = std::countr_zero(m);
        fn(v);
        m &= m - 1;
    }
}

std::vector<Vertex> to_vertices(Mask m);
Mask mask_of(const std::vector<Vertex>& vs);
std::string mask_to_string(Mask m); // "{0,3,5}"

// A board: vertex count plus an ordered list of edges (vertex sets).
// Exact duplicate edges are dropped at construction, first occurrence kept.
// Superset edges are retained: removing them would change legal slide moves.
class Hypergraph {
  public:
    Hypergraph() = default;
    Hypergraph(int n, std::vector<Mask> edges);
    Hypergraph(int n, const std::vector<std::vector<Vertex>>& edges);

    int vertex_count() const { return n_; }
    const std::vector<Mask>& edges() const { return edges_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    // Largest / smallest edge size; empty when there are no edges.
    std::optional<int> rank() const;
    std::optional<int> antirank() const;
    bool is_uniform(int k) const;

    // Union of (e \ {v}) over all edges e containing v: the legal slide
    // targets from v, ignoring occupancy.
    Mask slide_neighbors(Vertex v) const;

    bool operator==(const Hypergraph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

    // Equality of edge lists as sets, ignoring order.
    bool same_edge_set(const Hypergraph& other) const;

  private:
    int n_ = 0;
    std::vector<Mask> edges_;
    std::vector<Mask> slide_adj_;
};

} // namespace tpg

#endif
