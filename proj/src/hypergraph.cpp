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

#include "tpg/hypergraph.hpp"

#include <algorithm>

namespace tpg {

std::vector<Vertex> to_vertices(Mask m) {
    std::vector<Vertex> out;
    out.reserve(popcount(m));
    for_each_vertex(m, [&](Vertex v) { out.push_back(v); });
    return out;
}

Mask mask_of(const std::vector<Vertex>& vs) {
    Mask m = 0;
    for (Vertex v : vs) {
        if (v < 0 || v >= kMaxVertices)
            throw InvalidArgument("vertex id out of range: " + std::to_string(v));
        m |= bit(v);
    }
    return m;
}

std::string mask_to_string(Mask m) {
    std::string out = "{";
    bool first = true;
    for_each_vertex(m, [&](Vertex v) {
        if (!first)
            out += ",";
        out += std::to_string(v);
        first = false;
    });
    out += "}";
    return out;
}

Hypergraph::Hypergraph(int n, std::vector<Mask> edges) : n_(n) {
    if (n < 0 || n > kMaxVertices)
        throw InvalidArgument("vertex count must be in [0, 64], got " + std::to_string(n));
    const Mask board = all_vertices(n);
    edges_.reserve(edges.size());
    for (Mask e : edges) {
        if (e & ~board)
            throw InvalidArgument("edge contains a vertex id >= vertex count");
        if (std::find(edges_.begin(), edges_.end(), e) == edges_.end())
            edges_.push_back(e);
    }
    slide_adj_.assign(static_cast<size_t>(n), 0);
    for (Mask e : edges_) {
        for_each_vertex(e, [&](Vertex v) { slide_adj_[static_cast<size_t>(v)] |= e & ~bit(v); });
    }
}

Hypergraph::Hypergraph(int n, const std::vector<std::vector<Vertex>>& edges)
    : Hypergraph(n, [&] {
          std::vector<Mask> ms;
          ms.reserve(edges.size());
          for (const auto& e : edges)
              ms.push_back(mask_of(e));
          return ms;
      }()) {}

std::optional<int> Hypergraph::rank() const {
    if (edges_.empty())
        return std::nullopt;
    int r = 0;
    for (Mask e : edges_)
        r = std::max(r, popcount(e));
    return r;
}

std::optional<int> Hypergraph::antirank() const {
    if (edges_.empty())
        return std::nullopt;
    int r = kMaxVertices + 1;
    for (Mask e : edges_)
        r = std::min(r, popcount(e));
    return r;
}

bool Hypergraph::is_uniform(int k) const {
    for (Mask e : edges_)
        if (popcount(e) != k)
            return false;
    return !edges_.empty();
}

Mask Hypergraph::slide_neighbors(Vertex v) const {
    if (v < 0 || v >= n_)
        throw InvalidArgument("vertex id out of range: " + std::to_string(v));
    return slide_adj_[static_cast<size_t>(v)];
}

bool Hypergraph::same_edge_set(const Hypergraph& other) const {
    if (n_ != other.n_ || edges_.size() != other.edges_.size())
        return false;
    std::vector<Mask> a = edges_, b = other.edges_;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

} // namespace tpg
