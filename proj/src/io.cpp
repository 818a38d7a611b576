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

#include "tpg/io.hpp"

#include <fstream>
#include <sstream>

namespace tpg {

namespace {

struct Line {
    int number;
    std::string keyword;
    std::vector<long> values;
};

std::vector<Line> tokenize(const std::string& text) {
    std::vector<Line> lines;
    std::istringstream in(text);
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (auto hash = raw.find('#'); hash != std::string::npos)
            raw.erase(hash);
        std::istringstream ls(raw);
        Line line;
        line.number = number;
        if (!(ls >> line.keyword))
            continue;
        long v;
        while (ls >> v)
            line.values.push_back(v);
        std::string trailing;
        if (ls.clear(), ls >> trailing)
            throw ParseError("unexpected token '" + trailing + "'", number);
        lines.push_back(std::move(line));
    }
    return lines;
}

int parse_vertex_count(const Line& line) {
    if (line.values.size() != 1 || line.values[0] < 0 || line.values[0] > kMaxVertices)
        throw ParseError("'vertices' expects one count in [0, 64]", line.number);
    return static_cast<int>(line.values[0]);
}

Mask parse_vertex_set(const Line& line, int n) {
    Mask m = 0;
    for (long v : line.values) {
        if (v < 0 || v >= n)
            throw ParseError("vertex id " + std::to_string(v) + " out of range [0, " +
                                 std::to_string(n) + ")",
                             line.number);
        m |= bit(static_cast<Vertex>(v));
    }
    return m;
}

} // namespace

BoardFile parse_board(const std::string& text) {
    auto lines = tokenize(text);
    int n = -1;
    std::vector<Mask> edges;
    Mask maker = 0, breaker = 0;
    std::vector<std::pair<Vertex, Vertex>> pairs;

    for (const Line& line : lines) {
        if (line.keyword == "vertices") {
            if (n >= 0)
                throw ParseError("duplicate 'vertices' line", line.number);
            n = parse_vertex_count(line);
        } else if (n < 0) {
            throw ParseError("'vertices' must come first", line.number);
        } else if (line.keyword == "edge") {
            edges.push_back(parse_vertex_set(line, n));
        } else if (line.keyword == "maker") {
            maker |= parse_vertex_set(line, n);
        } else if (line.keyword == "breaker") {
            breaker |= parse_vertex_set(line, n);
        } else if (line.keyword == "pair") {
            if (line.values.size() != 2)
                throw ParseError("'pair' expects exactly two vertices", line.number);
            Mask m = parse_vertex_set(line, n);
            if (popcount(m) != 2)
                throw ParseError("'pair' vertices must be distinct", line.number);
            auto vs = to_vertices(m);
            pairs.emplace_back(vs[0], vs[1]);
        } else {
            throw ParseError("unknown keyword '" + line.keyword + "'", line.number);
        }
    }
    if (n < 0)
        throw ParseError("missing 'vertices' line");
    if (maker & breaker)
        throw ParseError("maker and breaker tokens overlap");

    BoardFile out;
    out.position = Position(std::make_shared<Hypergraph>(n, std::move(edges)), maker, breaker);
    if (!pairs.empty())
        out.pairing = Pairing(std::move(pairs));
    return out;
}

std::string format_board(const Position& p, const Pairing* pairing) {
    std::ostringstream out;
    out << "vertices " << p.hypergraph().vertex_count() << "\n";
    for (Mask e : p.hypergraph().edges()) {
        out << "edge";
        for_each_vertex(e, [&](Vertex v) { out << " " << v; });
        out << "\n";
    }
    auto emit_tokens = [&](const char* keyword, Mask m) {
        if (!m)
            return;
        out << keyword;
        for_each_vertex(m, [&](Vertex v) { out << " " << v; });
        out << "\n";
    };
    emit_tokens("maker", p.maker);
    emit_tokens("breaker", p.breaker);
    if (pairing) {
        for (auto [u, v] : pairing->pairs())
            out << "pair " << u << " " << v << "\n";
    }
    return out.str();
}

GraphFile parse_graph(const std::string& text) {
    auto lines = tokenize(text);
    int n = -1;
    std::vector<std::pair<Vertex, Vertex>> edges;
    Mask guards = 0;

    for (const Line& line : lines) {
        if (line.keyword == "vertices") {
            if (n >= 0)
                throw ParseError("duplicate 'vertices' line", line.number);
            n = parse_vertex_count(line);
        } else if (n < 0) {
            throw ParseError("'vertices' must come first", line.number);
        } else if (line.keyword == "edge") {
            if (line.values.size() != 2)
                throw ParseError("'edge' expects exactly two vertices in a graph file",
                                 line.number);
            Mask m = parse_vertex_set(line, n);
            if (popcount(m) != 2)
                throw ParseError("graph edges must join two distinct vertices", line.number);
            auto vs = to_vertices(m);
            edges.emplace_back(vs[0], vs[1]);
        } else if (line.keyword == "guard") {
            guards |= parse_vertex_set(line, n);
        } else {
            throw ParseError("unknown keyword '" + line.keyword + "'", line.number);
        }
    }
    if (n < 0)
        throw ParseError("missing 'vertices' line");
    return GraphFile{Graph(n, edges), GuardConfig{guards}};
}

std::string format_graph(const Graph& g, const GuardConfig& guards) {
    std::ostringstream out;
    out << "vertices " << g.vertex_count() << "\n";
    for (auto [u, v] : g.edges())
        out << "edge " << u << " " << v << "\n";
    if (guards.guards) {
        out << "guard";
        for_each_vertex(guards.guards, [&](Vertex v) { out << " " << v; });
        out << "\n";
    }
    return out.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace tpg
