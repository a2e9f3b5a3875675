// Copyright 2026 The fermisched Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fermisched/graph.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace fermisched {

Graph::Graph(int vertex_count) {
    if (vertex_count < 0) {
        throw std::invalid_argument("vertex count must be non-negative");
    }
    adjacency_.resize(vertex_count);
}

bool Graph::add_edge(int u, int v) {
    int n = vertex_count();
    if (u < 0 || v < 0 || u >= n || v >= n) {
        throw std::out_of_range("edge endpoint out of range");
    }
    if (u == v) {
        throw std::invalid_argument("self-loops are not allowed (vertex " + std::to_string(u + 1) + ")");
    }
    if (u > v) {
        std::swap(u, v);
    }
    Edge e{u, v};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it != edges_.end() && *it == e) {
        return false;
    }
    edges_.insert(it, e);
    auto &au = adjacency_[u];
    au.insert(std::lower_bound(au.begin(), au.end(), v), v);
    auto &av = adjacency_[v];
    av.insert(std::lower_bound(av.begin(), av.end(), u), u);
    return true;
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count() || u == v) {
        return false;
    }
    const auto &au = adjacency_[u];
    return std::binary_search(au.begin(), au.end(), v);
}

Graph complete_graph(int n) {
    if (n < 1) {
        throw std::invalid_argument("complete graph needs at least one vertex");
    }
    Graph g(n);
    for (int u = 0; u < n; u++) {
        for (int v = u + 1; v < n; v++) {
            g.add_edge(u, v);
        }
    }
    return g;
}

int max_degree(const Graph &g) {
    int best = 0;
    for (int v = 0; v < g.vertex_count(); v++) {
        best = std::max(best, g.degree(v));
    }
    return best;
}

bool is_bipartite(const Graph &g) {
    std::vector<int> side(g.vertex_count(), -1);
    for (int s = 0; s < g.vertex_count(); s++) {
        if (side[s] != -1) {
            continue;
        }
        side[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int w : g.neighbours(u)) {
                if (side[w] == -1) {
                    side[w] = 1 - side[u];
                    q.push(w);
                } else if (side[w] == side[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool is_complete(const Graph &g) {
    auto n = static_cast<std::size_t>(g.vertex_count());
    return g.edge_count() == n * (n - (n > 0 ? 1 : 0)) / 2;
}

int Lattice::vertex_at(int row, int col) const {
    if (row < 0 || col < 0 || row >= spec.rows || col >= spec.cols) {
        return -1;
    }
    return grid[static_cast<std::size_t>(row) * spec.cols + col];
}

namespace {

bool kagome_hole(int r, int c) {
    return (r % 2 == 1) && (c % 2 == 1);
}

bool site_present(LatticeKind kind, int r, int c) {
    return kind != LatticeKind::Kagome || !kagome_hole(r, c);
}

Point site_position(LatticeKind kind, int r, int c) {
    const double h = std::sqrt(3.0) / 2.0;
    switch (kind) {
        case LatticeKind::Square:
            return {static_cast<double>(c), static_cast<double>(r)};
        case LatticeKind::Triangular:
        case LatticeKind::Kagome:
            return {c - 0.5 * r, r * h};
        case LatticeKind::Hexagonal:
            return {c * h, 1.5 * r + ((r + c) % 2 == 0 ? 0.5 : 0.0)};
    }
    return {0, 0};
}

// Bond directions towards later sites; each lattice lists only forward bonds.
std::vector<std::pair<int, int>> forward_bonds(LatticeKind kind, int r, int c) {
    switch (kind) {
        case LatticeKind::Square:
            return {{r, c + 1}, {r + 1, c}};
        case LatticeKind::Triangular:
        case LatticeKind::Kagome:
            return {{r, c + 1}, {r + 1, c}, {r + 1, c + 1}};
        case LatticeKind::Hexagonal:
            if ((r + c) % 2 == 0) {
                return {{r, c + 1}, {r + 1, c}};
            }
            return {{r, c + 1}};
    }
    return {};
}

}  // namespace

Lattice build_lattice(const LatticeSpec &spec) {
    if (spec.rows < 1 || spec.cols < 1) {
        throw std::invalid_argument("lattice rows and cols must be positive");
    }
    Lattice lat;
    lat.spec = spec;
    lat.grid.assign(static_cast<std::size_t>(spec.rows) * spec.cols, -1);
    int next = 0;
    for (int r = 0; r < spec.rows; r++) {
        for (int c = 0; c < spec.cols; c++) {
            if (site_present(spec.kind, r, c)) {
                lat.grid[static_cast<std::size_t>(r) * spec.cols + c] = next++;
                lat.coordinates.push_back(site_position(spec.kind, r, c));
                lat.site.emplace_back(r, c);
            }
        }
    }
    lat.graph = Graph(next);
    for (int r = 0; r < spec.rows; r++) {
        for (int c = 0; c < spec.cols; c++) {
            int u = lat.vertex_at(r, c);
            if (u < 0) {
                continue;
            }
            for (auto [r2, c2] : forward_bonds(spec.kind, r, c)) {
                int v = lat.vertex_at(r2, c2);
                if (v >= 0) {
                    lat.graph.add_edge(u, v);
                }
            }
        }
    }
    return lat;
}

LatticeKind parse_lattice_kind(std::string_view name) {
    if (name == "square") {
        return LatticeKind::Square;
    }
    if (name == "triangular") {
        return LatticeKind::Triangular;
    }
    if (name == "hexagonal") {
        return LatticeKind::Hexagonal;
    }
    if (name == "kagome") {
        return LatticeKind::Kagome;
    }
    throw std::invalid_argument("unknown lattice kind '" + std::string(name) + "'");
}

std::string_view lattice_kind_name(LatticeKind kind) {
    switch (kind) {
        case LatticeKind::Square:
            return "square";
        case LatticeKind::Triangular:
            return "triangular";
        case LatticeKind::Hexagonal:
            return "hexagonal";
        case LatticeKind::Kagome:
            return "kagome";
    }
    return "?";
}

Graph parse_edge_list(std::istream &in, int min_vertices) {
    std::vector<std::pair<int, int>> pairs;
    int n = min_vertices;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        line_no++;
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line.resize(hash);
        }
        std::istringstream ss(line);
        int a, b;
        if (!(ss >> a)) {
            if (line.find_first_not_of(" \t\r") != std::string::npos) {
                throw std::invalid_argument("edge list line " + std::to_string(line_no) + ": expected 'i j'");
            }
            continue;
        }
        std::string rest;
        if (!(ss >> b) || (ss >> rest)) {
            throw std::invalid_argument("edge list line " + std::to_string(line_no) + ": expected 'i j'");
        }
        if (a < 1 || b < 1) {
            throw std::invalid_argument("edge list line " + std::to_string(line_no) + ": labels are 1-based");
        }
        if (a == b) {
            throw std::invalid_argument("edge list line " + std::to_string(line_no) + ": self-loop on " +
                                        std::to_string(a));
        }
        pairs.emplace_back(a - 1, b - 1);
        n = std::max({n, a, b});
    }
    Graph g(n);
    for (auto [a, b] : pairs) {
        g.add_edge(a, b);
    }
    return g;
}

void write_edge_list(std::ostream &out, const Graph &g) {
    for (const Edge &e : g.edges()) {
        out << e.u + 1 << ' ' << e.v + 1 << '\n';
    }
}

}  // namespace fermisched
