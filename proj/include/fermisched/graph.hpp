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

#ifndef FERMISCHED_GRAPH_HPP
#define FERMISCHED_GRAPH_HPP

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fermisched {

/// Unordered edge, always stored with `u < v`.
struct Edge {
    int u;
    int v;

    auto operator<=>(const Edge &) const = default;
};

/// Simple undirected graph on vertices 0..vertex_count-1.
///
/// Edges are kept sorted and unique; self-loops are rejected on insertion.
class Graph {
   public:
    Graph() = default;
    explicit Graph(int vertex_count);

    int vertex_count() const {
        return static_cast<int>(adjacency_.size());
    }
    std::size_t edge_count() const {
        return edges_.size();
    }

    /// Adds {u, v}. Returns false if the edge was already present.
    bool add_edge(int u, int v);
    bool has_edge(int u, int v) const;

    std::span<const Edge> edges() const {
        return edges_;
    }
    std::span<const int> neighbours(int v) const {
        return adjacency_.at(v);
    }
    int degree(int v) const {
        return static_cast<int>(adjacency_.at(v).size());
    }

    bool operator==(const Graph &other) const {
        return edges_ == other.edges_ && adjacency_.size() == other.adjacency_.size();
    }

   private:
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adjacency_;
};

Graph complete_graph(int n);

int max_degree(const Graph &g);

/// Two-colours the vertices if possible.
bool is_bipartite(const Graph &g);

/// True iff every pair of distinct vertices is adjacent.
bool is_complete(const Graph &g);

enum class LatticeKind { Square, Triangular, Hexagonal, Kagome };

struct LatticeSpec {
    LatticeKind kind = LatticeKind::Square;
    int rows = 1;
    int cols = 1;
};

struct Point {
    double x;
    double y;
};

/// A finite open-boundary lattice patch.
///
/// `site` holds the (row, col) grid position each vertex was generated from.
/// For the Kagome lattice some grid positions are absent, so vertex numbers
/// are not simply row * cols + col there.
struct Lattice {
    LatticeSpec spec;
    Graph graph;
    std::vector<Point> coordinates;
    std::vector<std::pair<int, int>> site;

    /// Row-major over the rows x cols grid; -1 where no vertex exists.
    std::vector<int> grid;

    /// Vertex id at grid position (row, col), or -1 if there is none.
    int vertex_at(int row, int col) const;
};

/// Nearest-neighbour graph of a lattice patch, vertices numbered row-major.
///
/// Embeddings (unit bond length):
///   square:      (r, c) at (c, r).
///   triangular:  square grid plus the (r, c)-(r+1, c+1) diagonal; (r, c) at
///                (c - r/2, r*sqrt(3)/2).
///   hexagonal:   brick wall; horizontal bonds everywhere, a vertical bond
///                (r, c)-(r+1, c) iff r + c is even. (r, c) sits at
///                (c*sqrt(3)/2, 1.5*r + (r + c even ? 0.5 : 0)).
///   kagome:      the triangular patch with every (odd, odd) site removed.
Lattice build_lattice(const LatticeSpec &spec);

LatticeKind parse_lattice_kind(std::string_view name);
std::string_view lattice_kind_name(LatticeKind kind);

/// Reads "i j" lines with 1-based vertices; '#' starts a comment.
///
/// The vertex count is the largest label seen, or `min_vertices` if larger.
Graph parse_edge_list(std::istream &in, int min_vertices = 0);

void write_edge_list(std::ostream &out, const Graph &g);

}  // namespace fermisched

#endif
