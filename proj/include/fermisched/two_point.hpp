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

#ifndef FERMISCHED_TWO_POINT_HPP
#define FERMISCHED_TWO_POINT_HPP

#include <string>
#include <vector>

#include "fermisched/graph.hpp"
#include "fermisched/schedule.hpp"

namespace fermisched {

/// Colour per edge, parallel to `graph.edges()`. Colours are 0..colour_count-1.
struct EdgeColouring {
    Graph graph;
    std::vector<int> colour;
    int colour_count = 0;

    int colour_of(int u, int v) const;
    /// Edges grouped by colour; each group is a matching when the colouring is proper.
    std::vector<std::vector<Edge>> classes() const;
};

/// No two edges sharing a vertex have the same colour, and every edge is coloured.
bool is_proper(const EdgeColouring &c);

/// Round-robin one-factorization of K_n for even n: n - 1 perfect matchings.
///
/// With vertices 1..n and m = n - 1, colour class v (1 <= v <= m) holds {v, n}
/// and the chords {v + l, v - l} (mod m, with residue 0 read as m) for
/// l = 1..n/2 - 1.
EdgeColouring colour_complete(int n);

/// Misra-Gries fan/path recolouring: at most max_degree + 1 colours, edges
/// processed in ascending (u, v) order.
EdgeColouring colour_general(const Graph &g);

/// Alternating-path colouring of a bipartite graph with exactly max_degree
/// colours. Throws std::invalid_argument if the graph is not bipartite.
EdgeColouring colour_bipartite(const Graph &g);

/// Picks the colouring used for schedules: the round-robin construction for
/// complete graphs (odd n embedded into K_{n+1}), the bipartite path for
/// bipartite graphs, Misra-Gries otherwise. `method` receives which one ran.
EdgeColouring colour_for_schedule(const Graph &g, std::string *method = nullptr);

/// One all-number setting followed by an X and a Y setting per colour class.
/// Reconstructs <n_i> for every vertex and <b_i^dag b_j> for every edge i < j.
Schedule two_point_schedule(const Graph &g);

}  // namespace fermisched

#endif
