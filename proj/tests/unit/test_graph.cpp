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

#include <gtest/gtest.h>

#include <sstream>

#include "fermisched/graph.hpp"

namespace fermisched {
namespace {

TEST(Graph, AddEdgeIgnoresDuplicatesAndOrientation) {
    Graph g(3);
    EXPECT_TRUE(g.add_edge(2, 0));
    EXPECT_FALSE(g.add_edge(0, 2));
    EXPECT_TRUE(g.add_edge(0, 1));
    EXPECT_EQ(g.edge_count(), 2u);
    EXPECT_TRUE(g.has_edge(2, 0));
    EXPECT_FALSE(g.has_edge(1, 2));
    ASSERT_EQ(g.edges().size(), 2u);
    EXPECT_EQ(g.edges()[0], (Edge{0, 1}));
    EXPECT_EQ(g.edges()[1], (Edge{0, 2}));
    EXPECT_EQ(g.degree(0), 2);
}

TEST(Graph, CompleteGraph) {
    for (int n = 1; n <= 9; n++) {
        Graph g = complete_graph(n);
        EXPECT_EQ(g.edge_count(), static_cast<std::size_t>(n * (n - 1) / 2));
        EXPECT_TRUE(is_complete(g));
        EXPECT_EQ(max_degree(g), n - 1);
        EXPECT_EQ(is_bipartite(g), n <= 2);
    }
}

TEST(Graph, Bipartiteness) {
    Graph even(4);
    Graph odd(5);
    for (int v = 0; v < 4; v++) {
        even.add_edge(v, (v + 1) % 4);
    }
    for (int v = 0; v < 5; v++) {
        odd.add_edge(v, (v + 1) % 5);
    }
    EXPECT_TRUE(is_bipartite(even));
    EXPECT_FALSE(is_bipartite(odd));
}

TEST(Lattice, SquareEdgeCount) {
    Lattice lat = build_lattice({LatticeKind::Square, 5, 6});
    EXPECT_EQ(lat.graph.vertex_count(), 30);
    EXPECT_EQ(lat.graph.edge_count(), 5u * 5 + 4u * 6);
    EXPECT_TRUE(is_bipartite(lat.graph));
    EXPECT_EQ(max_degree(lat.graph), 4);
}

TEST(Lattice, TriangularHasDegreeSix) {
    Lattice lat = build_lattice({LatticeKind::Triangular, 4, 4});
    EXPECT_EQ(lat.graph.edge_count(), 4u * 3 + 3u * 4 + 3u * 3);
    EXPECT_EQ(max_degree(lat.graph), 6);
    EXPECT_FALSE(is_bipartite(lat.graph));
}

TEST(Lattice, HexagonalIsBipartiteWithDegreeThree) {
    Lattice lat = build_lattice({LatticeKind::Hexagonal, 6, 6});
    EXPECT_EQ(max_degree(lat.graph), 3);
    EXPECT_TRUE(is_bipartite(lat.graph));
}

TEST(Lattice, KagomeHolesAndDegree) {
    Lattice lat = build_lattice({LatticeKind::Kagome, 5, 5});
    EXPECT_EQ(lat.graph.vertex_count(), 25 - 4);
    EXPECT_EQ(lat.vertex_at(1, 1), -1);
    EXPECT_EQ(lat.vertex_at(3, 3), -1);
    EXPECT_GE(lat.vertex_at(2, 2), 0);
    EXPECT_EQ(max_degree(lat.graph), 4);
    EXPECT_EQ(lat.vertex_at(-1, 0), -1);
    EXPECT_EQ(lat.vertex_at(0, 5), -1);
}

TEST(Lattice, KindNamesRoundTrip) {
    for (LatticeKind k : {LatticeKind::Square, LatticeKind::Triangular, LatticeKind::Hexagonal, LatticeKind::Kagome}) {
        EXPECT_EQ(parse_lattice_kind(lattice_kind_name(k)), k);
    }
    EXPECT_THROW(parse_lattice_kind("cubic"), std::invalid_argument);
    EXPECT_THROW(build_lattice({LatticeKind::Square, 0, 3}), std::invalid_argument);
}

TEST(EdgeList, RoundTripIsOneBased) {
    std::istringstream in("# path\n1 2\n\n2 3  # tail\n");
    Graph g = parse_edge_list(in);
    EXPECT_EQ(g.vertex_count(), 3);
    EXPECT_TRUE(g.has_edge(0, 1));
    EXPECT_TRUE(g.has_edge(1, 2));
    std::ostringstream out;
    write_edge_list(out, g);
    EXPECT_EQ(out.str(), "1 2\n2 3\n");
    std::istringstream padded("1 2\n");
    EXPECT_EQ(parse_edge_list(padded, 5).vertex_count(), 5);
}

TEST(EdgeList, RejectsMalformedLines) {
    for (const char *text : {"1\n", "1 2 3\n", "0 1\n", "2 2\n", "a b\n"}) {
        std::istringstream in(text);
        EXPECT_THROW(parse_edge_list(in), std::invalid_argument) << text;
    }
}

}  // namespace
}  // namespace fermisched
