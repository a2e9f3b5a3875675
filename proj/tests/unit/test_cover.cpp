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

#include <set>

#include "fermisched/cover.hpp"
#include "fermisched/fock.hpp"

namespace fermisched {
namespace {

TargetGraph full_target(int n) {
    auto specs = enumerate_canonical_fourpoint(n);
    return build_target_graph(n, specs);
}

TEST(MeasurementGraph, IndexingRoundTrip) {
    for (int n = 2; n <= 7; n++) {
        MeasurementGraph gm(n);
        EXPECT_EQ(gm.vertex_count(), n * n);
        for (int v = 0; v < gm.vertex_count(); v++) {
            EXPECT_EQ(gm.index_of(gm.observable_at(v)), v);
        }
    }
    EXPECT_THROW(MeasurementGraph(1), std::invalid_argument);
}

TEST(MeasurementGraph, AdjacencyIsCompatibility) {
    MeasurementGraph gm(5);
    std::size_t edges = 0;
    for (int u = 0; u < gm.vertex_count(); u++) {
        for (int v = u + 1; v < gm.vertex_count(); v++) {
            bool expected = compatible(gm.observable_at(u), gm.observable_at(v));
            EXPECT_EQ(gm.adjacent(u, v), expected);
            EXPECT_EQ(gm.adjacent(v, u), expected);
            edges += expected;
        }
    }
    EXPECT_EQ(gm.edge_count(), edges);
    EXPECT_EQ(gm.as_graph().edge_count(), edges);
}

TEST(MeasurementGraph, MaximalCliquesAreSettings) {
    const std::size_t expected[] = {3, 7, 25, 81, 331};
    for (int n = 2; n <= 6; n++) {
        MeasurementGraph gm(n);
        auto settings = enumerate_settings(gm);
        EXPECT_EQ(settings.size(), expected[n - 2]) << n;
        if (n <= 5) {
            std::vector<Bits> adj;
            for (int v = 0; v < gm.vertex_count(); v++) {
                adj.push_back(gm.neighbours(v));
            }
            std::set<Bits> bk;
            for (auto &c : bron_kerbosch(adj)) {
                bk.insert(c);
            }
            std::set<Bits> mine;
            for (const auto &s : settings) {
                mine.insert(gm.vertex_set(s));
            }
            EXPECT_EQ(bk, mine) << n;
        }
    }
}

TEST(TargetGraph, EdgeCounts) {
    const std::size_t expected[] = {1, 9, 38, 110, 255, 511};
    for (int n = 2; n <= 7; n++) {
        EXPECT_EQ(full_target(n).graph.edge_count(), expected[n - 2]) << n;
    }
    std::vector<CorrelatorSpec> bad{{CorrelatorKind::BBBB, {0, 1, 2, 3}, 1, false}};
    EXPECT_THROW(build_target_graph(3, bad), std::invalid_argument);
}

TEST(ExactCover, SmallOptima) {
    const int expected[] = {1, 7, 20};
    for (int n = 2; n <= 4; n++) {
        MeasurementGraph gm(n);
        TargetGraph gt = full_target(n);
        CoverSolution s = exact_cover(gm, gt);
        EXPECT_EQ(s.status, CoverStatus::Optimal);
        EXPECT_EQ(static_cast<int>(s.settings.size()), expected[n - 2]);
        EXPECT_EQ(s.lower_bound, expected[n - 2]);
        EXPECT_TRUE(validate_cover(gm, gt, s.settings).valid());
        ASSERT_EQ(s.edge_assignment.size(), gt.graph.edge_count());
    }
}

TEST(ExactCover, EdgeAssignmentPointsAtCoveringSettings) {
    MeasurementGraph gm(4);
    TargetGraph gt = full_target(4);
    CoverSolution s = exact_cover(gm, gt);
    auto edges = gt.graph.edges();
    for (std::size_t e = 0; e < edges.size(); e++) {
        Bits members = gm.vertex_set(s.settings.at(s.edge_assignment[e]));
        EXPECT_TRUE(members.test(edges[e].u) && members.test(edges[e].v));
    }
}

TEST(HeuristicCover, ValidAndDeterministic) {
    MeasurementGraph gm(5);
    TargetGraph gt = full_target(5);
    HeuristicOptions opts{8, 42, 1};
    CoverSolution a = heuristic_cover(gm, gt, opts);
    CoverSolution b = heuristic_cover(gm, gt, opts);
    EXPECT_TRUE(validate_cover(gm, gt, a.settings).valid());
    EXPECT_EQ(a.settings, b.settings);
    EXPECT_EQ(a.status, CoverStatus::Heuristic);
    EXPECT_GE(static_cast<int>(a.settings.size()), lower_bound(gm, gt));
    opts.threads = 3;
    EXPECT_EQ(heuristic_cover(gm, gt, opts).settings, a.settings);
}

TEST(LowerBound, KnownValues) {
    const int expected[] = {1, 7, 20, 51};
    for (int n = 2; n <= 5; n++) {
        MeasurementGraph gm(n);
        EXPECT_EQ(lower_bound(gm, full_target(n)), expected[n - 2]) << n;
    }
}

TEST(Validation, ReportsNonCliquesAndGaps) {
    MeasurementGraph gm(3);
    TargetGraph gt = full_target(3);
    CoverSolution s = exact_cover(gm, gt);
    auto missing = s.settings;
    missing.pop_back();
    EXPECT_FALSE(validate_cover(gm, gt, missing).uncovered.empty());
    std::vector<std::vector<Observable>> raw{
        {Observable::number(0), Observable::pair(ObsKind::X, 0, 1)}};
    CoverReport r = validate_cover(gm, gt, raw);
    EXPECT_EQ(r.non_cliques.size(), 1u);
    EXPECT_FALSE(r.valid());
}

TEST(FourPointSchedule, ExactSchedulesReconstruct) {
    for (int n = 2; n <= 4; n++) {
        Schedule s = four_point_schedule(n);
        EXPECT_TRUE(check_schedule(s).empty());
        EXPECT_EQ(s.metadata.status, "optimal");
        std::vector<FockState> states;
        for (std::uint64_t seed = 0; seed < 4; seed++) {
            states.push_back(random_state(n, std::nullopt, seed));
        }
        VerifyReport r = verify_schedule(s, states);
        EXPECT_TRUE(r.passed()) << n;
    }
}

}  // namespace
}  // namespace fermisched
