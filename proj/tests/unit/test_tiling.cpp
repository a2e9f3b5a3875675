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

#include "fermisched/fock.hpp"
#include "fermisched/tiling.hpp"

namespace fermisched {
namespace {

const std::map<int, int> kLocalCounts{{3, 7}, {4, 20}, {6, 76}};

void expect_reconstructs(const Schedule &s, int states) {
    std::vector<FockState> psi;
    for (int k = 0; k < states; k++) {
        psi.push_back(random_state(s.n_modes, std::nullopt, 100 + k));
    }
    VerifyReport r = verify_schedule(s, psi);
    EXPECT_TRUE(r.passed()) << (r.failures.empty() ? "" : r.failures.front());
}

TEST(Tiling, ClassesAreDisjointOnLargePatches) {
    for (LatticeKind k : {LatticeKind::Square, LatticeKind::Triangular, LatticeKind::Hexagonal, LatticeKind::Kagome}) {
        TileCover cover = tile_lattice({k, 8, 9});
        EXPECT_TRUE(check_tile_cover(cover).empty()) << lattice_kind_name(k);
    }
}

TEST(Tiling, SettingTotals) {
    const std::pair<LatticeKind, int> expected[] = {
        {LatticeKind::Square, 80}, {LatticeKind::Triangular, 42}, {LatticeKind::Hexagonal, 228}, {LatticeKind::Kagome, 166}};
    for (auto [kind, total] : expected) {
        TileCover cover = tile_lattice({kind, 6, 6});
        EXPECT_EQ(tiled_setting_count(cover, kLocalCounts), total) << lattice_kind_name(kind);
    }
    EXPECT_EQ(tile_lattice({LatticeKind::Kagome, 6, 6}).omitted.size(), 1u);
}

TEST(Tiling, EveryInteriorBondCarriesATile) {
    // Bonds touching the patch boundary may belong only to tiles cut off by it.
    for (LatticeKind k : {LatticeKind::Square, LatticeKind::Triangular, LatticeKind::Hexagonal, LatticeKind::Kagome}) {
        const int rows = 7;
        const int cols = 8;
        TileCover cover = tile_lattice({k, rows, cols});
        auto interior = [&](int v) {
            auto [r, c] = cover.lattice.site[v];
            return r > 0 && c > 0 && r + 1 < rows && c + 1 < cols;
        };
        int checked = 0;
        for (const Edge &e : cover.lattice.graph.edges()) {
            if (!interior(e.u) || !interior(e.v)) {
                continue;
            }
            checked++;
            bool tiled = std::any_of(cover.tiles.begin(), cover.tiles.end(), [&](const Tile &t) {
                return std::count(t.modes.begin(), t.modes.end(), e.u) && std::count(t.modes.begin(), t.modes.end(), e.v);
            });
            EXPECT_TRUE(tiled) << lattice_kind_name(k) << " bond " << e.u << "-" << e.v;
        }
        EXPECT_GT(checked, 0);
    }
}

TEST(Tiling, ComposedSchedulesReconstruct) {
    TileSettings local = default_tile_settings();
    EXPECT_EQ(local.at(3).size(), 7u);
    EXPECT_EQ(local.at(4).size(), 20u);
    EXPECT_EQ(local.at(6).size(), 76u);
    for (LatticeKind k : {LatticeKind::Square, LatticeKind::Triangular, LatticeKind::Kagome}) {
        TileCover cover = tile_lattice({k, 3, 4});
        Schedule s = compose_tiled_schedule(cover, local);
        EXPECT_TRUE(check_schedule(s).empty());
        EXPECT_EQ(static_cast<int>(s.settings.size()), tiled_setting_count(cover, kLocalCounts));
        expect_reconstructs(s, 2);
    }
    TileCover hex = tile_lattice({LatticeKind::Hexagonal, 2, 6});
    expect_reconstructs(compose_tiled_schedule(hex, local), 2);
}

TEST(Tiling, HeuristicCoversTheSameTargets) {
    TileCover cover = tile_lattice({LatticeKind::Square, 4, 4});
    Schedule s = heuristic_lattice_schedule(cover, {4, 1, 1});
    EXPECT_TRUE(check_schedule(s).empty());
    EXPECT_LE(s.settings.size(), 80u);
    EXPECT_EQ(s.reconstruction.size(), tile_correlators(cover).size());
}

TEST(Tiling, TooSmallLatticesThrow) {
    EXPECT_THROW(tile_lattice({LatticeKind::Square, 1, 5}), std::invalid_argument);
    EXPECT_THROW(tile_lattice({LatticeKind::Hexagonal, 2, 2}), std::invalid_argument);
}

}  // namespace
}  // namespace fermisched
