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

#ifndef FERMISCHED_TILING_HPP
#define FERMISCHED_TILING_HPP

#include <map>
#include <string>
#include <vector>

#include "fermisched/cover.hpp"
#include "fermisched/graph.hpp"
#include "fermisched/schedule.hpp"

namespace fermisched {

/// A small region of lattice sites measured as one block. `modes` is sorted.
struct Tile {
    std::vector<int> modes;
    int colour = 0;
};

/// Tiles grouped into colour classes. Tiles sharing a class are pairwise
/// disjoint, so one local schedule runs on all of them at once.
///
/// Classes by lattice:
///   square      all 2x2 windows, class 2 (r mod 2) + (c mod 2) of the anchor
///   triangular  unit triangles; the two orientations each split into 3 classes by (r + c) mod 3
///   hexagonal   brick-wall hexagons, 3 classes
///   kagome      triangles in one class per orientation plus hexagons around
///               the removed sites in 2 classes; hexagons of a third class
///               are listed in `omitted` and get no settings
struct TileCover {
    Lattice lattice;
    std::vector<Tile> tiles;
    int class_count = 0;
    /// Sites per tile in each class.
    std::vector<int> class_tile_size;
    std::vector<Tile> omitted;

    /// Tile indices per class; empty classes included.
    std::vector<std::vector<int>> classes() const;
};

/// Throws std::invalid_argument when the lattice holds no complete tile.
TileCover tile_lattice(const LatticeSpec &spec);

/// Overlaps inside a class and tiles of the wrong size; empty when sound.
std::vector<std::string> check_tile_cover(const TileCover &cover);

/// Local settings per tile size, modes numbered 0..size-1.
using TileSettings = std::map<int, std::vector<Setting>>;

/// Optimal 3- and 4-mode covers from the exact solver plus the published
/// 76-setting six-mode list.
TileSettings default_tile_settings();

/// Sum over non-empty classes of the per-tile setting count for the class's tile size.
int tiled_setting_count(const TileCover &cover, const std::map<int, int> &per_tile_size);

/// Canonical four-point correlators whose modes lie in one tile (omitted tiles excluded).
std::vector<CorrelatorSpec> tile_correlators(const TileCover &cover);

/// Replicates each class's local settings across all of its tiles and
/// reconstructs every in-tile correlator. Throws std::invalid_argument when
/// the cover is unsound or a tile size has no local settings.
Schedule compose_tiled_schedule(const TileCover &cover, const TileSettings &local);

/// Direct heuristic cover of the in-tile targets on the whole lattice.
Schedule heuristic_lattice_schedule(const TileCover &cover, const HeuristicOptions &options);

}  // namespace fermisched

#endif
