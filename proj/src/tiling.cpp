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

#include "fermisched/tiling.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "fermisched/reference_settings.hpp"

namespace fermisched {

namespace {

// Adds the tile if every listed site exists.
bool add_tile(const Lattice &lat, std::vector<Tile> &out, std::initializer_list<std::pair<int, int>> sites,
              int colour) {
    Tile t;
    t.colour = colour;
    for (auto [r, c] : sites) {
        int v = lat.vertex_at(r, c);
        if (v < 0) {
            return false;
        }
        t.modes.push_back(v);
    }
    std::sort(t.modes.begin(), t.modes.end());
    out.push_back(std::move(t));
    return true;
}

}  // namespace

std::vector<std::vector<int>> TileCover::classes() const {
    std::vector<std::vector<int>> out(class_count);
    for (std::size_t k = 0; k < tiles.size(); k++) {
        out.at(tiles[k].colour).push_back(static_cast<int>(k));
    }
    return out;
}

TileCover tile_lattice(const LatticeSpec &spec) {
    TileCover cover;
    cover.lattice = build_lattice(spec);
    const Lattice &lat = cover.lattice;
    auto &tiles = cover.tiles;
    const int rows = spec.rows;
    const int cols = spec.cols;

    switch (spec.kind) {
        case LatticeKind::Square:
            cover.class_count = 4;
            cover.class_tile_size = {4, 4, 4, 4};
            for (int r = 0; r + 1 < rows; r++) {
                for (int c = 0; c + 1 < cols; c++) {
                    add_tile(lat, tiles, {{r, c}, {r, c + 1}, {r + 1, c}, {r + 1, c + 1}}, 2 * (r % 2) + c % 2);
                }
            }
            break;
        case LatticeKind::Triangular:
            cover.class_count = 6;
            cover.class_tile_size = {3, 3, 3, 3, 3, 3};
            for (int r = 0; r + 1 < rows; r++) {
                for (int c = 0; c + 1 < cols; c++) {
                    add_tile(lat, tiles, {{r, c}, {r, c + 1}, {r + 1, c + 1}}, (r + c) % 3);
                    add_tile(lat, tiles, {{r, c}, {r + 1, c}, {r + 1, c + 1}}, 3 + (r + c) % 3);
                }
            }
            break;
        case LatticeKind::Hexagonal:
            cover.class_count = 3;
            cover.class_tile_size = {6, 6, 6};
            // A hexagon is two stacked three-site rows joined by the vertical
            // bonds at both ends; anchors need r + c even.
            for (int r = 0; r + 1 < rows; r++) {
                for (int c = (r % 2); c + 2 < cols; c += 2) {
                    add_tile(lat, tiles, {{r, c}, {r, c + 1}, {r, c + 2}, {r + 1, c}, {r + 1, c + 1}, {r + 1, c + 2}},
                             ((c + 3 * r) / 2) % 3);
                }
            }
            break;
        case LatticeKind::Kagome:
            cover.class_count = 4;
            cover.class_tile_size = {3, 3, 6, 6};
            for (int r = 0; r + 1 < rows; r++) {
                for (int c = 0; c + 1 < cols; c++) {
                    add_tile(lat, tiles, {{r, c}, {r, c + 1}, {r + 1, c + 1}}, 0);
                    add_tile(lat, tiles, {{r, c}, {r + 1, c}, {r + 1, c + 1}}, 1);
                }
            }
            // Hexagons surround the removed (odd, odd) sites. Neighbouring
            // hexagons share a site, so they need three colours.
            for (int r = 1; r + 1 < rows; r += 2) {
                for (int c = 1; c + 1 < cols; c += 2) {
                    int colour = ((r - 1) / 2 + (c - 1) / 2) % 3;
                    auto &dest = colour == 2 ? cover.omitted : tiles;
                    add_tile(lat, dest,
                             {{r, c - 1}, {r, c + 1}, {r - 1, c}, {r + 1, c}, {r - 1, c - 1}, {r + 1, c + 1}},
                             colour == 2 ? -1 : 2 + colour);
                }
            }
            break;
    }
    if (tiles.empty()) {
        throw std::invalid_argument(std::string(lattice_kind_name(spec.kind)) + " lattice " +
                                    std::to_string(rows) + "x" + std::to_string(cols) +
                                    " is too small to hold a tile");
    }
    return cover;
}

std::vector<std::string> check_tile_cover(const TileCover &cover) {
    std::vector<std::string> problems;
    auto classes = cover.classes();
    for (int k = 0; k < cover.class_count; k++) {
        std::set<int> used;
        for (int t : classes[k]) {
            const Tile &tile = cover.tiles[t];
            if (static_cast<int>(tile.modes.size()) != cover.class_tile_size.at(k)) {
                problems.push_back("tile " + std::to_string(t) + " has the wrong size for class " + std::to_string(k));
            }
            for (int m : tile.modes) {
                if (!used.insert(m).second) {
                    problems.push_back("class " + std::to_string(k) + " uses site " + std::to_string(m + 1) +
                                       " twice");
                }
            }
        }
    }
    return problems;
}

TileSettings default_tile_settings() {
    TileSettings out;
    for (int n : {3, 4}) {
        MeasurementGraph gm(n);
        auto specs = enumerate_canonical_fourpoint(n);
        out[n] = exact_cover(gm, build_target_graph(n, specs)).settings;
    }
    out[6] = reference_settings(6);
    return out;
}

int tiled_setting_count(const TileCover &cover, const std::map<int, int> &per_tile_size) {
    int total = 0;
    auto classes = cover.classes();
    for (int k = 0; k < cover.class_count; k++) {
        if (!classes[k].empty()) {
            total += per_tile_size.at(cover.class_tile_size[k]);
        }
    }
    return total;
}

std::vector<CorrelatorSpec> tile_correlators(const TileCover &cover) {
    std::vector<CorrelatorSpec> out;
    std::map<int, std::vector<CorrelatorSpec>> local;
    for (const Tile &tile : cover.tiles) {
        const int k = static_cast<int>(tile.modes.size());
        if (!local.count(k)) {
            local[k] = enumerate_canonical_fourpoint(k);
        }
        // Tile modes are sorted, so relabelling keeps specs canonical.
        for (CorrelatorSpec spec : local[k]) {
            for (int a = 0; a < spec.arity(); a++) {
                spec.idx[a] = tile.modes[spec.idx[a]];
            }
            out.push_back(spec);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Schedule compose_tiled_schedule(const TileCover &cover, const TileSettings &local) {
    auto problems = check_tile_cover(cover);
    if (!problems.empty()) {
        throw std::invalid_argument("unsound tile cover: " + problems.front());
    }
    const int n = cover.lattice.graph.vertex_count();
    std::vector<Setting> settings;
    auto classes = cover.classes();
    for (int k = 0; k < cover.class_count; k++) {
        if (classes[k].empty()) {
            continue;
        }
        auto it = local.find(cover.class_tile_size[k]);
        if (it == local.end()) {
            throw std::invalid_argument("no local settings for tiles of size " +
                                        std::to_string(cover.class_tile_size[k]));
        }
        for (const Setting &ls : it->second) {
            Setting global;
            for (int t : classes[k]) {
                const auto &modes = cover.tiles[t].modes;
                for (const Rotation &r : ls.rotations) {
                    global.rotations.push_back({modes.at(r.i), modes.at(r.j), r.basis});
                }
            }
            std::sort(global.rotations.begin(), global.rotations.end());
            settings.push_back(std::move(global));
        }
    }
    auto specs = tile_correlators(cover);
    Schedule s = schedule_from_settings(n, std::move(settings), specs);
    s.metadata.method = "tiling";
    s.metadata.set_count("tiles", static_cast<long long>(cover.tiles.size()));
    s.metadata.set_count("classes", static_cast<long long>(std::count_if(classes.begin(), classes.end(), [](const auto &c) {
                             return !c.empty();
                         })));
    s.metadata.set_count("omitted_tiles", static_cast<long long>(cover.omitted.size()));
    return s;
}

Schedule heuristic_lattice_schedule(const TileCover &cover, const HeuristicOptions &options) {
    const int n = cover.lattice.graph.vertex_count();
    auto specs = tile_correlators(cover);
    MeasurementGraph gm(n);
    TargetGraph gt = build_target_graph(n, specs);
    CoverSolution solution = heuristic_cover(gm, gt, options);
    Schedule s = schedule_from_settings(n, std::move(solution.settings), specs);
    s.metadata.method = "heuristic";
    s.metadata.status = std::string(cover_status_name(solution.status));
    s.metadata.seed = options.seed;
    s.metadata.set_count("restarts", options.restarts);
    s.metadata.set_count("target_edges", static_cast<long long>(gt.graph.edge_count()));
    s.metadata.set_count("lower_bound", solution.lower_bound);
    return s;
}

}  // namespace fermisched
