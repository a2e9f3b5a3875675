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

#ifndef FERMISCHED_COVER_HPP
#define FERMISCHED_COVER_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fermisched/graph.hpp"
#include "fermisched/observables.hpp"
#include "fermisched/schedule.hpp"
#include "fermisched/set_cover.hpp"

namespace fermisched {

/// Compatibility graph of all measurable labels of n modes.
///
/// Vertex numbering: N(i) is i; the pair (i, j), i < j, with rank p in
/// lexicographic order gives X(i, j) = n + 2p and Y(i, j) = n + 2p + 1.
/// Two labels are adjacent when one layer of disjoint rotations followed by
/// occupation readout yields both.
class MeasurementGraph {
   public:
    explicit MeasurementGraph(int n_modes);

    int n_modes() const {
        return n_;
    }
    int vertex_count() const {
        return n_ * n_;
    }
    int index_of(const Observable &o) const;
    Observable observable_at(int v) const;

    bool adjacent(int u, int v) const {
        return adj_[u].test(v);
    }
    const Bits &neighbours(int v) const {
        return adj_[v];
    }
    std::size_t edge_count() const;
    Graph as_graph() const;

    /// True when the labels are pairwise adjacent.
    bool is_clique(std::span<const int> vertices) const;
    Bits vertex_set(const Setting &setting) const;

   private:
    int n_;
    std::vector<Bits> adj_;
};

/// Throws std::invalid_argument for n < 2.
MeasurementGraph build_measurement_graph(int n);

/// Label pairs whose joint moments must be measured. Vertices are those of
/// the measurement graph with the same mode count.
struct TargetGraph {
    int n_modes = 0;
    Graph graph;
    std::vector<CorrelatorSpec> specs;
};

/// Union of required_edges over `specs`. Throws std::invalid_argument when a
/// spec is not canonical, names a mode >= n, or needs a pair of labels that
/// cannot be read out together.
TargetGraph build_target_graph(int n, std::span<const CorrelatorSpec> specs);

/// Target graph from explicit label pairs (no correlators attached).
TargetGraph target_from_pairs(int n, std::span<const ObservablePair> pairs);

/// All maximal cliques of G_M as settings, ids from 1. Every matching of the
/// modes with an X/Y choice per matched pair is one maximal clique.
/// Order: by number of rotations, then lexicographic on the rotation list.
std::vector<Setting> enumerate_settings(const MeasurementGraph &gm);

/// Generic maximal-clique enumeration (Bron-Kerbosch with Tomita pivoting).
std::vector<Bits> bron_kerbosch(std::span<const Bits> adjacency);

enum class CoverStatus : std::uint8_t { Optimal, FeasibleWithGap, Heuristic };
std::string_view cover_status_name(CoverStatus status);

struct CoverSolution {
    std::vector<Setting> settings;
    /// Index into `settings` for every target edge, parallel to gt.graph.edges().
    std::vector<int> edge_assignment;
    CoverStatus status = CoverStatus::Heuristic;
    int lower_bound = 0;
    std::uint64_t nodes = 0;
};

struct ExactOptions {
    std::optional<double> time_budget_seconds;
    /// Cliques to choose from; all maximal cliques of G_M when unset.
    std::optional<std::vector<Setting>> candidates;
};

/// Minimum number of cliques covering every target edge.
/// Throws std::invalid_argument when no candidate covers some target edge.
CoverSolution exact_cover(const MeasurementGraph &gm, const TargetGraph &gt, const ExactOptions &options = {});

struct HeuristicOptions {
    int restarts = 20;
    std::uint64_t seed = 0;
    int threads = 1;
};

/// Restarted greedy clique growth. Each restart repeatedly picks a uniformly
/// random uncovered target edge and grows it into a maximal clique of G_M,
/// adding the vertex that closes the most uncovered target edges (ties: most
/// uncovered target edges towards the remaining candidates, then lowest
/// index). Redundant cliques are pruned afterwards. The smallest cover wins,
/// ties going to the earliest restart, so the result does not depend on
/// `threads`.
CoverSolution heuristic_cover(const MeasurementGraph &gm, const TargetGraph &gt, const HeuristicOptions &options = {});

/// Greedy family of target edges no two of which lie in a common clique.
int lower_bound(const MeasurementGraph &gm, const TargetGraph &gt);

struct CoverReport {
    std::vector<std::string> non_cliques;
    std::vector<ObservablePair> uncovered;

    bool valid() const {
        return non_cliques.empty() && uncovered.empty();
    }
    std::string summary() const;
};

CoverReport validate_cover(const MeasurementGraph &gm, const TargetGraph &gt, std::span<const Setting> settings);

/// Same check for raw label sets: each set must itself be a clique, and a
/// target edge counts as covered when both labels are in one set.
CoverReport validate_cover(const MeasurementGraph &gm, const TargetGraph &gt,
                           std::span<const std::vector<Observable>> cliques);

/// Reconstruction map for `specs`, each factor list read from the first
/// setting that realises it. Throws std::invalid_argument if none does.
std::vector<ReconstructionEntry> build_reconstruction(std::span<const Setting> settings,
                                                      std::span<const CorrelatorSpec> specs);

/// Schedule for every canonical four-point correlator of n modes.
struct FourPointOptions {
    enum class Method { Exact, Heuristic } method = Method::Exact;
    std::optional<double> time_budget_seconds;
    HeuristicOptions heuristic;
};
Schedule four_point_schedule(int n, const FourPointOptions &options = {});

/// Wraps settings and their reconstruction into a schedule, renumbering ids 1..k.
Schedule schedule_from_settings(int n, std::vector<Setting> settings, std::span<const CorrelatorSpec> specs);

}  // namespace fermisched

#endif
