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

#ifndef FERMISCHED_LP_EXPORT_HPP
#define FERMISCHED_LP_EXPORT_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "fermisched/cover.hpp"

namespace fermisched {

/// GivenCliques: one binary z_c per maximal clique of G_M, and every target
/// edge must lie in a chosen clique.
///
/// CliqueSearch: n_c clique slots. Binary x (vertex in slot), y (G_M edge in
/// slot) and z (slot used) with x <= z, y <= x_u, y <= x_v, x_u + x_v - 1 <= y
/// on edges of G_M, x_u + x_v <= 1 on non-edges, and sum_c y_{e,c} >= 1 for
/// every target edge. Because y <= x <= z, the product z_c y_{e,c} equals
/// y_{e,c}, so the covering rows are written linearly.
enum class IlpModel { GivenCliques, CliqueSearch };

/// Accepts "given-cliques" / "given_cliques" and "clique-search" / "clique_search".
IlpModel parse_ilp_model(std::string_view name);

struct IlpStats {
    std::size_t variables = 0;
    std::size_t constraints = 0;
};

/// CPLEX LP text minimizing the number of used cliques.
///
/// Throws std::invalid_argument when CliqueSearch has no `n_c`, or when
/// `n_c` is below lower_bound(gm, gt) and the model would be infeasible.
std::string export_ilp(const MeasurementGraph &gm, const TargetGraph &gt, IlpModel model,
                       std::optional<int> n_c = std::nullopt, IlpStats *stats = nullptr);

/// Variable-name fragment for a label: N1, X1_2, Y1_2 (1-based).
std::string lp_name(const Observable &o);

}  // namespace fermisched

#endif
