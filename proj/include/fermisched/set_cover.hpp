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

#ifndef FERMISCHED_SET_COVER_HPP
#define FERMISCHED_SET_COVER_HPP

#include <boost/dynamic_bitset.hpp>
#include <cstdint>
#include <optional>
#include <vector>

namespace fermisched {

using Bits = boost::dynamic_bitset<std::uint64_t>;

/// Unweighted set cover: pick the fewest `sets` whose union is the universe.
struct SetCoverInstance {
    std::size_t universe = 0;
    std::vector<Bits> sets;
};

struct SetCoverResult {
    std::vector<int> chosen;  // indices into SetCoverInstance::sets, ascending
    bool optimal = false;
    int lower_bound = 0;
    std::uint64_t nodes = 0;
};

/// Greedy largest-gain cover (ties to the lowest index).
std::vector<int> greedy_set_cover(const SetCoverInstance &instance);

/// Size of a greedily built family of elements, no two contained in a common
/// set. Any cover needs at least that many sets.
int conflict_lower_bound(const SetCoverInstance &instance);

/// Exact depth-first branch and bound.
///
/// Branches on the uncovered element contained in the fewest admissible sets
/// and prunes with the conflict bound of the remaining elements. Sets are
/// tried in order of new coverage; a set rejected on one branch stays excluded
/// on its siblings. When `time_budget_seconds` runs out the best cover found
/// is returned with `optimal == false` and the root lower bound.
///
/// Throws std::invalid_argument if some element lies in no set.
SetCoverResult solve_set_cover(const SetCoverInstance &instance, std::optional<double> time_budget_seconds = {});

}  // namespace fermisched

#endif
