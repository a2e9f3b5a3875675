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

#include "fermisched/cover.hpp"
#include "fermisched/fock.hpp"
#include "fermisched/reference_settings.hpp"

namespace fermisched {
namespace {

TEST(Reference, TokensParseCaseInsensitively) {
    EXPECT_EQ(parse_reference_token("n4"), Observable::number(3));
    EXPECT_EQ(parse_reference_token("N4"), Observable::number(3));
    EXPECT_EQ(parse_reference_token("y13"), Observable::pair(ObsKind::Y, 0, 2));
    EXPECT_EQ(parse_reference_token("X35"), Observable::pair(ObsKind::X, 2, 4));
    EXPECT_THROW(parse_reference_token("Z12"), std::invalid_argument);
}

TEST(Reference, ListsAreValidCovers) {
    const std::map<int, std::size_t> sizes{{3, 7}, {4, 20}, {6, 76}};
    for (auto [n, size] : sizes) {
        auto cliques = reference_cliques(n);
        EXPECT_EQ(cliques.size(), size);
        MeasurementGraph gm(n);
        auto specs = enumerate_canonical_fourpoint(n);
        CoverReport r = validate_cover(gm, build_target_graph(n, specs), cliques);
        EXPECT_TRUE(r.valid()) << n << ": " << r.summary();
        EXPECT_EQ(reference_settings(n).size(), size);
    }
    EXPECT_THROW(reference_columns(5), std::invalid_argument);
}

TEST(Reference, SmallListsMatchTheExactOptimum) {
    for (int n : {3, 4}) {
        MeasurementGraph gm(n);
        auto specs = enumerate_canonical_fourpoint(n);
        CoverSolution exact = exact_cover(gm, build_target_graph(n, specs));
        EXPECT_EQ(exact.settings.size(), reference_settings(n).size());
    }
}

TEST(Reference, SixModeScheduleReconstructs) {
    Schedule s = reference_schedule(6);
    EXPECT_TRUE(check_schedule(s).empty());
    EXPECT_EQ(s.metadata.method, "reference");
    std::vector<FockState> states{random_state(6, std::nullopt, 5), random_state(6, 3, 6)};
    VerifyReport r = verify_schedule(s, states);
    EXPECT_TRUE(r.passed());
    EXPECT_LT(r.max_error, 1e-12);
}

}  // namespace
}  // namespace fermisched
