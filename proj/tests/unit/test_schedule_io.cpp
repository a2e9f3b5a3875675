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

#include <filesystem>
#include <nlohmann/json.hpp>

#include "fermisched/cover.hpp"
#include "fermisched/schedule_io.hpp"
#include "fermisched/two_point.hpp"

namespace fermisched {
namespace {

using nlohmann::ordered_json;

TEST(ScheduleJson, RoundTripsExactly) {
    FourPointOptions heuristic;
    heuristic.method = FourPointOptions::Method::Heuristic;
    heuristic.heuristic = {3, 99, 1};
    for (const Schedule &s : {two_point_schedule(complete_graph(5)), four_point_schedule(3), four_point_schedule(4, heuristic)}) {
        std::string text = schedule_to_json(s);
        Schedule back = schedule_from_json(text);
        EXPECT_EQ(back, s);
        EXPECT_EQ(schedule_to_json(back), text);
        EXPECT_EQ(text.back(), '\n');
    }
    Schedule h = schedule_from_json(schedule_to_json(four_point_schedule(4, heuristic)));
    ASSERT_TRUE(h.metadata.seed.has_value());
    EXPECT_EQ(*h.metadata.seed, 99u);
    EXPECT_EQ(h.metadata.status, "heuristic");
}

TEST(ScheduleJson, ModesAreOneBasedOnDisk) {
    Schedule s = two_point_schedule(complete_graph(2));
    auto root = ordered_json::parse(schedule_to_json(s));
    EXPECT_EQ(root["n_modes"], 2);
    EXPECT_EQ(root["settings"][1]["rotations"][0]["i"], 1);
    EXPECT_EQ(root["settings"][1]["rotations"][0]["j"], 2);
}

TEST(ScheduleJson, FileRoundTrip) {
    auto path = std::filesystem::temp_directory_path() / "fermisched_io_test.json";
    Schedule s = four_point_schedule(3);
    write_schedule_file(path, s);
    EXPECT_EQ(read_schedule_file(path), s);
    std::filesystem::remove(path);
    EXPECT_THROW(read_schedule_file(path), std::runtime_error);
}

TEST(ScheduleJson, RejectsMalformedInput) {
    auto root = ordered_json::parse(schedule_to_json(four_point_schedule(3)));
    EXPECT_THROW(schedule_from_json("{"), std::invalid_argument);
    EXPECT_THROW(schedule_from_json("{}"), std::invalid_argument);

    auto bad_basis = root;
    bad_basis["settings"][1]["rotations"][0]["basis"] = "Z";
    EXPECT_THROW(schedule_from_json(bad_basis.dump()), std::invalid_argument);

    auto bad_order = root;
    bad_order["settings"][1]["rotations"][0]["i"] = 3;
    EXPECT_THROW(schedule_from_json(bad_order.dump()), std::invalid_argument);

    auto bad_coeff = root;
    bad_coeff["reconstruction"][0]["terms"][0]["coeff_re"] = 0.3;
    EXPECT_THROW(schedule_from_json(bad_coeff.dump()), std::invalid_argument);
}

TEST(ScheduleCheck, FindsStructuralProblems) {
    Schedule s = four_point_schedule(3);
    EXPECT_TRUE(check_schedule(s).empty());

    Schedule dangling = s;
    dangling.reconstruction[0].terms[0].setting_id = 99;
    EXPECT_FALSE(check_schedule(dangling).empty());

    Schedule overlap = s;
    overlap.settings.push_back({50, {{0, 1, Basis::X}, {1, 2, Basis::X}}});
    EXPECT_FALSE(check_schedule(overlap).empty());

    Schedule duplicate = s;
    duplicate.settings.push_back(duplicate.settings.front());
    EXPECT_FALSE(check_schedule(duplicate).empty());
}

}  // namespace
}  // namespace fermisched
