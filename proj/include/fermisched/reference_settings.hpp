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

#ifndef FERMISCHED_REFERENCE_SETTINGS_HPP
#define FERMISCHED_REFERENCE_SETTINGS_HPP

#include <string>
#include <string_view>
#include <vector>

#include "fermisched/observables.hpp"
#include "fermisched/schedule.hpp"

namespace fermisched {

// Published four-point setting lists for 3, 4 and 6 modes (7, 20 and 76
// settings), transcribed column by column.

/// Raw columns, one space-separated token string per setting.
/// Throws std::invalid_argument for other mode counts.
const std::vector<std::string> &reference_columns(int n);

/// "n3", "X12", "y13" and the like; case-insensitive, 1-based, single-digit pairs.
Observable parse_reference_token(std::string_view token);

/// Columns as label sets, exactly as listed (number labels included).
std::vector<std::vector<Observable>> reference_cliques(int n);

/// Columns as settings, ids 1..k in published order.
std::vector<Setting> reference_settings(int n);

/// Settings plus the reconstruction map of every canonical four-point correlator.
Schedule reference_schedule(int n);

}  // namespace fermisched

#endif
