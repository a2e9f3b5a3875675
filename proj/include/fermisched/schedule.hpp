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

#ifndef FERMISCHED_SCHEDULE_HPP
#define FERMISCHED_SCHEDULE_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fermisched/observables.hpp"

namespace fermisched {

enum class Basis : std::uint8_t { X, Y };

/// A pair rotation in one setting; `i < j`, 0-based.
struct Rotation {
    int i = 0;
    int j = 1;
    Basis basis = Basis::X;

    Observable observable() const {
        return Observable::pair(basis == Basis::X ? ObsKind::X : ObsKind::Y, i, j);
    }

    auto operator<=>(const Rotation &) const = default;
};

/// One global measurement configuration: disjoint pair rotations, then
/// occupation readout of every mode. Modes not rotated read out N.
struct Setting {
    int id = 0;
    std::vector<Rotation> rotations;

    bool is_rotated(int mode) const;
    bool realises(const Observable &o) const;

    bool operator==(const Setting &) const = default;
};

/// The clique of the measurement graph that the setting reads out.
std::vector<Observable> setting_observables(const Setting &setting, int n_modes);

/// Builds a setting from the pair observables of a clique (N entries are
/// ignored). Throws if two pairs share a mode.
Setting setting_from_observables(std::span<const Observable> observables, int id = 0);

/// Space-separated labels of the rotations; "-" for a pure number setting.
std::string describe(const Setting &setting);

struct ReconstructionEntry {
    CorrelatorSpec correlator;
    std::vector<ReconstructionTerm> terms;

    bool operator==(const ReconstructionEntry &) const = default;
};

struct ScheduleMetadata {
    std::string generator = "fermisched";
    std::optional<std::uint64_t> seed;
    std::string method;
    /// Free-form integer statistics, serialized in insertion order.
    std::vector<std::pair<std::string, long long>> counts;
    /// Cover status for four-point schedules: optimal, feasible_with_gap, heuristic.
    std::string status;

    bool operator==(const ScheduleMetadata &) const = default;

    void set_count(const std::string &key, long long value);
    std::optional<long long> count(const std::string &key) const;
};

/// Settings plus the reconstruction map from measured moments to correlators.
struct Schedule {
    int n_modes = 0;
    std::vector<Setting> settings;
    std::vector<ReconstructionEntry> reconstruction;
    ScheduleMetadata metadata;

    const Setting *find_setting(int id) const;

    bool operator==(const Schedule &) const = default;
};

/// Lists every violated structural invariant: overlapping or out-of-range
/// rotations, duplicate setting ids, terms referencing unknown settings, and
/// factors that the referenced setting cannot read out.
std::vector<std::string> check_schedule(const Schedule &schedule);

}  // namespace fermisched

#endif
