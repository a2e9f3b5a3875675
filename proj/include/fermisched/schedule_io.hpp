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

#ifndef FERMISCHED_SCHEDULE_IO_HPP
#define FERMISCHED_SCHEDULE_IO_HPP

#include <filesystem>
#include <string>
#include <string_view>

#include "fermisched/schedule.hpp"

namespace fermisched {

/// Schedule file JSON. Field order is fixed and all mode labels are 1-based:
///
///     {"n_modes": N,
///      "settings": [{"id", "rotations": [{"i", "j", "basis"}]}],
///      "reconstruction": [{"correlator": {"kind", "indices", "conjugate", "sign"},
///                          "terms": [{"setting", "factors", "coeff_re", "coeff_im"}]}],
///      "metadata": {"generator", "seed", "method", "status", "counts": {...}}}
///
/// Writing is deterministic, so write(read(write(s))) == write(s) byte for byte.
std::string schedule_to_json(const Schedule &schedule);

/// Throws std::invalid_argument on malformed input.
Schedule schedule_from_json(std::string_view text);

/// File helpers throw std::runtime_error when the file cannot be opened.
void write_schedule_file(const std::filesystem::path &path, const Schedule &schedule);
Schedule read_schedule_file(const std::filesystem::path &path);

}  // namespace fermisched

#endif
