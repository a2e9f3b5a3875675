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

#include "fermisched/schedule.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace fermisched {

bool Setting::is_rotated(int mode) const {
    return std::any_of(rotations.begin(), rotations.end(), [&](const Rotation &r) {
        return r.i == mode || r.j == mode;
    });
}

bool Setting::realises(const Observable &o) const {
    if (!o.is_pair()) {
        return !is_rotated(o.i);
    }
    Basis b = o.kind == ObsKind::X ? Basis::X : Basis::Y;
    return std::find(rotations.begin(), rotations.end(), Rotation{o.i, o.j, b}) != rotations.end();
}

std::vector<Observable> setting_observables(const Setting &setting, int n_modes) {
    std::vector<Observable> out;
    for (int m = 0; m < n_modes; m++) {
        if (!setting.is_rotated(m)) {
            out.push_back(Observable::number(m));
        }
    }
    for (const auto &r : setting.rotations) {
        out.push_back(r.observable());
    }
    std::sort(out.begin(), out.end());
    return out;
}

Setting setting_from_observables(std::span<const Observable> observables, int id) {
    Setting s;
    s.id = id;
    std::set<int> used;
    for (const auto &o : observables) {
        if (!o.is_pair()) {
            continue;
        }
        if (!used.insert(o.i).second || !used.insert(o.j).second) {
            throw std::invalid_argument("rotations overlap on a mode at " + to_label(o));
        }
        s.rotations.push_back({o.i, o.j, o.kind == ObsKind::X ? Basis::X : Basis::Y});
    }
    std::sort(s.rotations.begin(), s.rotations.end());
    return s;
}

std::string describe(const Setting &setting) {
    if (setting.rotations.empty()) {
        return "-";
    }
    std::string out;
    for (const auto &r : setting.rotations) {
        if (!out.empty()) {
            out += ' ';
        }
        out += to_label(r.observable());
    }
    return out;
}

void ScheduleMetadata::set_count(const std::string &key, long long value) {
    for (auto &[k, v] : counts) {
        if (k == key) {
            v = value;
            return;
        }
    }
    counts.emplace_back(key, value);
}

std::optional<long long> ScheduleMetadata::count(const std::string &key) const {
    for (const auto &[k, v] : counts) {
        if (k == key) {
            return v;
        }
    }
    return std::nullopt;
}

const Setting *Schedule::find_setting(int id) const {
    for (const auto &s : settings) {
        if (s.id == id) {
            return &s;
        }
    }
    return nullptr;
}

std::vector<std::string> check_schedule(const Schedule &schedule) {
    std::vector<std::string> problems;
    std::set<int> ids;
    for (const auto &s : schedule.settings) {
        if (!ids.insert(s.id).second) {
            problems.push_back("duplicate setting id " + std::to_string(s.id));
        }
        std::set<int> used;
        for (const auto &r : s.rotations) {
            if (r.i < 0 || r.i >= r.j || r.j >= schedule.n_modes) {
                problems.push_back("setting " + std::to_string(s.id) + ": rotation (" + std::to_string(r.i + 1) +
                                   "," + std::to_string(r.j + 1) + ") is out of range or not ordered");
                continue;
            }
            if (!used.insert(r.i).second || !used.insert(r.j).second) {
                problems.push_back("setting " + std::to_string(s.id) + ": rotation " + to_label(r.observable()) +
                                   " overlaps another rotation");
            }
        }
    }
    for (const auto &entry : schedule.reconstruction) {
        const auto &c = entry.correlator;
        std::string name(correlator_kind_name(c.kind));
        if (!is_canonical(c) || c.max_mode() >= schedule.n_modes) {
            problems.push_back("correlator " + name + " is not canonical or exceeds the mode count");
            continue;
        }
        for (const auto &t : entry.terms) {
            const Setting *s = schedule.find_setting(t.setting_id);
            if (s == nullptr) {
                problems.push_back("term references unknown setting " + std::to_string(t.setting_id));
                continue;
            }
            for (const auto &f : t.factors) {
                if ((f.is_pair() ? f.j : f.i) >= schedule.n_modes || !s->realises(f)) {
                    problems.push_back("setting " + std::to_string(s->id) + " cannot read out " + to_label(f));
                }
            }
        }
    }
    return problems;
}

}  // namespace fermisched
