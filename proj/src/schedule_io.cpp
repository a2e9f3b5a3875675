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

#include "fermisched/schedule_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace fermisched {

using json = nlohmann::ordered_json;

namespace {

json correlator_to_json(const CorrelatorSpec &c) {
    json indices = json::array();
    for (int m : c.modes()) {
        indices.push_back(m + 1);
    }
    json out;
    out["kind"] = correlator_kind_name(c.kind);
    out["indices"] = std::move(indices);
    out["conjugate"] = c.conjugate;
    out["sign"] = c.sign;
    return out;
}

CorrelatorSpec correlator_from_json(const json &j) {
    CorrelatorSpec c;
    c.kind = parse_correlator_kind(j.at("kind").get<std::string>());
    const auto &indices = j.at("indices");
    if (!indices.is_array() || static_cast<int>(indices.size()) != c.arity()) {
        throw std::invalid_argument("correlator indices do not match its kind");
    }
    for (std::size_t a = 0; a < indices.size(); a++) {
        int m = indices[a].get<int>();
        if (m < 1) {
            throw std::invalid_argument("correlator indices are 1-based");
        }
        c.idx[a] = m - 1;
    }
    c.conjugate = j.at("conjugate").get<bool>();
    c.sign = j.at("sign").get<int>();
    if (c.sign != 1 && c.sign != -1) {
        throw std::invalid_argument("correlator sign must be +1 or -1");
    }
    if (!is_canonical(c)) {
        throw std::invalid_argument("correlator indices are not canonical");
    }
    return c;
}

}  // namespace

std::string schedule_to_json(const Schedule &schedule) {
    json root;
    root["n_modes"] = schedule.n_modes;
    json settings = json::array();
    for (const auto &s : schedule.settings) {
        json rotations = json::array();
        for (const auto &r : s.rotations) {
            json jr;
            jr["i"] = r.i + 1;
            jr["j"] = r.j + 1;
            jr["basis"] = r.basis == Basis::X ? "X" : "Y";
            rotations.push_back(std::move(jr));
        }
        json js;
        js["id"] = s.id;
        js["rotations"] = std::move(rotations);
        settings.push_back(std::move(js));
    }
    root["settings"] = std::move(settings);

    json reconstruction = json::array();
    for (const auto &entry : schedule.reconstruction) {
        json terms = json::array();
        for (const auto &t : entry.terms) {
            json factors = json::array();
            for (const auto &f : t.factors) {
                factors.push_back(to_label(f));
            }
            json jt;
            jt["setting"] = t.setting_id;
            jt["factors"] = std::move(factors);
            jt["coeff_re"] = t.coefficient.re();
            jt["coeff_im"] = t.coefficient.im();
            terms.push_back(std::move(jt));
        }
        json je;
        je["correlator"] = correlator_to_json(entry.correlator);
        je["terms"] = std::move(terms);
        reconstruction.push_back(std::move(je));
    }
    root["reconstruction"] = std::move(reconstruction);

    const auto &md = schedule.metadata;
    json meta;
    meta["generator"] = md.generator;
    meta["seed"] = md.seed ? json(*md.seed) : json(nullptr);
    meta["method"] = md.method;
    meta["status"] = md.status;
    json counts = json::object();
    for (const auto &[k, v] : md.counts) {
        counts[k] = v;
    }
    meta["counts"] = std::move(counts);
    root["metadata"] = std::move(meta);
    return root.dump(1) + "\n";
}

Schedule schedule_from_json(std::string_view text) {
    json root;
    try {
        root = json::parse(text.begin(), text.end());
    } catch (const json::parse_error &e) {
        throw std::invalid_argument(std::string("schedule JSON does not parse: ") + e.what());
    }
    try {
        Schedule s;
        s.n_modes = root.at("n_modes").get<int>();
        if (s.n_modes < 0) {
            throw std::invalid_argument("n_modes must be non-negative");
        }
        for (const auto &js : root.at("settings")) {
            Setting setting;
            setting.id = js.at("id").get<int>();
            for (const auto &jr : js.at("rotations")) {
                int i = jr.at("i").get<int>() - 1;
                int j = jr.at("j").get<int>() - 1;
                std::string basis = jr.at("basis").get<std::string>();
                if (basis != "X" && basis != "Y") {
                    throw std::invalid_argument("rotation basis must be X or Y");
                }
                if (i < 0 || i >= j) {
                    throw std::invalid_argument("rotation modes must satisfy 1 <= i < j");
                }
                setting.rotations.push_back({i, j, basis == "X" ? Basis::X : Basis::Y});
            }
            s.settings.push_back(std::move(setting));
        }
        for (const auto &je : root.at("reconstruction")) {
            ReconstructionEntry entry;
            entry.correlator = correlator_from_json(je.at("correlator"));
            for (const auto &jt : je.at("terms")) {
                ReconstructionTerm t;
                t.setting_id = jt.at("setting").get<int>();
                for (const auto &f : jt.at("factors")) {
                    t.factors.push_back(parse_label(f.get<std::string>()));
                }
                t.coefficient = DyadicComplex::from_parts(jt.at("coeff_re").get<double>(), jt.at("coeff_im").get<double>());
                entry.terms.push_back(std::move(t));
            }
            s.reconstruction.push_back(std::move(entry));
        }
        if (root.contains("metadata")) {
            const auto &meta = root.at("metadata");
            s.metadata.generator = meta.value("generator", std::string{});
            if (meta.contains("seed") && !meta.at("seed").is_null()) {
                s.metadata.seed = meta.at("seed").get<std::uint64_t>();
            }
            s.metadata.method = meta.value("method", std::string{});
            s.metadata.status = meta.value("status", std::string{});
            if (meta.contains("counts")) {
                for (const auto &[k, v] : meta.at("counts").items()) {
                    s.metadata.counts.emplace_back(k, v.get<long long>());
                }
            }
        }
        return s;
    } catch (const json::exception &e) {
        throw std::invalid_argument(std::string("malformed schedule: ") + e.what());
    }
}

void write_schedule_file(const std::filesystem::path &path, const Schedule &schedule) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
    out << schedule_to_json(schedule);
}

Schedule read_schedule_file(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot read " + path.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return schedule_from_json(ss.str());
}

}  // namespace fermisched
