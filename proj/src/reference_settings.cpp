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

#include "fermisched/reference_settings.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

#include "fermisched/cover.hpp"

namespace fermisched {

namespace {

// One string per setting, tokens as printed in the published tables. Two
// entries of the six-mode list are kept verbatim although irregular: setting
// 36 uses lowercase labels, and setting 40 has three entries in a block whose
// other columns have four. parse_reference_token normalizes the case.
const std::vector<std::string> kThreeModes = {
    "n1 n2 n3",
    "n1 X23",
    "n1 Y23",
    "n2 X13",
    "n2 Y13",
    "n3 Y12",
    "n3 X12",
};

const std::vector<std::string> kFourModes = {
    "n1 n2 X34",
    "n1 n2 Y34",
    "n1 n3 X24",
    "n1 n3 Y24",
    "n1 n4 X23",
    "n1 n4 Y23",
    "n2 n3 X14",
    "n2 n3 Y14",
    "n2 n4 X13",
    "n2 n4 Y13",
    "n3 n4 X12",
    "n3 n4 Y12",
    "X12 X34",
    "X12 Y34",
    "Y12 X34",
    "Y12 Y34",
    "X13 X24",
    "X13 Y24",
    "Y13 X24",
    "Y13 Y24",
};

const std::vector<std::string> kSixModes = {
    "n1 n2 Y34 X56",
    "n1 n2 X36 Y45",
    "n1 n3 Y25 X46",
    "n1 n3 Y26 X45",
    "n1 n4 X25 Y36",
    "n1 n4 Y23 Y56",
    "n1 n5 X26 X34",
    "n1 n5 X23 Y46",
    "n1 n6 X24 X35",
    "n1 n6 X24 Y35",
    "n1 n6 Y24 X35",
    "n1 n6 Y24 Y35",
    "n1 n6 X23 X45",
    "n1 n6 X23 Y45",
    "n1 n6 Y23 X45",
    "n1 n6 Y23 Y45",
    "n2 n3 Y14 Y56",
    "n2 n3 Y15 Y46",
    "n2 n4 X16 X35",
    "n2 n4 Y16 Y35",
    "n2 n5 Y13 X46",
    "n2 n5 X14 Y36",
    "n2 n6 X13 X45",
    "n2 n6 X15 X34",
    "n3 n5 X16 X24",
    "n3 n5 Y16 Y24",
    "n3 n4 X12 X56",
    "n3 n4 X15 X26",
    "n3 n4 X15 Y26",
    "n3 n4 Y15 X26",
    "n3 n4 Y15 Y26",
    "n3 n6 Y12 Y45",
    "n3 n6 X14 X25",
    "n4 n5 Y12 X36",
    "n4 n5 X13 Y26",
    "n4 n6 y13 y25",
    "n4 n6 Y15 X23",
    "n5 n6 X12 Y34",
    "n5 n6 Y14 Y23",
    "X12 X35 Y46",
    "X12 Y35 X46",
    "Y12 X35 X46",
    "Y12 Y35 Y46",
    "X12 X45 Y36",
    "X12 Y45 X36",
    "Y12 X45 Y36",
    "X12 Y56 X34",
    "Y12 X56 X34",
    "Y12 Y56 Y34",
    "X13 X25 X46",
    "X13 Y25 Y46",
    "Y13 X25 Y46",
    "X13 X26 Y45",
    "Y13 X26 X45",
    "Y13 Y26 Y45",
    "X13 X24 Y56",
    "X13 Y24 X56",
    "Y13 X24 X56",
    "Y13 Y24 Y56",
    "X14 X23 X56",
    "X14 X23 Y56",
    "Y14 Y23 X56",
    "X14 Y25 X36",
    "Y14 X25 X36",
    "Y14 Y25 Y36",
    "X14 X26 X35",
    "X14 Y26 Y35",
    "Y14 X26 X35",
    "Y14 Y26 Y35",
    "X15 X24 X36",
    "X15 X24 Y36",
    "Y15 Y24 X36",
    "Y15 Y24 Y36",
    "X15 Y23 Y46",
    "X15 Y23 X46",
    "Y15 X23 X46",
};

}  // namespace

const std::vector<std::string> &reference_columns(int n) {
    switch (n) {
        case 3:
            return kThreeModes;
        case 4:
            return kFourModes;
        case 6:
            return kSixModes;
        default:
            throw std::invalid_argument("reference settings exist for 3, 4 and 6 modes only");
    }
}

Observable parse_reference_token(std::string_view token) {
    auto bad = [&] {
        return std::invalid_argument("malformed reference token '" + std::string(token) + "'");
    };
    if (token.size() < 2) {
        throw bad();
    }
    for (char ch : token.substr(1)) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) {
            throw bad();
        }
    }
    const char head = static_cast<char>(std::toupper(static_cast<unsigned char>(token[0])));
    if (head == 'N') {
        return Observable::number(std::stoi(std::string(token.substr(1))) - 1);
    }
    // Pair labels are two single-digit modes.
    if ((head != 'X' && head != 'Y') || token.size() != 3) {
        throw bad();
    }
    int i = token[1] - '1';
    int j = token[2] - '1';
    if (i < 0 || j <= i) {
        throw bad();
    }
    return Observable::pair(head == 'X' ? ObsKind::X : ObsKind::Y, i, j);
}

std::vector<std::vector<Observable>> reference_cliques(int n) {
    std::vector<std::vector<Observable>> out;
    for (const auto &column : reference_columns(n)) {
        std::istringstream in(column);
        std::vector<Observable> labels;
        std::string token;
        while (in >> token) {
            labels.push_back(parse_reference_token(token));
        }
        out.push_back(std::move(labels));
    }
    return out;
}

std::vector<Setting> reference_settings(int n) {
    std::vector<Setting> out;
    int id = 1;
    for (const auto &labels : reference_cliques(n)) {
        out.push_back(setting_from_observables(labels, id++));
    }
    return out;
}

Schedule reference_schedule(int n) {
    auto specs = enumerate_canonical_fourpoint(n);
    Schedule s = schedule_from_settings(n, reference_settings(n), specs);
    s.metadata.method = "reference";
    return s;
}

}  // namespace fermisched
