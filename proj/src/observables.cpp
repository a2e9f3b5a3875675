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

#include "fermisched/observables.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <stdexcept>
#include <tuple>

namespace fermisched {

DyadicComplex DyadicComplex::from_parts(double re, double im) {
    double rq = re * 4.0;
    double iq = im * 4.0;
    if (std::abs(rq - std::round(rq)) > 1e-12 || std::abs(iq - std::round(iq)) > 1e-12) {
        throw std::invalid_argument("coefficient is not a multiple of 1/4");
    }
    return {static_cast<int>(std::lround(rq)), static_cast<int>(std::lround(iq))};
}

DyadicComplex DyadicComplex::operator*(const DyadicComplex &other) const {
    int re16 = re_q * other.re_q - im_q * other.im_q;
    int im16 = re_q * other.im_q + im_q * other.re_q;
    if (re16 % 4 != 0 || im16 % 4 != 0) {
        throw std::domain_error("product is not a quarter-integer complex number");
    }
    return {re16 / 4, im16 / 4};
}

Observable Observable::number(int mode) {
    if (mode < 0) {
        throw std::invalid_argument("mode index must be non-negative");
    }
    return {ObsKind::N, mode, -1};
}

Observable Observable::pair(ObsKind kind, int i, int j) {
    if (kind == ObsKind::N) {
        throw std::invalid_argument("N is not a pair observable");
    }
    if (i < 0 || i >= j) {
        throw std::invalid_argument("pair observable needs 0 <= i < j");
    }
    return {kind, i, j};
}

std::pair<Observable, int> canonicalize_observable(ObsKind kind, int i, int j) {
    if (kind == ObsKind::N) {
        return {Observable::number(i), 1};
    }
    if (i == j) {
        throw std::invalid_argument("pair observable on a single mode " + std::to_string(i + 1));
    }
    if (i < j) {
        return {Observable::pair(kind, i, j), 1};
    }
    return {Observable::pair(kind, j, i), kind == ObsKind::Y ? -1 : 1};
}

bool compatible(const Observable &a, const Observable &b) {
    if (a == b) {
        return false;
    }
    if (!a.is_pair() && !b.is_pair()) {
        return true;
    }
    return !(b.touches(a.i) || (a.j >= 0 && b.touches(a.j)));
}

std::string to_label(const Observable &o) {
    switch (o.kind) {
        case ObsKind::N:
            return "N:" + std::to_string(o.i + 1);
        case ObsKind::X:
            return "X:" + std::to_string(o.i + 1) + ":" + std::to_string(o.j + 1);
        case ObsKind::Y:
            return "Y:" + std::to_string(o.i + 1) + ":" + std::to_string(o.j + 1);
    }
    return "?";
}

namespace {

int parse_mode(std::string_view text, std::string_view label) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || value < 1) {
        throw std::invalid_argument("bad observable label '" + std::string(label) + "'");
    }
    return value - 1;
}

}  // namespace

Observable parse_label(std::string_view label) {
    if (label.size() < 3 || label[1] != ':') {
        throw std::invalid_argument("bad observable label '" + std::string(label) + "'");
    }
    char k = label[0];
    std::string_view rest = label.substr(2);
    if (k == 'N' || k == 'n') {
        return Observable::number(parse_mode(rest, label));
    }
    ObsKind kind;
    if (k == 'X' || k == 'x') {
        kind = ObsKind::X;
    } else if (k == 'Y' || k == 'y') {
        kind = ObsKind::Y;
    } else {
        throw std::invalid_argument("bad observable label '" + std::string(label) + "'");
    }
    auto colon = rest.find(':');
    if (colon == std::string_view::npos) {
        throw std::invalid_argument("bad observable label '" + std::string(label) + "'");
    }
    int i = parse_mode(rest.substr(0, colon), label);
    int j = parse_mode(rest.substr(colon + 1), label);
    if (i >= j) {
        throw std::invalid_argument("pair label '" + std::string(label) + "' must have i < j");
    }
    return Observable::pair(kind, i, j);
}

ObservablePair make_observable_pair(const Observable &a, const Observable &b) {
    if (a == b) {
        throw std::invalid_argument("an edge needs two distinct observables");
    }
    return a < b ? ObservablePair{a, b} : ObservablePair{b, a};
}

std::string_view correlator_kind_name(CorrelatorKind kind) {
    switch (kind) {
        case CorrelatorKind::Number:
            return "n";
        case CorrelatorKind::TwoPoint:
            return "two_point";
        case CorrelatorKind::NN:
            return "nn";
        case CorrelatorKind::NBB:
            return "n_bb";
        case CorrelatorKind::BBBB:
            return "bbbb";
    }
    return "?";
}

CorrelatorKind parse_correlator_kind(std::string_view name) {
    for (auto k : {CorrelatorKind::Number, CorrelatorKind::TwoPoint, CorrelatorKind::NN, CorrelatorKind::NBB,
                   CorrelatorKind::BBBB}) {
        if (correlator_kind_name(k) == name) {
            return k;
        }
    }
    throw std::invalid_argument("unknown correlator kind '" + std::string(name) + "'");
}

int CorrelatorSpec::arity() const {
    switch (kind) {
        case CorrelatorKind::Number:
            return 1;
        case CorrelatorKind::TwoPoint:
        case CorrelatorKind::NN:
            return 2;
        case CorrelatorKind::NBB:
            return 3;
        case CorrelatorKind::BBBB:
            return 4;
    }
    return 0;
}

std::vector<int> CorrelatorSpec::modes() const {
    return {idx.begin(), idx.begin() + arity()};
}

int CorrelatorSpec::max_mode() const {
    auto m = modes();
    return *std::max_element(m.begin(), m.end());
}

CorrelatorSpec CorrelatorSpec::canonical() const {
    CorrelatorSpec c = *this;
    c.sign = 1;
    c.conjugate = false;
    return c;
}

namespace {

void require_modes(std::initializer_list<int> modes) {
    for (int m : modes) {
        if (m < 0) {
            throw std::invalid_argument("mode index must be non-negative");
        }
    }
}

}  // namespace

CorrelatorSpec number_correlator(int i) {
    require_modes({i});
    return {CorrelatorKind::Number, {i, -1, -1, -1}, 1, false};
}

CorrelatorSpec two_point(int i, int j) {
    require_modes({i, j});
    if (i == j) {
        throw std::invalid_argument("two-point correlator needs i != j");
    }
    if (i < j) {
        return {CorrelatorKind::TwoPoint, {i, j, -1, -1}, 1, false};
    }
    return {CorrelatorKind::TwoPoint, {j, i, -1, -1}, 1, true};
}

CorrelatorSpec nn_correlator(int i, int j) {
    require_modes({i, j});
    if (i == j) {
        throw std::invalid_argument("nn correlator needs i != j");
    }
    return {CorrelatorKind::NN, {std::min(i, j), std::max(i, j), -1, -1}, 1, false};
}

CorrelatorSpec n_bb_correlator(int i, int j, int k) {
    require_modes({i, j, k});
    if (j == k || i == j || i == k) {
        throw std::invalid_argument("n_bb correlator needs three distinct modes");
    }
    if (j < k) {
        return {CorrelatorKind::NBB, {i, j, k, -1}, 1, false};
    }
    return {CorrelatorKind::NBB, {i, k, j, -1}, 1, true};
}

CorrelatorSpec canonicalize_fourpoint(int i, int j, int k, int l) {
    require_modes({i, j, k, l});
    if (i == j || i == k || i == l || j == k || j == l || k == l) {
        throw std::invalid_argument("four-point canonicalization needs four distinct modes");
    }
    int sign = 1;
    bool conj = false;
    int lo = std::min({i, j, k, l});
    if (lo == j || lo == l) {
        // <b_i^dag b_j b_k^dag b_l>^* = <b_l^dag b_k b_j^dag b_i>
        std::tie(i, j, k, l) = std::make_tuple(l, k, j, i);
        conj = true;
    }
    if (i > k && j > l) {
        // Bilinears on disjoint modes commute.
        std::tie(i, j, k, l) = std::make_tuple(k, l, i, j);
    } else if (i > k) {
        std::swap(i, k);
        sign = -sign;
    } else if (j > l) {
        std::swap(j, l);
        sign = -sign;
    }
    return {CorrelatorKind::BBBB, {i, j, k, l}, sign, conj};
}

bool is_canonical(const CorrelatorSpec &s) {
    const auto &x = s.idx;
    for (int a = 0; a < s.arity(); a++) {
        if (x[a] < 0) {
            return false;
        }
    }
    switch (s.kind) {
        case CorrelatorKind::Number:
            return true;
        case CorrelatorKind::TwoPoint:
        case CorrelatorKind::NN:
            return x[0] < x[1];
        case CorrelatorKind::NBB:
            return x[1] < x[2] && x[0] != x[1] && x[0] != x[2];
        case CorrelatorKind::BBBB:
            return x[0] < x[2] && x[1] < x[3] && x[0] < x[1] && x[1] != x[2] && x[2] != x[3];
    }
    return false;
}

std::vector<CorrelatorSpec> enumerate_canonical_fourpoint(int n) {
    if (n < 2) {
        throw std::invalid_argument("four-point enumeration needs at least two modes");
    }
    std::vector<CorrelatorSpec> out;
    for (int i = 0; i < n; i++) {
        for (int j = i + 1; j < n; j++) {
            out.push_back(nn_correlator(i, j));
        }
    }
    for (int i = 0; i < n; i++) {
        for (int j = 0; j < n; j++) {
            for (int k = j + 1; k < n; k++) {
                if (i != j && i != k) {
                    out.push_back(n_bb_correlator(i, j, k));
                }
            }
        }
    }
    for (int a = 0; a < n; a++) {
        for (int b = a + 1; b < n; b++) {
            for (int c = b + 1; c < n; c++) {
                for (int d = c + 1; d < n; d++) {
                    out.push_back({CorrelatorKind::BBBB, {a, b, c, d}, 1, false});
                    out.push_back({CorrelatorKind::BBBB, {a, c, b, d}, 1, false});
                }
            }
        }
    }
    return out;
}

namespace {

struct Expansion {
    std::vector<Observable> factors;
    DyadicComplex coefficient;
};

// b_a^dag b_b = S_x^{ab} + i S_y^{ab}, with S_y^{ba} = -S_y^{ab}.
std::vector<Expansion> bilinear(int a, int b) {
    Observable x = canonicalize_observable(ObsKind::X, a, b).first;
    auto [y, sy] = canonicalize_observable(ObsKind::Y, a, b);
    DyadicComplex cy = DyadicComplex::imag_unit();
    if (sy < 0) {
        cy = -cy;
    }
    return {{{x}, DyadicComplex::one()}, {{y}, cy}};
}

std::vector<Expansion> product(const std::vector<Expansion> &lhs, const std::vector<Expansion> &rhs) {
    std::vector<Expansion> out;
    for (const auto &a : lhs) {
        for (const auto &b : rhs) {
            Expansion e;
            e.factors = a.factors;
            e.factors.insert(e.factors.end(), b.factors.begin(), b.factors.end());
            std::sort(e.factors.begin(), e.factors.end());
            e.coefficient = a.coefficient * b.coefficient;
            out.push_back(std::move(e));
        }
    }
    return out;
}

std::vector<Expansion> expand(const CorrelatorSpec &s) {
    if (!is_canonical(s)) {
        throw std::invalid_argument("correlator is not in canonical form");
    }
    const auto &x = s.idx;
    std::vector<Expansion> number_i{{{Observable::number(x[0])}, DyadicComplex::one()}};
    switch (s.kind) {
        case CorrelatorKind::Number:
            return number_i;
        case CorrelatorKind::TwoPoint:
            return bilinear(x[0], x[1]);
        case CorrelatorKind::NN:
            return product(number_i, {{{Observable::number(x[1])}, DyadicComplex::one()}});
        case CorrelatorKind::NBB:
            return product(number_i, bilinear(x[1], x[2]));
        case CorrelatorKind::BBBB:
            return product(bilinear(x[0], x[1]), bilinear(x[2], x[3]));
    }
    return {};
}

}  // namespace

std::vector<std::vector<Observable>> requirements(const CorrelatorSpec &spec) {
    std::vector<std::vector<Observable>> out;
    for (auto &e : expand(spec)) {
        out.push_back(std::move(e.factors));
    }
    return out;
}

std::vector<ObservablePair> required_edges(const CorrelatorSpec &spec) {
    std::vector<ObservablePair> out;
    for (const auto &f : requirements(spec)) {
        if (f.size() == 2) {
            out.push_back(make_observable_pair(f[0], f[1]));
        }
    }
    return out;
}

std::vector<ReconstructionTerm> reconstruction_terms(const CorrelatorSpec &spec, const FactorAssignment &assignment) {
    std::vector<ReconstructionTerm> out;
    for (auto &e : expand(spec.canonical())) {
        auto it = assignment.find(e.factors);
        if (it == assignment.end()) {
            std::string what = "no setting assigned for";
            for (const auto &f : e.factors) {
                what += " " + to_label(f);
            }
            throw std::invalid_argument(what);
        }
        DyadicComplex c = spec.conjugate ? e.coefficient.conj() : e.coefficient;
        if (spec.sign < 0) {
            c = -c;
        }
        out.push_back({it->second, std::move(e.factors), c});
    }
    return out;
}

}  // namespace fermisched
