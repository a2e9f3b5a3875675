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

#ifndef FERMISCHED_OBSERVABLES_HPP
#define FERMISCHED_OBSERVABLES_HPP

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fermisched {

/// Exact complex number with real and imaginary parts in quarter units.
struct DyadicComplex {
    int re_q = 0;
    int im_q = 0;

    static constexpr DyadicComplex one() {
        return {4, 0};
    }
    static constexpr DyadicComplex imag_unit() {
        return {0, 4};
    }
    /// Builds from a double pair; throws unless both parts are multiples of 1/4.
    static DyadicComplex from_parts(double re, double im);

    constexpr DyadicComplex conj() const {
        return {re_q, -im_q};
    }
    constexpr DyadicComplex operator-() const {
        return {-re_q, -im_q};
    }
    /// Throws std::domain_error if the product leaves the quarter lattice.
    DyadicComplex operator*(const DyadicComplex &other) const;

    double re() const {
        return re_q / 4.0;
    }
    double im() const {
        return im_q / 4.0;
    }
    std::complex<double> value() const {
        return {re(), im()};
    }
    bool is_zero() const {
        return re_q == 0 && im_q == 0;
    }

    auto operator<=>(const DyadicComplex &) const = default;
};

enum class ObsKind : std::uint8_t { N, X, Y };

/// A measurable: the occupation N(i), or the pair spin S_x / S_y on modes i < j.
///
/// Mode indices are 0-based; `j` is -1 for N.
struct Observable {
    ObsKind kind = ObsKind::N;
    int i = 0;
    int j = -1;

    static Observable number(int mode);
    /// Requires i < j.
    static Observable pair(ObsKind kind, int i, int j);

    bool is_pair() const {
        return kind != ObsKind::N;
    }
    bool touches(int mode) const {
        return i == mode || j == mode;
    }

    auto operator<=>(const Observable &) const = default;
};

/// Maps (kind, i, j) with i != j onto the i < j representative.
///
/// S_x is symmetric in its modes and S_y antisymmetric, so the sign is -1
/// exactly for Y with i > j. For N only `i` is read.
std::pair<Observable, int> canonicalize_observable(ObsKind kind, int i, int j = -1);

/// True iff both observables can be read out in one setting.
bool compatible(const Observable &a, const Observable &b);

/// "N:i", "X:i:j" or "Y:i:j", 1-based with i < j.
std::string to_label(const Observable &o);
/// Inverse of to_label. Lower-case kinds are accepted; pairs must have i < j.
Observable parse_label(std::string_view label);

/// Sorted pair of distinct observables: one edge of the measurement graph.
using ObservablePair = std::pair<Observable, Observable>;
ObservablePair make_observable_pair(const Observable &a, const Observable &b);

enum class CorrelatorKind : std::uint8_t {
    Number,    // <n_i>
    TwoPoint,  // <b_i^dag b_j>, i != j
    NN,        // <n_i n_j>, i < j
    NBB,       // <n_i b_j^dag b_k>, j < k, i not in {j, k}
    BBBB,      // <b_i^dag b_j b_k^dag b_l>, all distinct
};

std::string_view correlator_kind_name(CorrelatorKind kind);
CorrelatorKind parse_correlator_kind(std::string_view name);

/// A canonical correlator together with how a requested correlator maps onto it:
///
///     requested = sign * (conjugate ? conj(canonical) : canonical)
///
/// Canonical four-point form: i < k, j < l and i is the smallest index. When
/// additionally l is the largest index the form is i < k < l, i < j < l; the
/// remaining orbit (creation modes {min, max}) is canonicalized to
/// (min, j, max, l) with j < l.
struct CorrelatorSpec {
    CorrelatorKind kind = CorrelatorKind::Number;
    std::array<int, 4> idx{-1, -1, -1, -1};
    int sign = 1;
    bool conjugate = false;

    int arity() const;
    std::vector<int> modes() const;
    int max_mode() const;
    /// The same correlator with sign +1 and no conjugation.
    CorrelatorSpec canonical() const;

    auto operator<=>(const CorrelatorSpec &) const = default;
};

CorrelatorSpec number_correlator(int i);
CorrelatorSpec two_point(int i, int j);
CorrelatorSpec nn_correlator(int i, int j);
/// <n_i b_j^dag b_k>; for j > k this is the conjugate of <n_i b_k^dag b_j>.
CorrelatorSpec n_bb_correlator(int i, int j, int k);
/// Canonicalizes <b_i^dag b_j b_k^dag b_l> for four distinct modes.
CorrelatorSpec canonicalize_fourpoint(int i, int j, int k, int l);

bool is_canonical(const CorrelatorSpec &spec);

/// All nn(i<j) and n_bb(i; j<k) correlators, followed by two four-mode
/// representatives (min, a, b, max) and (min, b, a, max) per 4-subset.
std::vector<CorrelatorSpec> enumerate_canonical_fourpoint(int n);

/// The factor sets whose joint moments determine the correlator. Each set has
/// one observable (one-body terms) or two (graph edges).
std::vector<std::vector<Observable>> requirements(const CorrelatorSpec &spec);

/// Two-factor requirements as measurement-graph edges. Empty for Number and
/// TwoPoint correlators.
std::vector<ObservablePair> required_edges(const CorrelatorSpec &spec);

struct ReconstructionTerm {
    int setting_id = 0;
    std::vector<Observable> factors;
    DyadicComplex coefficient;

    auto operator<=>(const ReconstructionTerm &) const = default;
};

/// Which setting realizes each requirement (factor set, sorted).
using FactorAssignment = std::map<std::vector<Observable>, int>;

/// Exact linear map from measured moments to the correlator value:
/// b_i^dag b_j = S_x^{ij} + i S_y^{ij}, multiplied out over the bilinears.
/// Throws std::invalid_argument if a requirement is missing from `assignment`.
std::vector<ReconstructionTerm> reconstruction_terms(const CorrelatorSpec &spec, const FactorAssignment &assignment);

}  // namespace fermisched

#endif
