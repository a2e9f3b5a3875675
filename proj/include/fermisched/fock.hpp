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

#ifndef FERMISCHED_FOCK_HPP
#define FERMISCHED_FOCK_HPP

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fermisched/observables.hpp"
#include "fermisched/schedule.hpp"

namespace fermisched {

using Complex = std::complex<double>;

/// Largest mode count the dense simulator accepts.
inline constexpr int kMaxDenseModes = 14;

/// Dense state over the 2^n occupation basis; bit b of an index is the
/// occupation of mode b. Creation and annihilation on mode i carry the sign
/// (-1)^(occupied modes below i).
class FockState {
   public:
    /// Vacuum. Throws std::invalid_argument outside 0..kMaxDenseModes.
    explicit FockState(int n_modes);
    static FockState basis(int n_modes, std::uint64_t occupation);

    int n_modes() const {
        return n_;
    }
    std::size_t dimension() const {
        return amplitudes_.size();
    }
    std::vector<Complex> &amplitudes() {
        return amplitudes_;
    }
    const std::vector<Complex> &amplitudes() const {
        return amplitudes_;
    }
    Complex &operator[](std::uint64_t index) {
        return amplitudes_[index];
    }
    Complex operator[](std::uint64_t index) const {
        return amplitudes_[index];
    }

    double norm() const;
    void normalize();
    /// <this|other>.
    Complex inner(const FockState &other) const;

   private:
    int n_;
    std::vector<Complex> amplitudes_;
};

enum class Ladder : std::uint8_t { Annihilate, Create, Number };

struct LadderOp {
    Ladder kind;
    int mode;
};

/// Applies one operator; the result is generally unnormalized.
FockState apply_operator(const FockState &state, Ladder kind, int mode);

/// Applies `ops` right to left (the last entry acts first).
FockState apply_product(const FockState &state, std::span<const LadderOp> ops);

/// <psi| ops |psi> with `ops` read as an operator product.
Complex expectation(const FockState &state, std::span<const LadderOp> ops);

/// exp{-i(phi_x S_x + phi_y S_y + phi_z S_z)} on the pair (i, j), with
/// phi_x = theta1 cos(theta2), phi_y = theta1 sin(theta2), phi_z = theta3,
/// S_x + i S_y = b_i^dag b_j and S_z = (n_i - n_j) / 2.
void apply_tunnelling(FockState &state, int i, int j, double theta1, double theta2, double theta3);

/// Phase exp(-i theta4) on every basis state with modes i and j occupied.
void apply_interaction(FockState &state, int i, int j, double theta4);

struct TunnellingGate {
    int i;
    int j;
    double theta1;
    double theta2;
    double theta3;
};

struct InteractionGate {
    int i;
    int j;
    double theta4;
};

/// One layer of native gates; no mode may appear in two gates of the same kind.
struct GateLayer {
    std::vector<TunnellingGate> tunnelling;
    std::vector<InteractionGate> interaction;
};

/// Throws std::invalid_argument when the layer's pairs overlap.
void apply_layer(FockState &state, const GateLayer &layer);

/// Readout rotations for a setting: X pairs get (pi/2, pi/2, 0), so that
/// occupation readout reports -S_x; Y pairs get (pi/2, 0, 0), reporting +S_y.
GateLayer compile_setting(const Setting &setting);

/// Exact value of a correlator, computed by operator application.
Complex direct_correlator(const FockState &state, const CorrelatorSpec &spec);

/// Occupation-basis probabilities after the compiled readout layer.
std::vector<double> readout_distribution(const FockState &state, const Setting &setting);

/// Value of a product of factors on one occupation outcome: n_i for N(i),
/// -(n_i - n_j)/2 for X(i, j), +(n_i - n_j)/2 for Y(i, j).
double factor_value(std::span<const Observable> factors, std::uint64_t outcome);

/// Exact expectation of a factor product read out in `setting`.
/// Throws std::invalid_argument if some factor is not realised by the setting.
double expectation_moments(const FockState &state, const Setting &setting, std::span<const Observable> factors);

/// Haar-like random state on the full space, or on a fixed particle number.
FockState random_state(int n_modes, std::optional<int> particle_sector, std::uint64_t seed);

struct VerifyReport {
    std::size_t states = 0;
    std::size_t correlators = 0;
    double max_error = 0.0;
    std::vector<std::string> failures;

    bool passed() const {
        return failures.empty();
    }
};

/// Evaluates every reconstruction entry on every state and compares it with
/// direct_correlator. Structural problems of the schedule count as failures.
VerifyReport verify_schedule(const Schedule &schedule, std::span<const FockState> states, double tol = 1e-9,
                             int threads = 1);

using Counts = std::map<std::uint64_t, long long>;

/// Shot samples of the occupation outcome after the readout layer.
Counts sample_setting(const FockState &state, const Setting &setting, long long shots, std::uint64_t seed);

/// CSV with header "bitstring,count"; character k of a bitstring is mode k + 1.
void write_counts_csv(std::ostream &out, const Counts &counts, int n_modes);

/// Finite-shot check: every correlator's real and imaginary parts must lie
/// within `sigmas` standard errors (plus `tol`) of the exact value.
VerifyReport verify_schedule_sampled(const Schedule &schedule, std::span<const FockState> states, long long shots,
                                     std::uint64_t seed, double sigmas = 5.0, double tol = 1e-9);

}  // namespace fermisched

#endif
