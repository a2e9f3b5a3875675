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

#include "fermisched/fock.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace fermisched {

namespace {

void check_mode(const FockState &state, int mode) {
    if (mode < 0 || mode >= state.n_modes()) {
        throw std::out_of_range("mode " + std::to_string(mode + 1) + " is outside a " +
                                std::to_string(state.n_modes()) + "-mode state");
    }
}

void check_pair(const FockState &state, int i, int j) {
    check_mode(state, i);
    check_mode(state, j);
    if (i == j) {
        throw std::invalid_argument("a two-mode gate needs distinct modes");
    }
}

// (-1)^(occupied modes strictly below `mode`).
double below_sign(std::uint64_t index, int mode) {
    std::uint64_t mask = (std::uint64_t{1} << mode) - 1;
    return std::popcount(index & mask) % 2 ? -1.0 : 1.0;
}

std::string correlator_label(const CorrelatorSpec &c) {
    std::string out(correlator_kind_name(c.kind));
    out += "(";
    auto modes = c.modes();
    for (std::size_t k = 0; k < modes.size(); k++) {
        out += (k ? "," : "") + std::to_string(modes[k] + 1);
    }
    out += ")";
    if (c.conjugate) {
        out += "*";
    }
    if (c.sign < 0) {
        out = "-" + out;
    }
    return out;
}

void check_schedule_fits(const Schedule &schedule, std::span<const FockState> states) {
    if (schedule.n_modes > kMaxDenseModes) {
        throw std::invalid_argument("schedule has " + std::to_string(schedule.n_modes) +
                                    " modes; dense verification is capped at " + std::to_string(kMaxDenseModes));
    }
    for (const auto &s : states) {
        if (s.n_modes() != schedule.n_modes) {
            throw std::invalid_argument("state and schedule differ in mode count");
        }
    }
}

}  // namespace

// ---------------------------------------------------------------------------
// State

FockState::FockState(int n_modes) : n_(n_modes) {
    if (n_modes < 0 || n_modes > kMaxDenseModes) {
        throw std::invalid_argument("dense simulation supports 0.." + std::to_string(kMaxDenseModes) +
                                    " modes, got " + std::to_string(n_modes));
    }
    amplitudes_.assign(std::size_t{1} << n_modes, Complex{});
    amplitudes_[0] = 1.0;
}

FockState FockState::basis(int n_modes, std::uint64_t occupation) {
    FockState s(n_modes);
    if (occupation >= s.dimension()) {
        throw std::out_of_range("occupation pattern exceeds the mode count");
    }
    s.amplitudes_[0] = 0.0;
    s.amplitudes_[occupation] = 1.0;
    return s;
}

double FockState::norm() const {
    double total = 0.0;
    for (const auto &a : amplitudes_) {
        total += std::norm(a);
    }
    return std::sqrt(total);
}

void FockState::normalize() {
    double nrm = norm();
    if (nrm == 0.0) {
        throw std::domain_error("cannot normalize the zero vector");
    }
    for (auto &a : amplitudes_) {
        a /= nrm;
    }
}

Complex FockState::inner(const FockState &other) const {
    if (other.n_ != n_) {
        throw std::invalid_argument("inner product of states with different mode counts");
    }
    Complex total{};
    for (std::size_t k = 0; k < amplitudes_.size(); k++) {
        total += std::conj(amplitudes_[k]) * other.amplitudes_[k];
    }
    return total;
}

// ---------------------------------------------------------------------------
// Operators

FockState apply_operator(const FockState &state, Ladder kind, int mode) {
    check_mode(state, mode);
    FockState out(state.n_modes());
    out[0] = 0.0;
    const std::uint64_t bit = std::uint64_t{1} << mode;
    for (std::uint64_t k = 0; k < state.dimension(); k++) {
        const Complex a = state[k];
        if (a == Complex{}) {
            continue;
        }
        const bool occupied = (k & bit) != 0;
        switch (kind) {
            case Ladder::Number:
                if (occupied) {
                    out[k] += a;
                }
                break;
            case Ladder::Annihilate:
                if (occupied) {
                    out[k ^ bit] += below_sign(k, mode) * a;
                }
                break;
            case Ladder::Create:
                if (!occupied) {
                    out[k ^ bit] += below_sign(k, mode) * a;
                }
                break;
        }
    }
    return out;
}

FockState apply_product(const FockState &state, std::span<const LadderOp> ops) {
    FockState out = state;
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
        out = apply_operator(out, it->kind, it->mode);
    }
    return out;
}

Complex expectation(const FockState &state, std::span<const LadderOp> ops) {
    return state.inner(apply_product(state, ops));
}

void apply_tunnelling(FockState &state, int i, int j, double theta1, double theta2, double theta3) {
    check_pair(state, i, j);
    const double px = theta1 * std::cos(theta2);
    const double py = theta1 * std::sin(theta2);
    const double pz = theta3;
    const double angle = std::sqrt(px * px + py * py + pz * pz);
    if (angle == 0.0) {
        return;
    }
    // exp(-i angle/2 (n . sigma)) in the basis (|i occupied>, sgn |j occupied>),
    // where b_i^dag b_j acts as sigma_+.
    const double c = std::cos(angle / 2);
    const double s = std::sin(angle / 2);
    const double nx = px / angle;
    const double ny = py / angle;
    const double nz = pz / angle;
    const Complex I{0.0, 1.0};
    const Complex u00 = c - I * s * nz;
    const Complex u01 = -I * s * Complex{nx, -ny};
    const Complex u10 = -I * s * Complex{nx, ny};
    const Complex u11 = c + I * s * nz;

    const std::uint64_t bi = std::uint64_t{1} << i;
    const std::uint64_t bj = std::uint64_t{1} << j;
    const std::uint64_t between = ((std::uint64_t{1} << std::max(i, j)) - 1) & ~((std::uint64_t{1} << (std::min(i, j) + 1)) - 1);
    for (std::uint64_t k = 0; k < state.dimension(); k++) {
        if ((k & bi) == 0 || (k & bj) != 0) {
            continue;
        }
        const std::uint64_t t = k;
        const std::uint64_t sidx = (k ^ bi) | bj;
        const double sgn = std::popcount(k & between) % 2 ? -1.0 : 1.0;
        const Complex alpha = state[t];
        const Complex beta = sgn * state[sidx];
        state[t] = u00 * alpha + u01 * beta;
        state[sidx] = sgn * (u10 * alpha + u11 * beta);
    }
}

void apply_interaction(FockState &state, int i, int j, double theta4) {
    check_pair(state, i, j);
    const std::uint64_t both = (std::uint64_t{1} << i) | (std::uint64_t{1} << j);
    const Complex phase = std::polar(1.0, -theta4);
    for (std::uint64_t k = 0; k < state.dimension(); k++) {
        if ((k & both) == both) {
            state[k] *= phase;
        }
    }
}

void apply_layer(FockState &state, const GateLayer &layer) {
    auto check_disjoint = [](const auto &gates) {
        std::set<int> used;
        for (const auto &g : gates) {
            if (!used.insert(g.i).second || !used.insert(g.j).second) {
                throw std::invalid_argument("gate layer has overlapping pairs");
            }
        }
    };
    check_disjoint(layer.tunnelling);
    check_disjoint(layer.interaction);
    for (const auto &g : layer.interaction) {
        apply_interaction(state, g.i, g.j, g.theta4);
    }
    for (const auto &g : layer.tunnelling) {
        apply_tunnelling(state, g.i, g.j, g.theta1, g.theta2, g.theta3);
    }
}

GateLayer compile_setting(const Setting &setting) {
    constexpr double half_pi = std::numbers::pi / 2;
    GateLayer layer;
    std::set<int> used;
    for (const auto &r : setting.rotations) {
        if (!used.insert(r.i).second || !used.insert(r.j).second) {
            throw std::invalid_argument("setting " + std::to_string(setting.id) + " has overlapping pairs");
        }
        double theta2 = r.basis == Basis::X ? half_pi : 0.0;
        layer.tunnelling.push_back({r.i, r.j, half_pi, theta2, 0.0});
    }
    return layer;
}

Complex direct_correlator(const FockState &state, const CorrelatorSpec &spec) {
    const auto &x = spec.idx;
    std::vector<LadderOp> ops;
    switch (spec.kind) {
        case CorrelatorKind::Number:
            ops = {{Ladder::Number, x[0]}};
            break;
        case CorrelatorKind::TwoPoint:
            ops = {{Ladder::Create, x[0]}, {Ladder::Annihilate, x[1]}};
            break;
        case CorrelatorKind::NN:
            ops = {{Ladder::Number, x[0]}, {Ladder::Number, x[1]}};
            break;
        case CorrelatorKind::NBB:
            ops = {{Ladder::Number, x[0]}, {Ladder::Create, x[1]}, {Ladder::Annihilate, x[2]}};
            break;
        case CorrelatorKind::BBBB:
            ops = {{Ladder::Create, x[0]}, {Ladder::Annihilate, x[1]}, {Ladder::Create, x[2]}, {Ladder::Annihilate, x[3]}};
            break;
    }
    Complex v = expectation(state, ops);
    if (spec.conjugate) {
        v = std::conj(v);
    }
    return static_cast<double>(spec.sign) * v;
}

// ---------------------------------------------------------------------------
// Readout

std::vector<double> readout_distribution(const FockState &state, const Setting &setting) {
    FockState rotated = state;
    apply_layer(rotated, compile_setting(setting));
    std::vector<double> p(rotated.dimension());
    for (std::size_t k = 0; k < p.size(); k++) {
        p[k] = std::norm(rotated[k]);
    }
    return p;
}

double factor_value(std::span<const Observable> factors, std::uint64_t outcome) {
    double v = 1.0;
    auto occ = [&](int m) {
        return static_cast<double>((outcome >> m) & 1U);
    };
    for (const auto &f : factors) {
        switch (f.kind) {
            case ObsKind::N:
                v *= occ(f.i);
                break;
            case ObsKind::X:
                v *= -(occ(f.i) - occ(f.j)) / 2;
                break;
            case ObsKind::Y:
                v *= (occ(f.i) - occ(f.j)) / 2;
                break;
        }
    }
    return v;
}

double expectation_moments(const FockState &state, const Setting &setting, std::span<const Observable> factors) {
    for (const auto &f : factors) {
        if (!setting.realises(f)) {
            throw std::invalid_argument("setting " + std::to_string(setting.id) + " cannot read out " + to_label(f));
        }
    }
    auto p = readout_distribution(state, setting);
    double total = 0.0;
    for (std::size_t k = 0; k < p.size(); k++) {
        if (p[k] != 0.0) {
            total += p[k] * factor_value(factors, k);
        }
    }
    return total;
}

FockState random_state(int n_modes, std::optional<int> particle_sector, std::uint64_t seed) {
    if (particle_sector && (*particle_sector < 0 || *particle_sector > n_modes)) {
        throw std::invalid_argument("particle sector must lie in 0..n_modes");
    }
    FockState s(n_modes);
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss;
    for (std::uint64_t k = 0; k < s.dimension(); k++) {
        bool allowed = !particle_sector || std::popcount(k) == *particle_sector;
        s[k] = allowed ? Complex{gauss(rng), gauss(rng)} : Complex{};
    }
    s.normalize();
    return s;
}

// ---------------------------------------------------------------------------
// Verification

VerifyReport verify_schedule(const Schedule &schedule, std::span<const FockState> states, double tol, int threads) {
    check_schedule_fits(schedule, states);
    VerifyReport report;
    report.states = states.size();
    report.correlators = schedule.reconstruction.size();
    report.failures = check_schedule(schedule);
    if (!report.failures.empty()) {
        return report;
    }

    struct Partial {
        double max_error = 0.0;
        std::vector<std::string> failures;
    };
    std::vector<Partial> partial(states.size());
    auto work = [&](std::size_t k) {
        const FockState &state = states[k];
        std::map<int, std::vector<double>> distributions;
        for (const auto &s : schedule.settings) {
            distributions.emplace(s.id, readout_distribution(state, s));
        }
        for (const auto &entry : schedule.reconstruction) {
            Complex estimate{};
            for (const auto &t : entry.terms) {
                const auto &p = distributions.at(t.setting_id);
                double moment = 0.0;
                for (std::size_t b = 0; b < p.size(); b++) {
                    if (p[b] != 0.0) {
                        moment += p[b] * factor_value(t.factors, b);
                    }
                }
                estimate += t.coefficient.value() * moment;
            }
            double err = std::abs(estimate - direct_correlator(state, entry.correlator));
            partial[k].max_error = std::max(partial[k].max_error, err);
            if (!(err <= tol)) {
                std::ostringstream msg;
                msg << correlator_label(entry.correlator) << " on state " << k << ": error " << err;
                partial[k].failures.push_back(msg.str());
            }
        }
    };
    const std::size_t workers = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(states.size(), 1));
    if (workers == 1) {
        for (std::size_t k = 0; k < states.size(); k++) {
            work(k);
        }
    } else {
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < workers; w++) {
            pool.emplace_back([&, w] {
                for (std::size_t k = w; k < states.size(); k += workers) {
                    work(k);
                }
            });
        }
        for (auto &th : pool) {
            th.join();
        }
    }
    for (auto &p : partial) {
        report.max_error = std::max(report.max_error, p.max_error);
        for (auto &f : p.failures) {
            report.failures.push_back(std::move(f));
        }
    }
    return report;
}

Counts sample_setting(const FockState &state, const Setting &setting, long long shots, std::uint64_t seed) {
    if (shots < 1) {
        throw std::invalid_argument("shots must be at least 1");
    }
    auto p = readout_distribution(state, setting);
    std::discrete_distribution<std::uint64_t> outcome(p.begin(), p.end());
    std::mt19937_64 rng(seed);
    Counts counts;
    for (long long s = 0; s < shots; s++) {
        counts[outcome(rng)]++;
    }
    return counts;
}

void write_counts_csv(std::ostream &out, const Counts &counts, int n_modes) {
    out << "bitstring,count\n";
    for (const auto &[outcome, count] : counts) {
        for (int m = 0; m < n_modes; m++) {
            out << (((outcome >> m) & 1U) ? '1' : '0');
        }
        out << ',' << count << '\n';
    }
}

VerifyReport verify_schedule_sampled(const Schedule &schedule, std::span<const FockState> states, long long shots,
                                     std::uint64_t seed, double sigmas, double tol) {
    check_schedule_fits(schedule, states);
    VerifyReport report;
    report.states = states.size();
    report.correlators = schedule.reconstruction.size();
    report.failures = check_schedule(schedule);
    if (!report.failures.empty()) {
        return report;
    }
    for (std::size_t k = 0; k < states.size(); k++) {
        std::map<int, Counts> samples;
        for (const auto &s : schedule.settings) {
            std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                              static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(s.id)};
            std::mt19937_64 derive(seq);
            samples.emplace(s.id, sample_setting(states[k], s, shots, derive()));
        }
        for (const auto &entry : schedule.reconstruction) {
            // Terms from one setting share shots, so combine them per shot before
            // estimating the variance.
            std::map<int, std::vector<const ReconstructionTerm *>> by_setting;
            for (const auto &t : entry.terms) {
                by_setting[t.setting_id].push_back(&t);
            }
            Complex estimate{};
            double var_re = 0.0;
            double var_im = 0.0;
            for (const auto &[id, terms] : by_setting) {
                Complex sum{};
                double sq_re = 0.0;
                double sq_im = 0.0;
                for (const auto &[outcome, count] : samples.at(id)) {
                    Complex v{};
                    for (const auto *t : terms) {
                        v += t->coefficient.value() * factor_value(t->factors, outcome);
                    }
                    sum += static_cast<double>(count) * v;
                    sq_re += static_cast<double>(count) * v.real() * v.real();
                    sq_im += static_cast<double>(count) * v.imag() * v.imag();
                }
                const double m = static_cast<double>(shots);
                Complex mean = sum / m;
                estimate += mean;
                var_re += std::max(0.0, sq_re / m - mean.real() * mean.real()) / m;
                var_im += std::max(0.0, sq_im / m - mean.imag() * mean.imag()) / m;
            }
            Complex exact = direct_correlator(states[k], entry.correlator);
            double err_re = std::abs(estimate.real() - exact.real());
            double err_im = std::abs(estimate.imag() - exact.imag());
            report.max_error = std::max({report.max_error, err_re, err_im});
            if (err_re > sigmas * std::sqrt(var_re) + tol || err_im > sigmas * std::sqrt(var_im) + tol) {
                std::ostringstream msg;
                msg << correlator_label(entry.correlator) << " on state " << k << ": estimate " << estimate
                    << " vs exact " << exact;
                report.failures.push_back(msg.str());
            }
        }
    }
    return report;
}

}  // namespace fermisched
