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

// The dense-matrix model below is built independently of the simulator: it
// assembles ladder operators from the sign rule and checks every gate and
// readout identity through matrix algebra.

#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <numbers>
#include <sstream>

#include "fermisched/fock.hpp"

namespace fermisched {
namespace {

using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
constexpr double kTol = 1e-12;
constexpr double kPi = std::numbers::pi;
const Complex kI{0.0, 1.0};

Mat annihilator(int n, int mode) {
    const int dim = 1 << n;
    Mat b = Mat::Zero(dim, dim);
    for (int s = 0; s < dim; s++) {
        if (s >> mode & 1) {
            int below = __builtin_popcount(s & ((1 << mode) - 1));
            b(s ^ (1 << mode), s) = (below % 2) ? -1.0 : 1.0;
        }
    }
    return b;
}

Mat number(int n, int mode) {
    Mat b = annihilator(n, mode);
    return b.adjoint() * b;
}

struct PairSpin {
    Mat x, y, z;
};

PairSpin spin(int n, int i, int j) {
    Mat hop = annihilator(n, i).adjoint() * annihilator(n, j);  // S_x + i S_y
    return {(hop + hop.adjoint()) / 2.0, (hop - hop.adjoint()) / (2.0 * kI), (number(n, i) - number(n, j)) / 2.0};
}

// exp(-i H) for Hermitian H.
Mat expm_hermitian(const Mat &h) {
    Eigen::SelfAdjointEigenSolver<Mat> es(h);
    Eigen::VectorXcd phases = (-kI * es.eigenvalues().cast<Complex>()).array().exp();
    return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

Mat tunnelling_matrix(int n, int i, int j, double t1, double t2, double t3) {
    PairSpin s = spin(n, i, j);
    return expm_hermitian(t1 * std::cos(t2) * s.x + t1 * std::sin(t2) * s.y + t3 * s.z);
}

Vec to_vec(const FockState &st) {
    return Eigen::Map<const Vec>(st.amplitudes().data(), static_cast<Eigen::Index>(st.dimension()));
}

double dist(const Mat &a, const Mat &b) {
    return (a - b).cwiseAbs().maxCoeff();
}

TEST(Algebra, CanonicalAnticommutation) {
    const int n = 4;
    const int dim = 1 << n;
    for (int i = 0; i < n; i++) {
        for (int j = 0; j < n; j++) {
            Mat bi = annihilator(n, i);
            Mat bj = annihilator(n, j);
            Mat anti = bi * bj.adjoint() + bj.adjoint() * bi;
            Mat expected = Mat::Identity(dim, dim) * (i == j ? 1.0 : 0.0);
            EXPECT_LT(dist(anti, expected), kTol);
            EXPECT_LT((bi * bj + bj * bi).cwiseAbs().maxCoeff(), kTol);
        }
    }
}

TEST(Algebra, PairSpinCommutators) {
    const int n = 4;
    for (auto [i, j] : {std::pair{0, 1}, std::pair{0, 3}, std::pair{1, 3}}) {
        PairSpin s = spin(n, i, j);
        EXPECT_LT(dist(s.x * s.y - s.y * s.x, kI * s.z), kTol);
        EXPECT_LT(dist(s.y * s.z - s.z * s.y, kI * s.x), kTol);
        EXPECT_LT(dist(s.z * s.x - s.x * s.z, kI * s.y), kTol);
        // S0^2 - Sz^2 is the double-occupancy projector, S0 = (n_i + n_j) / 2.
        Mat s0 = (number(n, i) + number(n, j)) / 2.0;
        EXPECT_LT(dist(s0 * s0 - s.z * s.z, number(n, i) * number(n, j)), kTol);
    }
}

TEST(Simulator, LadderOperatorsMatchMatrices) {
    const int n = 4;
    FockState psi = random_state(n, std::nullopt, 3);
    for (int m = 0; m < n; m++) {
        Vec b = annihilator(n, m) * to_vec(psi);
        Vec bd = annihilator(n, m).adjoint() * to_vec(psi);
        Vec nm = number(n, m) * to_vec(psi);
        EXPECT_LT((to_vec(apply_operator(psi, Ladder::Annihilate, m)) - b).cwiseAbs().maxCoeff(), kTol);
        EXPECT_LT((to_vec(apply_operator(psi, Ladder::Create, m)) - bd).cwiseAbs().maxCoeff(), kTol);
        EXPECT_LT((to_vec(apply_operator(psi, Ladder::Number, m)) - nm).cwiseAbs().maxCoeff(), kTol);
    }
    // Product order: the last entry acts first.
    std::vector<LadderOp> ops{{Ladder::Create, 0}, {Ladder::Annihilate, 2}};
    Vec expected = annihilator(n, 0).adjoint() * annihilator(n, 2) * to_vec(psi);
    EXPECT_LT((to_vec(apply_product(psi, ops)) - expected).cwiseAbs().maxCoeff(), kTol);
}

TEST(Simulator, TunnellingGateIsTheSpinExponential) {
    const int n = 5;
    FockState psi = random_state(n, std::nullopt, 9);
    const double angles[][3] = {{0.3, 1.1, -0.7}, {kPi / 2, kPi / 2, 0}, {kPi / 2, 0, 0}, {2.9, -0.4, 1.3}};
    for (auto [i, j] : {std::pair{0, 1}, std::pair{1, 4}, std::pair{0, 4}, std::pair{2, 3}}) {
        for (const auto &a : angles) {
            FockState out = psi;
            apply_tunnelling(out, i, j, a[0], a[1], a[2]);
            Vec expected = tunnelling_matrix(n, i, j, a[0], a[1], a[2]) * to_vec(psi);
            EXPECT_LT((to_vec(out) - expected).cwiseAbs().maxCoeff(), kTol) << i << j;
        }
    }
}

TEST(Simulator, InteractionGateIsDensityPhase) {
    const int n = 4;
    FockState psi = random_state(n, std::nullopt, 2);
    FockState out = psi;
    apply_interaction(out, 1, 3, 0.8);
    Vec expected = expm_hermitian(0.8 * number(n, 1) * number(n, 3)) * to_vec(psi);
    EXPECT_LT((to_vec(out) - expected).cwiseAbs().maxCoeff(), kTol);
}

TEST(Readout, RotationsMapOccupationDifferenceOntoSpin) {
    const int n = 4;
    const int i = 0;
    const int j = 2;
    PairSpin s = spin(n, i, j);
    Mat ux = tunnelling_matrix(n, i, j, kPi / 2, kPi / 2, 0);
    Mat uy = tunnelling_matrix(n, i, j, kPi / 2, 0, 0);
    EXPECT_LT(dist(ux.adjoint() * s.z * ux, -s.x), kTol);
    EXPECT_LT(dist(uy.adjoint() * s.z * uy, s.y), kTol);
    // Untouched modes keep their occupation.
    EXPECT_LT(dist(ux.adjoint() * number(n, 1) * ux, number(n, 1)), kTol);
}

TEST(Readout, MomentsMatchMatrixExpectations) {
    const int n = 4;
    FockState psi = random_state(n, std::nullopt, 21);
    Vec v = to_vec(psi);
    Setting setting{1, {{0, 1, Basis::X}, {2, 3, Basis::Y}}};
    std::vector<Observable> factors{Observable::pair(ObsKind::X, 0, 1), Observable::pair(ObsKind::Y, 2, 3)};
    Mat op = spin(n, 0, 1).x * spin(n, 2, 3).y;
    double expected = (v.adjoint() * op * v)(0).real();
    EXPECT_NEAR(expectation_moments(psi, setting, factors), expected, kTol);

    std::vector<Observable> bad{Observable::pair(ObsKind::Y, 0, 1)};
    EXPECT_THROW(expectation_moments(psi, setting, bad), std::invalid_argument);

    auto probs = readout_distribution(psi, setting);
    double total = 0;
    for (double p : probs) {
        total += p;
    }
    EXPECT_NEAR(total, 1.0, kTol);
}

TEST(Correlators, DirectValuesMatchMatrices) {
    const int n = 5;
    FockState psi = random_state(n, std::nullopt, 13);
    Vec v = to_vec(psi);
    auto ev = [&](const Mat &m) { return Complex((v.adjoint() * m * v)(0)); };
    auto b = [&](int k) { return annihilator(n, k); };
    auto bd = [&](int k) { Mat m = annihilator(n, k).adjoint(); return m; };

    EXPECT_LT(std::abs(direct_correlator(psi, number_correlator(2)) - ev(number(n, 2))), kTol);
    EXPECT_LT(std::abs(direct_correlator(psi, two_point(3, 1)) - ev(bd(3) * b(1))), kTol);
    EXPECT_LT(std::abs(direct_correlator(psi, nn_correlator(0, 4)) - ev(number(n, 0) * number(n, 4))), kTol);
    EXPECT_LT(std::abs(direct_correlator(psi, n_bb_correlator(2, 0, 3)) - ev(number(n, 2) * bd(0) * b(3))), kTol);
    // Every ordering of four distinct modes, through its canonical form.
    std::array<int, 4> m{0, 1, 3, 4};
    do {
        CorrelatorSpec spec = canonicalize_fourpoint(m[0], m[1], m[2], m[3]);
        Complex expected = ev(bd(m[0]) * b(m[1]) * bd(m[2]) * b(m[3]));
        EXPECT_LT(std::abs(direct_correlator(psi, spec) - expected), kTol);
    } while (std::next_permutation(m.begin(), m.end()));
}

TEST(States, RandomStatesAreNormalisedAndRespectSectors) {
    FockState full = random_state(6, std::nullopt, 1);
    EXPECT_NEAR(full.norm(), 1.0, kTol);
    FockState sector = random_state(6, 3, 1);
    EXPECT_NEAR(sector.norm(), 1.0, kTol);
    for (std::uint64_t s = 0; s < sector.dimension(); s++) {
        if (__builtin_popcountll(s) != 3) {
            EXPECT_EQ(sector[s], Complex(0.0));
        }
    }
    EXPECT_NE(random_state(6, std::nullopt, 1).amplitudes(), random_state(6, std::nullopt, 2).amplitudes());
    EXPECT_THROW(FockState(kMaxDenseModes + 1), std::invalid_argument);
}

TEST(Layers, OverlappingPairsAreRejected) {
    FockState psi(4);
    GateLayer layer;
    layer.tunnelling = {{0, 1, 0.1, 0.2, 0.3}, {1, 2, 0.1, 0.2, 0.3}};
    EXPECT_THROW(apply_layer(psi, layer), std::invalid_argument);
    GateLayer ok = compile_setting(Setting{1, {{0, 1, Basis::X}, {2, 3, Basis::Y}}});
    EXPECT_EQ(ok.tunnelling.size(), 2u);
    EXPECT_NO_THROW(apply_layer(psi, ok));
}

TEST(Sampling, CountsSumToShotsAndFormatAsCsv) {
    FockState psi = FockState::basis(3, 0b101);
    Setting none{1, {}};
    Counts c = sample_setting(psi, none, 100, 7);
    ASSERT_EQ(c.size(), 1u);
    EXPECT_EQ(c.at(0b101), 100);
    std::ostringstream out;
    write_counts_csv(out, c, 3);
    EXPECT_EQ(out.str(), "bitstring,count\n101,100\n");
    FockState mixed = random_state(3, std::nullopt, 4);
    Counts d = sample_setting(mixed, Setting{1, {{0, 2, Basis::Y}}}, 1000, 8);
    long long total = 0;
    for (auto [k, v] : d) {
        total += v;
    }
    EXPECT_EQ(total, 1000);
    EXPECT_EQ(sample_setting(mixed, none, 50, 9), sample_setting(mixed, none, 50, 9));
}

}  // namespace
}  // namespace fermisched
