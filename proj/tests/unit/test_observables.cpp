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

#include <gtest/gtest.h>

#include "fermisched/observables.hpp"

namespace fermisched {
namespace {

int choose(int n, int k) {
    long long r = 1;
    for (int t = 0; t < k; t++) {
        r = r * (n - t) / (t + 1);
    }
    return static_cast<int>(r);
}

TEST(Dyadic, ArithmeticStaysOnQuarterLattice) {
    auto half = DyadicComplex::from_parts(0.5, 0.0);
    auto i = DyadicComplex::imag_unit();
    EXPECT_EQ(half * half, DyadicComplex::from_parts(0.25, 0.0));
    EXPECT_EQ(i * i, -DyadicComplex::one());
    EXPECT_EQ(i.conj(), -i);
    EXPECT_THROW(DyadicComplex::from_parts(0.1, 0.0), std::invalid_argument);
    auto quarter = DyadicComplex::from_parts(0.25, 0.0);
    EXPECT_THROW(quarter * quarter, std::domain_error);
}

TEST(Observable, Compatibility) {
    auto n0 = Observable::number(0);
    auto n1 = Observable::number(1);
    auto x01 = Observable::pair(ObsKind::X, 0, 1);
    auto y01 = Observable::pair(ObsKind::Y, 0, 1);
    auto x23 = Observable::pair(ObsKind::X, 2, 3);
    auto y12 = Observable::pair(ObsKind::Y, 1, 2);
    EXPECT_TRUE(compatible(n0, n1));
    EXPECT_FALSE(compatible(n0, n0));
    EXPECT_FALSE(compatible(n0, x01));
    EXPECT_TRUE(compatible(Observable::number(2), x01));
    EXPECT_FALSE(compatible(x01, y01));
    EXPECT_TRUE(compatible(x01, x23));
    EXPECT_FALSE(compatible(x01, y12));
    EXPECT_THROW(Observable::pair(ObsKind::X, 2, 1), std::invalid_argument);
}

TEST(Observable, LabelsRoundTrip) {
    for (auto o : {Observable::number(4), Observable::pair(ObsKind::X, 0, 3), Observable::pair(ObsKind::Y, 2, 5)}) {
        EXPECT_EQ(parse_label(to_label(o)), o);
    }
    EXPECT_EQ(to_label(Observable::number(0)), "N:1");
    EXPECT_EQ(to_label(Observable::pair(ObsKind::X, 0, 1)), "X:1:2");
    EXPECT_THROW(parse_label("Z:1:2"), std::invalid_argument);
}

TEST(Correlator, FourPointCanonicalForms) {
    // Already canonical.
    auto c = canonicalize_fourpoint(0, 1, 2, 3);
    EXPECT_EQ(c.idx, (std::array<int, 4>{0, 1, 2, 3}));
    EXPECT_EQ(c.sign, 1);
    EXPECT_FALSE(c.conjugate);
    // Swapping the creation indices flips the sign.
    c = canonicalize_fourpoint(2, 1, 0, 3);
    EXPECT_EQ(c.idx, (std::array<int, 4>{0, 1, 2, 3}));
    EXPECT_EQ(c.sign, -1);
    // Lowest mode on an annihilator means complex conjugation.
    c = canonicalize_fourpoint(1, 0, 3, 2);
    EXPECT_EQ(c.idx, (std::array<int, 4>{0, 1, 2, 3}));
    EXPECT_TRUE(c.conjugate);
    EXPECT_TRUE(is_canonical(c.canonical()));
    EXPECT_THROW(canonicalize_fourpoint(0, 0, 1, 2), std::invalid_argument);
}

TEST(Correlator, EnumerationCounts) {
    for (int n = 2; n <= 8; n++) {
        auto specs = enumerate_canonical_fourpoint(n);
        std::size_t expected = choose(n, 2) + n * choose(n - 1, 2) + 2 * choose(n, 4);
        EXPECT_EQ(specs.size(), expected) << n;
        for (const auto &s : specs) {
            EXPECT_TRUE(is_canonical(s));
            EXPECT_LT(s.max_mode(), n);
        }
    }
}

TEST(Correlator, RequirementsArePairwiseCompatible) {
    for (const auto &s : enumerate_canonical_fourpoint(5)) {
        auto reqs = requirements(s);
        EXPECT_FALSE(reqs.empty());
        for (const auto &factors : reqs) {
            for (std::size_t a = 0; a < factors.size(); a++) {
                for (std::size_t b = a + 1; b < factors.size(); b++) {
                    EXPECT_TRUE(compatible(factors[a], factors[b]));
                }
            }
        }
    }
    EXPECT_EQ(requirements(nn_correlator(0, 1)),
              (std::vector<std::vector<Observable>>{{Observable::number(0), Observable::number(1)}}));
}

TEST(Correlator, TermsFollowSignAndConjugation) {
    CorrelatorSpec base{CorrelatorKind::BBBB, {0, 1, 2, 3}, 1, false};
    FactorAssignment assignment;
    for (const auto &f : requirements(base)) {
        assignment[f] = 1;
    }
    auto plain = reconstruction_terms(base, assignment);
    CorrelatorSpec flipped = base;
    flipped.sign = -1;
    flipped.conjugate = true;
    auto other = reconstruction_terms(flipped, assignment);
    ASSERT_EQ(plain.size(), other.size());
    for (std::size_t t = 0; t < plain.size(); t++) {
        EXPECT_EQ(other[t].coefficient, -plain[t].coefficient.conj());
    }
    EXPECT_THROW(reconstruction_terms(base, {}), std::invalid_argument);
}

}  // namespace
}  // namespace fermisched
