// Copyright 2026 The nmwitness Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>

#include "doctest.h"
#include "nmw/errors.hpp"
#include "nmw/models.hpp"
#include "nmw/witnesses.hpp"
#include "support.hpp"

using namespace nmw;
using nmw::testing::Rng;

namespace {

HermitianMatrix dephasing_choi_q(double q) {
    return dephasing_choi_from_integral(-std::log(q) / 2.0, {0.0, 0.01}).hermitian();
}

}  // namespace

TEST_CASE("negative eigenspace") {
    const auto neg = negative_eigenspace(dephasing_choi_q(1.2));
    REQUIRE(neg.size() == 1);
    CHECK(neg[0].value == doctest::Approx(-0.1).epsilon(1e-13));
    const double s = 1.0 / std::sqrt(2.0);
    const cplx overlap = s * neg[0].vector[0] - s * neg[0].vector[3];
    CHECK(std::abs(overlap) == doctest::Approx(1.0).epsilon(1e-13));

    const std::vector<double> diag{1.4, -0.2, -0.2};
    const auto two = negative_eigenspace(HermitianMatrix(ComplexMatrix::diagonal(diag)));
    REQUIRE(two.size() == 2);
    CHECK(two[0].value == -0.2);
    CHECK(two[1].value == -0.2);

    CHECK(negative_eigenspace(dephasing_choi_q(0.8)).empty());
}

TEST_CASE("constructed pair on the dephasing Choi state with q = 1.2") {
    const HermitianMatrix c = dephasing_choi_q(1.2);
    const RsViolatingPair pair = construct_rs_violating_pair(c);
    CHECK(pair.eigenvalue == doctest::Approx(-0.1).epsilon(1e-13));
    CHECK(variance(pair.h1, c) == doctest::Approx(-0.11).epsilon(1e-12));
    CHECK(variance(pair.h2, c) == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(rs_lhs(ObservablePair(pair.h1, pair.h2), c) == doctest::Approx(-0.33).epsilon(1e-12));
    CHECK(projective_witness_values(c).front() == doctest::Approx(-0.1).epsilon(1e-13));
    CHECK(variance_witness(c, pair.h1) == doctest::Approx(-0.11).epsilon(1e-12));
}

TEST_CASE("positive matrices admit no pair") {
    CHECK_THROWS_AS(construct_rs_violating_pair(dephasing_choi_q(0.5)), NotConstructibleError);
    CHECK_THROWS_AS(construct_rs_violating_pair(ChoiState::identity_channel(2)), ConfigError);
    const std::vector<double> tiny{1.0 + 1e-12, -1e-12};
    CHECK_THROWS_AS(construct_rs_violating_pair(HermitianMatrix(ComplexMatrix::diagonal(tiny))), NotConstructibleError);
}

TEST_CASE("pair construction succeeds on 1000 random non-positive matrices") {
    Rng rng(71);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t n = 4;
        const HermitianMatrix c = nmw::testing::random_nonpositive_unit_trace(rng, n);
        const RsViolatingPair pair = construct_rs_violating_pair(c);
        const double l = pair.eigenvalue;
        CHECK(l == doctest::Approx(hermitian_eig(c).eigenvalues.front()).epsilon(1e-12));

        // H1 is a rank-one projector; H2 is J - I in the eigenbasis, so H2^2 = (n - 2) H2 + (n - 1) I.
        CHECK(frobenius_distance(pair.h1.matrix() * pair.h1.matrix(), pair.h1) < 1e-12);
        CHECK(std::abs(trace(pair.h1).real() - 1.0) < 1e-12);
        const ComplexMatrix h2sq = pair.h2.matrix() * pair.h2.matrix();
        const ComplexMatrix expected = pair.h2.matrix() * static_cast<double>(n - 2) +
                                       ComplexMatrix::identity(n) * static_cast<double>(n - 1);
        CHECK(frobenius_distance(h2sq, expected) < 1e-11);

        CHECK(std::abs(variance(pair.h1, c) - (l - l * l)) < 1e-10);
        const double rs = rs_lhs(ObservablePair(pair.h1, pair.h2), c);
        CHECK(rs < 0.0);
        CHECK(std::abs(rs - (l - l * l) * static_cast<double>(n - 1)) < 1e-10);
    }
}

TEST_CASE("witness values are nonnegative on positive Choi matrices") {
    Rng rng(72);
    for (int trial = 0; trial < 500; ++trial) {
        const DensityMatrix c = nmw::testing::random_density(rng, 4);
        for (double v : projective_witness_values(c)) CHECK(v > -1e-12);
        const WitnessReport r = detect(c);
        CHECK(r.verdict == Verdict::MarkovianConsistent);
        CHECK(r.negative_count == 0);
        CHECK_FALSE(r.rs_pair_value.has_value());
        for (double v : r.variance_witness_values) CHECK(v > -1e-12);
    }
}

TEST_CASE("detect on the orthogonal-projector example") {
    const std::vector<double> diag{1.4, -0.2, -0.2};
    const HermitianMatrix c(ComplexMatrix::diagonal(diag));
    const WitnessReport r = detect(c);
    CHECK(r.verdict == Verdict::NonMarkovianDetected);
    CHECK(r.negative_count == 2);
    CHECK(r.min_eigenvalue == -0.2);
    REQUIRE(r.sum_pair_value.has_value());
    CHECK(r.sum_pair_value->lhs == doctest::Approx(-0.48).epsilon(1e-14));
    CHECK(r.sum_pair_value->rhs == 0.0);
    CHECK(r.sum_pair_value->violated());
    REQUIRE(r.rs_pair_value.has_value());
    CHECK(*r.rs_pair_value == doctest::Approx((-0.2 - 0.04) * 2.0).epsilon(1e-12));

    const SpectralDecomposition spec = hermitian_eig(c);
    const ObservablePair projectors(HermitianMatrix::symmetrized(spec.projector(0)),
                                    HermitianMatrix::symmetrized(spec.projector(1)));
    CHECK(std::abs(rs_lhs(projectors, c) - 0.056) < 1e-12);

    CHECK(witness_report_csv_row(r) ==
          "-0.2,2,-0.2;-0.2;1.4,-0.48,-0.48,0,-0.24;-0.24;-0.56,NON_MARKOVIAN_DETECTED");
    CHECK(witness_report_csv_header() ==
          "min_eigenvalue,negative_count,projective_values,rs_pair_value,sum_lhs,sum_rhs,"
          "variance_witness_values,verdict");
}

TEST_CASE("detect thresholds and verdict strings") {
    const std::vector<double> small{1.0 + 1e-10, -1e-10};
    const HermitianMatrix c(ComplexMatrix::diagonal(small));
    CHECK(detect(c).verdict == Verdict::MarkovianConsistent);
    CHECK(detect(c, 1e-11).verdict == Verdict::NonMarkovianDetected);
    CHECK_THROWS_AS(detect(c, 0.0), ConfigError);
    CHECK(to_string(Verdict::MarkovianConsistent) == "MARKOVIAN_CONSISTENT");
    CHECK(to_string(Verdict::NonMarkovianDetected) == "NON_MARKOVIAN_DETECTED");

    const WitnessReport one = detect(dephasing_choi_q(1.2));
    CHECK(one.negative_count == 1);
    CHECK_FALSE(one.sum_pair_value.has_value());
    REQUIRE(one.rs_pair_value.has_value());
    CHECK(*one.rs_pair_value == doctest::Approx(-0.33).epsilon(1e-12));
}
