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
#include <numeric>

#include "doctest.h"
#include "nmw/errors.hpp"
#include "nmw/uncertainty.hpp"
#include "support.hpp"

using namespace nmw;
using nmw::testing::Rng;

namespace {

// Var A Var B - |Tr[state (A - <A>)(B - <B>)]|^2, the complex-covariance form of the same functional.
double rs_covariance_form(const HermitianMatrix& a, const HermitianMatrix& b, const HermitianMatrix& state) {
    const std::size_t d = state.dim();
    const cplx ea = trace_product(state, a), eb = trace_product(state, b);
    const ComplexMatrix da = a.matrix() - ComplexMatrix::identity(d) * ea;
    const ComplexMatrix db = b.matrix() - ComplexMatrix::identity(d) * eb;
    const double va = trace_product(state, da * da).real();
    const double vb = trace_product(state, db * db).real();
    return va * vb - std::norm(trace_product(state, da * db));
}

HermitianMatrix conjugate(const ComplexMatrix& u, const HermitianMatrix& m) {
    return HermitianMatrix::symmetrized(u * m.matrix() * u.adjoint());
}

}  // namespace

TEST_CASE("expectation and variance on basis states") {
    const std::vector<cplx> zero{1.0, 0.0};
    const DensityMatrix rho = DensityMatrix::pure(zero);
    CHECK(expectation(HermitianMatrix(pauli::z()), rho) == 1.0);
    CHECK(variance(HermitianMatrix(pauli::z()), rho) == 0.0);
    CHECK(variance(HermitianMatrix(pauli::x()), rho) == 1.0);
    CHECK(linear_entropy(rho) == doctest::Approx(0.0));
    CHECK(linear_entropy(DensityMatrix::maximally_mixed(4)) == doctest::Approx(1.0));
    CHECK_THROWS_AS(linear_entropy(rho, 1), ConfigError);
}

TEST_CASE("input checks") {
    const HermitianMatrix x(pauli::x());
    CHECK_THROWS_AS(expectation(x, DensityMatrix::maximally_mixed(3)), ConfigError);
    CHECK_THROWS_AS(expectation(x, HermitianMatrix(ComplexMatrix::identity(2))), ConfigError);
    CHECK_THROWS_AS(ObservablePair(x, HermitianMatrix(ComplexMatrix::identity(3))), ConfigError);
    const std::vector<double> neg{1.2, -0.2};
    CHECK_THROWS_AS(validate_state(HermitianMatrix(ComplexMatrix::diagonal(neg))), ConfigError);
    CHECK_NOTHROW(validate_state(DensityMatrix::plus_state()));
    CHECK_THROWS_AS(BlochDirections({0.0, 0.0, 0.0}, {1.0, 0.0, 0.0}), ConfigError);

    const ObservablePair def = ObservablePair::choi_default();
    CHECK(def.a.matrix() == kron(pauli::x(), pauli::y()));
    CHECK(def.b.matrix() == kron(pauli::x(), pauli::x()));
}

TEST_CASE("worked qubit example: 0.375") {
    const double s = 1.0 / std::sqrt(2.0);
    const BlochDirections dirs({1.0, 0.0, 0.0}, {s, 0.0, s});
    const DensityMatrix rho = DensityMatrix::from_bloch(0.0, 0.0, 0.5);
    CHECK(rs_lhs(dirs.pair(), rho) == doctest::Approx(0.375).epsilon(1e-14));
    CHECK(rs_factorized(dirs, rho) == doctest::Approx(0.375).epsilon(1e-14));
    CHECK(linear_entropy(rho) == doctest::Approx(0.75));
    CHECK(dirs.overlap() == doctest::Approx(s));
}

TEST_CASE("orthogonal negative projectors: sum relation catches what the product form misses") {
    const std::vector<double> diag{1.4, -0.2, -0.2};
    const HermitianMatrix state(ComplexMatrix::diagonal(diag));
    const std::vector<double> e1{0.0, 1.0, 0.0}, e2{0.0, 0.0, 1.0};
    const ObservablePair w(HermitianMatrix(ComplexMatrix::diagonal(e1)), HermitianMatrix(ComplexMatrix::diagonal(e2)));

    CHECK(variance(w.a, state) == doctest::Approx(-0.24).epsilon(1e-14));
    const SumUncertainty sum = sum_uncertainty(w, state);
    CHECK(sum.lhs == doctest::Approx(-0.48).epsilon(1e-14));
    CHECK(sum.rhs == 0.0);
    CHECK(sum.violated());

    const double l1 = -0.2, l2 = -0.2;
    CHECK(std::abs(rs_lhs(w, state) - l1 * l2 * (1.0 - (l1 + l2))) < 1e-12);
    CHECK(rs_lhs(w, state) > 0.0);
}

TEST_CASE("product form matches the complex-covariance form on unit-trace Hermitian matrices") {
    Rng rng(61);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t d = 2 + rng.index(4);
        const HermitianMatrix a = nmw::testing::random_hermitian(rng, d);
        const HermitianMatrix b = nmw::testing::random_hermitian(rng, d);
        const HermitianMatrix state = nmw::testing::random_nonpositive_unit_trace(rng, d, 0.0);
        const double expected = rs_covariance_form(a, b, state);
        CHECK(std::abs(rs_lhs(ObservablePair(a, b), state) - expected) < 1e-10 * std::max(1.0, std::abs(expected)));
    }
}

TEST_CASE("both relations hold on physical states") {
    Rng rng(62);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t d = 2 + rng.index(4);
        const ObservablePair pair(nmw::testing::random_hermitian(rng, d), nmw::testing::random_hermitian(rng, d));
        const DensityMatrix rho = nmw::testing::random_density(rng, d);
        CHECK(rs_lhs(pair, rho) > -1e-10);
        CHECK_FALSE(sum_uncertainty(pair, rho).violated());
    }
}

TEST_CASE("pure qubit states saturate the product form") {
    Rng rng(63);
    for (int trial = 0; trial < 200; ++trial) {
        const auto n = nmw::testing::random_direction(rng);
        const DensityMatrix rho = DensityMatrix::from_bloch(n[0], n[1], n[2]);
        const ObservablePair pair(nmw::testing::random_hermitian(rng, 2), nmw::testing::random_hermitian(rng, 2));
        CHECK(std::abs(rs_lhs(pair, rho)) < 1e-10);
    }
}

TEST_CASE("functionals are invariant under joint unitary conjugation") {
    Rng rng(64);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t d = 2 + rng.index(3);
        const HermitianMatrix a = nmw::testing::random_hermitian(rng, d);
        const HermitianMatrix b = nmw::testing::random_hermitian(rng, d);
        const HermitianMatrix state = nmw::testing::random_nonpositive_unit_trace(rng, d, 0.0);
        const ComplexMatrix u = nmw::testing::random_unitary(rng, d);
        const ObservablePair before(a, b), after(conjugate(u, a), conjugate(u, b));
        const HermitianMatrix moved = conjugate(u, state);
        CHECK(rs_lhs(after, moved) == doctest::Approx(rs_lhs(before, state)).epsilon(1e-9));
        CHECK(sum_uncertainty(after, moved).lhs == doctest::Approx(sum_uncertainty(before, state).lhs).epsilon(1e-9));
        CHECK(sum_uncertainty(after, moved).rhs ==
              doctest::Approx(sum_uncertainty(before, state).rhs).epsilon(1e-9));
    }
}

TEST_CASE("variance convexity gap equals the spread of component means") {
    Rng rng(65);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t d = 2 + rng.index(3), n_obs = 1 + rng.index(3), n_comp = 1 + rng.index(4);
        std::vector<HermitianMatrix> obs, comps;
        for (std::size_t i = 0; i < n_obs; ++i) obs.push_back(nmw::testing::random_hermitian(rng, d));
        std::vector<double> w(n_comp);
        double total = 0.0;
        for (double& x : w) total += (x = rng.uniform(0.01, 1.0));
        for (double& x : w) x /= total;
        // Renormalize exactly so the weights pass the 1e-12 sum check.
        w.back() = 1.0 - std::accumulate(w.begin(), w.end() - 1, 0.0);
        ComplexMatrix mixture(d);
        for (std::size_t k = 0; k < n_comp; ++k) {
            comps.push_back(nmw::testing::random_density(rng, d));
            mixture += comps.back().matrix() * w[k];
        }
        const HermitianMatrix mixed = HermitianMatrix::symmetrized(mixture);
        double spread = 0.0;
        for (const auto& a : obs) {
            const double mean = expectation(a, mixed);
            for (std::size_t k = 0; k < n_comp; ++k) spread += w[k] * std::pow(expectation(a, comps[k]) - mean, 2);
        }
        const double gap = variance_convexity_gap(obs, comps, w);
        CHECK(gap >= -1e-10);
        CHECK(std::abs(gap - spread) < 1e-10);
    }

    const std::vector<HermitianMatrix> obs{HermitianMatrix(pauli::x())};
    const std::vector<HermitianMatrix> comps{DensityMatrix::plus_state(), DensityMatrix::maximally_mixed(2)};
    const std::vector<double> neg{1.5, -0.5}, short_sum{0.5, 0.4}, one{1.0};
    CHECK_THROWS_AS(variance_convexity_gap(obs, comps, neg), ConfigError);
    CHECK_THROWS_AS(variance_convexity_gap(obs, comps, short_sum), ConfigError);
    CHECK_THROWS_AS(variance_convexity_gap(obs, comps, one), ConfigError);
}

TEST_CASE("qubit factorization identity") {
    Rng rng(66);
    for (int trial = 0; trial < 1000; ++trial) {
        const BlochDirections dirs(nmw::testing::random_direction(rng), nmw::testing::random_direction(rng));
        const DensityMatrix rho = nmw::testing::random_bloch_state(rng);
        CHECK(std::abs(rs_lhs(dirs.pair(), rho) - rs_factorized(dirs, rho)) < 1e-10);
    }
    // Unnormalized input directions are normalized first.
    const BlochDirections scaled({3.0, 0.0, 0.0}, {0.0, 0.0, 0.5});
    CHECK(scaled.overlap() == 0.0);
    CHECK(scaled.a().matrix() == pauli::x());
    CHECK(rs_factorized(scaled, DensityMatrix::maximally_mixed(2)) == doctest::Approx(1.0));
    CHECK_THROWS_AS(rs_factorized(scaled, DensityMatrix::maximally_mixed(3)), ConfigError);
}
