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
#include "nmw/quantifier.hpp"
#include "support.hpp"

using namespace nmw;
using nmw::testing::Rng;

namespace {

LindbladGenerator unital_constant(double deph, double pair, double u) {
    return spinbath_generator({RateFunction::constant(u), RateFunction::constant(deph), RateFunction::constant(pair),
                               RateFunction::constant(pair)});
}

// Five-point central difference at index k.
double stencil(const std::vector<double>& v, std::size_t k, double h) {
    return (v[k - 2] - 8.0 * v[k - 1] + 8.0 * v[k + 1] - v[k + 2]) / (12.0 * h);
}

}  // namespace

TEST_CASE("quantumness") {
    CHECK(quantumness(pauli::z(), DensityMatrix::plus_state()) == doctest::Approx(2.0));
    CHECK(quantumness(pauli::x(), DensityMatrix::plus_state()) == doctest::Approx(0.0));
    CHECK(quantumness(pauli::z(), DensityMatrix::maximally_mixed(2)) == 0.0);
}

TEST_CASE("uniform grid") {
    const auto g = uniform_grid(1.0, 0.1);
    REQUIRE(g.size() == 11);
    CHECK(g.front() == 0.0);
    CHECK(g.back() == doctest::Approx(1.0));
    CHECK(uniform_grid(1.05, 0.1).size() == 12);
    CHECK_THROWS_AS(uniform_grid(1.0, 0.0), ConfigError);
    CHECK_THROWS_AS(uniform_grid(0.0, 0.1), ConfigError);
}

TEST_CASE("series validation and accumulation") {
    TimeSeries s;
    s.times = {0.0, 1.0, 2.0, 3.0, 4.0};
    s.values = {0.0, 1.0, 0.5, 2.0, 1.0};
    CHECK(nm_quantifier(s) == doctest::Approx(1.5));
    s.values.pop_back();
    CHECK_THROWS_AS(nm_quantifier(s), ConfigError);
    TimeSeries unsorted{{0.0, 0.0}, {1.0, 2.0}, {}};
    CHECK_THROWS_AS(nm_quantifier(unsorted), ConfigError);
    TimeSeries single{{0.0}, {1.0}, {}};
    CHECK_THROWS_AS(nm_quantifier(single), ConfigError);
}

TEST_CASE("non-unital or non-qubit generators are rejected") {
    const LindbladGenerator damping(2, {{pauli::minus(), RateFunction::constant(0.3), "dis"}});
    const BlochDirections dirs({1.0, 0.0, 0.0}, {0.0, 1.0, 0.0});
    try {
        (void)rs_trajectory(damping, DensityMatrix::plus_state(), dirs, 1.0, 0.1);
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(std::string(e.what()).find("t = 0") != std::string::npos);
    }
    CHECK_THROWS_AS(rs_rate_analytic(damping, DensityMatrix::plus_state(), dirs, 0.0), ConfigError);
    CHECK_THROWS_AS(purity_quantifier(damping, DensityMatrix::plus_state(), 1.0, 0.1), ConfigError);

    const LindbladGenerator qutrit(3, {});
    CHECK_THROWS_AS(rs_rate_analytic(qutrit, DensityMatrix::maximally_mixed(3), dirs, 0.0), ConfigError);
}

TEST_CASE("constant dephasing trajectory matches the closed form") {
    const double g = 0.3;
    const LindbladGenerator gen = unital_constant(g, 0.0, 0.7);
    const BlochDirections dirs({1.0, 0.0, 0.0}, {1.0, 1.0, 0.0});
    const double c2 = 0.5;
    const TimeSeries r = rs_trajectory(gen, DensityMatrix::plus_state(), dirs, 3.0, 1e-3);
    for (std::size_t k = 0; k < r.times.size(); k += 100) {
        const double t = r.times[k];
        CHECK(r.values[k] == doctest::Approx((1.0 - c2) * (1.0 - std::exp(-4.0 * g * t))).epsilon(1e-10));
    }
}

TEST_CASE("Hamiltonian-only dynamics leave the functional constant") {
    const LindbladGenerator gen = unital_constant(0.0, 0.0, 1.3);
    const BlochDirections dirs({1.0, 0.0, 0.0}, {0.0, 1.0, 0.0});
    const DensityMatrix rho0 = DensityMatrix::from_bloch(0.3, 0.2, 0.1);
    const TimeSeries r = rs_trajectory(gen, rho0, dirs, 2.0, 1e-2);
    // RK4 is not exactly purity-preserving under a unitary flow; the drift is O(h^5) per step.
    for (double v : r.values) CHECK(v == doctest::Approx(r.values.front()).epsilon(1e-9));
    CHECK(nm_quantifier(r) < 1e-9);
    CHECK(rs_rate_analytic(gen, rho0, dirs, 0.5) == 0.0);
}

TEST_CASE("constant nonnegative rates: monotone, zero quantifier") {
    Rng rng(81);
    for (int trial = 0; trial < 20; ++trial) {
        const LindbladGenerator gen =
            unital_constant(rng.uniform(0.0, 1.0), rng.uniform(0.0, 1.0), rng.uniform(-2.0, 2.0));
        const BlochDirections dirs(nmw::testing::random_direction(rng), nmw::testing::random_direction(rng));
        const DensityMatrix rho0 = nmw::testing::random_bloch_state(rng);
        const TimeSeries r = rs_trajectory(gen, rho0, dirs, 3.0, 1e-2);
        for (std::size_t k = 1; k < r.values.size(); ++k) CHECK(r.values[k] - r.values[k - 1] >= -1e-9);
        CHECK(nm_quantifier(r) < 1e-8);
    }
}

TEST_CASE("analytic rate agrees with finite differences on the demo family") {
    const SpinBathDemo demo;
    const LindbladGenerator gen = spinbath_generator(spinbath_demo(demo));
    const BlochDirections dirs({1.0, 0.0, 0.0}, {0.6, 0.8, 0.0});
    const DensityMatrix rho0 = DensityMatrix::from_bloch(0.5, 0.5, 0.5);
    const double h = 1e-3;
    const TimeSeries r = rs_trajectory(gen, rho0, dirs, 4.0, h);
    const auto states = state_trajectory(gen, rho0, 0.0, h, r.times.size() - 1);
    const auto window = *demo.negative_window();

    double worst = 0.0;
    for (std::size_t k = 2; k + 2 < r.times.size(); ++k) {
        const double t = r.times[k];
        if (std::abs(t - window.first) < 2.0 * h || std::abs(t - window.second) < 2.0 * h) continue;
        const double analytic = rs_rate_analytic(gen, states[k], dirs, t);
        worst = std::max(worst, std::abs(stencil(r.values, k, h) - analytic) / std::abs(analytic));
    }
    CHECK(worst < 1e-4);
}

TEST_CASE("negative-rate window drives the quantifier") {
    const SpinBathDemo demo;
    const LindbladGenerator gen = spinbath_generator(spinbath_demo(demo));
    const BlochDirections dirs({1.0, 0.0, 0.0}, {0.0, 0.0, 1.0});
    const DensityMatrix rho0 = DensityMatrix::plus_state();
    const double h = 1e-2;
    const TimeSeries r = rs_trajectory(gen, rho0, dirs, 5.0, h);
    const auto window = *demo.negative_window();

    CHECK(nm_quantifier(r) > 1e-3);
    for (std::size_t k = 1; k < r.values.size(); ++k) {
        if (r.values[k] < r.values[k - 1]) {
            CHECK(r.times[k] > window.first - h);
            CHECK(r.times[k - 1] < window.second + h);
        }
    }
    CHECK(std::abs(nm_quantifier(r) - purity_quantifier(gen, rho0, 5.0, h)) < 1e-6);
}
