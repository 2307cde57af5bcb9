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

// models.hpp: pure dephasing with a time-dependent rate, and the central-spin (spin-bath) master equation

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "nmw/dynamics.hpp"
#include "nmw/rate.hpp"

namespace nmw {

// drho/dt = gamma(t) (sigma_z rho sigma_z - rho) with
//   gamma(t) = 2 lambda gamma0 sinh(t g / 2) / (g cosh(t g / 2) + lambda sinh(t g / 2)),
//   g = sqrt(lambda^2 - 2 gamma0 lambda).
// gamma(t) takes negative values (and has poles) iff gamma0 > lambda / 2.
struct DephasingParams {
    double lambda = 1.0;
    double gamma0 = 0.4;

    // Throws ConfigError unless both are positive and finite.
    void validate() const;
    bool non_markovian() const noexcept { return gamma0 > 0.5 * lambda; }
};

// Evaluated in complex arithmetic, so g^2 < 0 needs no special branch.
// Throws SingularRateError at a pole of gamma(t).
double dephasing_rate(const DephasingParams& p, double t);

// Poles of gamma(t) in (0, t_max], ascending. Empty when gamma0 <= lambda / 2.
std::vector<double> dephasing_poles(const DephasingParams& p, double t_max);
std::optional<double> dephasing_first_pole(const DephasingParams& p);

// int_a^b gamma(s) ds by adaptive Simpson (absolute tolerance 1e-12).
// Throws SingularRateError if [a, b] contains a pole.
double dephasing_rate_integral(const DephasingParams& p, double a, double b);

RateFunction dephasing_rate_function(const DephasingParams& p);
LindbladGenerator dephasing_generator(const DephasingParams& p);

// C = 1/2 [|00><00| + |11><11| + q (|00><11| + |11><00|)], q = exp(-2 integral).
// Eigenvalues (1 + q)/2, (1 - q)/2, 0, 0.
ChoiState dephasing_choi_from_integral(double rate_integral, TimeInterval interval);
ChoiState dephasing_choi_exact(const DephasingParams& p, double t, double eps);

// drho/dt = i U(t) [rho, sigma_z] + G_deph (sigma_z rho sigma_z - rho)
//         + G_dis D[sigma_-] rho + G_abs D[sigma_+] rho
struct SpinBathParams {
    RateFunction unitary;
    RateFunction dephasing;
    RateFunction dissipation;
    RateFunction absorption;
};

// Channels in order (sigma_z, G_deph), (sigma_-, G_dis), (sigma_+, G_abs);
// Hamiltonian U(t) sigma_z.
LindbladGenerator spinbath_generator(const SpinBathParams& p);

// Demonstration rates for the spin-bath structure. These are NOT the microscopic
// spin-bath rates; they exist to exercise the detectors. Every rate shares the
// modulation f(t) = 1 - depth * exp(-((t - center) / width)^2), so all of them
// are negative on the same window when depth > 1. Setting dissipation ==
// absorption gives unital dynamics.
struct SpinBathDemo {
    double dephasing = 0.5;
    double dissipation = 0.25;
    double absorption = 0.25;
    double unitary = 1.0;
    double center = 2.0;
    double width = 0.5;
    double depth = 2.0;

    double modulation(double t) const;
    // Open interval where f(t) < 0, if any.
    std::optional<std::pair<double, double>> negative_window() const;
};

SpinBathParams spinbath_demo(const SpinBathDemo& demo);

}  // namespace nmw
