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

// quantifier.hpp: RS uncertainty of evolving qubit states under unital dynamics
//
// For A = r.sigma, B = t.sigma the RS functional of a qubit factorizes as
// R = [1 - (r.t)^2] S_l(rho), and for a unital generator
//   dR/dt = 2 [1 - (r.t)^2] sum_i Gamma_i(t) ||[L_i, rho]||_HS^2.
// R can only decrease while some Gamma_i(t) < 0; the accumulated decrease is
// the quantifier N = -int_{dR/dt < 0} dR/dt dt.

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "nmw/dynamics.hpp"
#include "nmw/parallel.hpp"
#include "nmw/uncertainty.hpp"

namespace nmw {

inline constexpr double kUnitalityTol = 1e-10;

struct TimeSeries {
    std::vector<double> times;   // strictly increasing
    std::vector<double> values;
    std::vector<std::pair<std::string, std::string>> metadata;

    // Throws ConfigError if lengths differ or times are not strictly increasing.
    void validate() const;
};

// ||[V, rho]||_HS^2
double quantumness(const ComplexMatrix& v, const DensityMatrix& rho);

// Throws ConfigError naming the first time at which rhs(I/d) exceeds kUnitalityTol.
void require_unital(const LindbladGenerator& gen, std::span<const double> times);

// Uniform grid 0, dt, ..., n dt with n = ceil(t_max / dt).
std::vector<double> uniform_grid(double t_max, double dt);

// R(A, B, rho(t)) on uniform_grid(t_max, dt). Rejects non-unital generators.
TimeSeries rs_trajectory(const LindbladGenerator& gen, const DensityMatrix& rho0, const BlochDirections& dirs,
                         double t_max, double dt, Execution exec = Execution::Serial);

// S_l(rho(t)) on the same grid.
TimeSeries linear_entropy_trajectory(const LindbladGenerator& gen, const DensityMatrix& rho0, double t_max,
                                     double dt);

// Closed-form dR/dt at time t for a qubit under a unital generator.
double rs_rate_analytic(const LindbladGenerator& gen, const DensityMatrix& rho, const BlochDirections& dirs,
                        double t);

// Sum of -(R_{k+1} - R_k) over decreasing steps; always >= 0.
double nm_quantifier(const TimeSeries& series);

// Same accumulation applied to S_l(rho(t)).
double purity_quantifier(const LindbladGenerator& gen, const DensityMatrix& rho0, double t_max, double dt);

}  // namespace nmw
