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

#include "nmw/quantifier.hpp"

#include <cmath>
#include <sstream>

#include "nmw/errors.hpp"

namespace nmw {

void TimeSeries::validate() const {
    if (times.size() != values.size()) throw ConfigError("TimeSeries: times and values differ in length");
    for (std::size_t i = 1; i < times.size(); ++i)
        if (!(times[i] > times[i - 1]))
            throw ConfigError("TimeSeries: times not strictly increasing at index " + std::to_string(i));
}

double quantumness(const ComplexMatrix& v, const DensityMatrix& rho) {
    return hs_norm_sq(commutator(v, rho.matrix()));
}

void require_unital(const LindbladGenerator& gen, std::span<const double> times) {
    for (double t : times) {
        const double defect = unitality_defect(gen, t);
        if (defect > kUnitalityTol) {
            std::ostringstream msg;
            msg << "generator is not unital at t = " << t << " (|rhs(I/d)| = " << defect
                << "); the RS quantifier needs unital dynamics";
            throw ConfigError(msg.str());
        }
    }
}

std::vector<double> uniform_grid(double t_max, double dt) {
    if (!(dt > 0.0)) throw ConfigError("dt must be positive");
    if (!(t_max > 0.0)) throw ConfigError("t_max must be positive");
    const auto n = static_cast<std::size_t>(std::ceil(t_max / dt - 1e-9));
    std::vector<double> grid(n + 1);
    for (std::size_t k = 0; k <= n; ++k) grid[k] = static_cast<double>(k) * dt;
    return grid;
}

TimeSeries rs_trajectory(const LindbladGenerator& gen, const DensityMatrix& rho0, const BlochDirections& dirs,
                         double t_max, double dt, Execution exec) {
    if (gen.dim() != 2) throw ConfigError("rs_trajectory: qubit generator required");
    const std::vector<double> grid = uniform_grid(t_max, dt);
    require_unital(gen, grid);
    const std::vector<DensityMatrix> states = state_trajectory(gen, rho0, 0.0, dt, grid.size() - 1);
    const ObservablePair pair = dirs.pair();

    TimeSeries out;
    out.times = grid;
    out.values = indexed_map<double>(states.size(), [&](std::size_t k) { return rs_lhs(pair, states[k]); }, exec);
    return out;
}

TimeSeries linear_entropy_trajectory(const LindbladGenerator& gen, const DensityMatrix& rho0, double t_max,
                                     double dt) {
    const std::vector<double> grid = uniform_grid(t_max, dt);
    const std::vector<DensityMatrix> states = state_trajectory(gen, rho0, 0.0, dt, grid.size() - 1);
    TimeSeries out;
    out.times = grid;
    out.values.reserve(states.size());
    for (const auto& s : states) out.values.push_back(linear_entropy(s));
    return out;
}

double rs_rate_analytic(const LindbladGenerator& gen, const DensityMatrix& rho, const BlochDirections& dirs,
                        double t) {
    if (gen.dim() != 2 || rho.dim() != 2) throw ConfigError("rs_rate_analytic: qubit generator and state required");
    const double times[] = {t};
    require_unital(gen, times);
    double weighted = 0.0;
    for (const auto& ch : gen.channels()) {
        const double gamma = ch.rate(t);
        if (gamma != 0.0) weighted += gamma * quantumness(ch.op, rho);
    }
    const double c = dirs.overlap();
    constexpr double d = 2.0;
    return d / (d - 1.0) * (1.0 - c * c) * weighted;
}

double nm_quantifier(const TimeSeries& series) {
    series.validate();
    if (series.values.size() < 2) throw ConfigError("nm_quantifier: need at least two samples");
    double total = 0.0;
    for (std::size_t k = 1; k < series.values.size(); ++k) {
        const double step = series.values[k] - series.values[k - 1];
        if (step < 0.0) total -= step;
    }
    return total;
}

double purity_quantifier(const LindbladGenerator& gen, const DensityMatrix& rho0, double t_max, double dt) {
    if (gen.dim() != 2) throw ConfigError("purity_quantifier: qubit generator required");
    require_unital(gen, uniform_grid(t_max, dt));
    return nm_quantifier(linear_entropy_trajectory(gen, rho0, t_max, dt));
}

}  // namespace nmw
