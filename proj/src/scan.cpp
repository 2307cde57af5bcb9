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

#include "nmw/scan.hpp"

#include "nmw/quantifier.hpp"

namespace nmw {

ChoiScanRow choi_scan_row(const LindbladGenerator& gen, double t, const ObservablePair& obs,
                          const ChoiScanSettings& settings) {
    const ChoiState c = intermediate_choi(gen, t, settings.eps, settings.effective_dt());
    ChoiScanRow row;
    row.t = t;
    row.rates = gen.rates(t);
    row.min_choi_eig = min_choi_eigenvalue(c);
    row.rs_lhs = rs_lhs(obs, c);
    row.sum = sum_uncertainty(obs, c);
    row.verdict = row.min_choi_eig < -settings.tol ? Verdict::NonMarkovianDetected : Verdict::MarkovianConsistent;
    return row;
}

std::vector<ChoiScanRow> choi_scan_serial(const LindbladGenerator& gen, std::span<const double> times,
                                          const ObservablePair& obs, const ChoiScanSettings& settings) {
    std::vector<ChoiScanRow> rows;
    rows.reserve(times.size());
    for (double t : times) rows.push_back(choi_scan_row(gen, t, obs, settings));
    return rows;
}

std::vector<ChoiScanRow> choi_scan_parallel(const LindbladGenerator& gen, std::span<const double> times,
                                            const ObservablePair& obs, const ChoiScanSettings& settings) {
    return indexed_map<ChoiScanRow>(
        times.size(), [&](std::size_t i) { return choi_scan_row(gen, times[i], obs, settings); },
        Execution::Parallel);
}

std::vector<ChoiScanRow> choi_scan(const LindbladGenerator& gen, std::span<const double> times,
                                   const ObservablePair& obs, const ChoiScanSettings& settings, Execution exec) {
    return exec == Execution::Serial ? choi_scan_serial(gen, times, obs, settings)
                                     : choi_scan_parallel(gen, times, obs, settings);
}

std::vector<UnitalRow> unital_scan(const LindbladGenerator& gen, const DensityMatrix& rho0,
                                   const BlochDirections& dirs, double t_max, double dt, Execution exec) {
    if (gen.dim() != 2) throw ConfigError("unital_scan: qubit generator required");
    const std::vector<double> grid = uniform_grid(t_max, dt);
    require_unital(gen, grid);
    const std::vector<DensityMatrix> states = state_trajectory(gen, rho0, 0.0, dt, grid.size() - 1);
    const ObservablePair pair = dirs.pair();
    return indexed_map<UnitalRow>(
        grid.size(),
        [&](std::size_t k) {
            UnitalRow row;
            row.t = grid[k];
            row.rates = gen.rates(grid[k]);
            row.rs = rs_lhs(pair, states[k]);
            row.rs_rate = rs_rate_analytic(gen, states[k], dirs, grid[k]);
            row.linear_entropy = linear_entropy(states[k]);
            return row;
        },
        exec);
}

}  // namespace nmw
