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

// scan.hpp: time-grid kernels behind the CLI scans
//
// Each Choi-scan row is independent, so the grid is split across OpenMP
// threads. choi_scan_serial is the reference the parallel kernel is tested
// against; both produce identical rows in time order.

#pragma once

#include <span>
#include <vector>

#include "nmw/dynamics.hpp"
#include "nmw/parallel.hpp"
#include "nmw/uncertainty.hpp"
#include "nmw/witnesses.hpp"

namespace nmw {

struct ChoiScanSettings {
    double eps = 0.01;
    double choi_dt = 0.0;  // 0 means eps / 100
    double tol = kDetectTol;

    double effective_dt() const noexcept { return choi_dt > 0.0 ? choi_dt : eps / 100.0; }
};

struct ChoiScanRow {
    double t = 0.0;
    std::vector<double> rates;
    double min_choi_eig = 0.0;
    double rs_lhs = 0.0;
    SumUncertainty sum{0.0, 0.0};
    Verdict verdict = Verdict::MarkovianConsistent;
};

ChoiScanRow choi_scan_row(const LindbladGenerator& gen, double t, const ObservablePair& obs,
                          const ChoiScanSettings& settings);

std::vector<ChoiScanRow> choi_scan_serial(const LindbladGenerator& gen, std::span<const double> times,
                                          const ObservablePair& obs, const ChoiScanSettings& settings);
std::vector<ChoiScanRow> choi_scan_parallel(const LindbladGenerator& gen, std::span<const double> times,
                                            const ObservablePair& obs, const ChoiScanSettings& settings);
std::vector<ChoiScanRow> choi_scan(const LindbladGenerator& gen, std::span<const double> times,
                                   const ObservablePair& obs, const ChoiScanSettings& settings, Execution exec);

struct UnitalRow {
    double t = 0.0;
    std::vector<double> rates;
    double rs = 0.0;        // R(t)
    double rs_rate = 0.0;   // analytic dR/dt
    double linear_entropy = 0.0;
};

// Integrates rho(t) on uniform_grid(t_max, dt) and evaluates each row.
// The integration is sequential; the per-row evaluation is parallel for Execution::Parallel.
std::vector<UnitalRow> unital_scan(const LindbladGenerator& gen, const DensityMatrix& rho0,
                                   const BlochDirections& dirs, double t_max, double dt, Execution exec);

}  // namespace nmw
