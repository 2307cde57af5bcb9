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

// cli.hpp: scan configurations and the CSV documents the nmwitness tool emits
//
// Output layout: '#'-prefixed provenance lines, one header row, data rows in
// time order. Numbers use 12 significant digits and '\n' line endings, so an
// identical config always produces byte-identical output.

#pragma once

#include <array>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "nmw/models.hpp"
#include "nmw/parallel.hpp"

namespace nmw {

enum class Model { Dephasing, SpinBath, Custom };
std::string to_string(Model m);

struct ScanConfig {
    Model model = Model::Dephasing;
    DephasingParams dephasing;
    SpinBathDemo demo;
    // Expression or "@file.csv"; when any is set the spin-bath model becomes Custom
    // and unset rates default to 0.
    std::optional<std::string> rate_deph, rate_dis, rate_abs, unitary;

    double t_min = 0.0;
    double t_max = 3.0;
    double dt = 0.01;
    double eps = 0.01;
    double choi_dt = 0.0;  // 0 means eps / 100
    double tol = 1e-9;

    std::string obs_a = "xy";
    std::string obs_b = "xx";
    std::array<double, 3> r{1.0, 0.0, 0.0};
    std::array<double, 3> t_dir{0.0, 1.0, 0.0};

    bool cross_poles = false;
    double pole_margin = 0.1;

    Execution exec = Execution::Parallel;

    // Throws ConfigError on t_max <= t_min, dt <= 0, eps <= 0 and the like.
    void validate() const;
};

// The spin-bath / custom parameters a config describes.
SpinBathParams spinbath_params(const ScanConfig& cfg);

std::string run_dephasing_scan(const ScanConfig& cfg);
std::string run_spinbath_scan(const ScanConfig& cfg);
// cfg.model selects dephasing or spin-bath dynamics; cfg.dt is the trajectory step.
std::string run_unital_scan(const ScanConfig& cfg);
// Reads a matrix (see read_matrix_csv), checks unit trace, emits header + one report row.
std::string run_detect_file(std::istream& in, const std::string& name, double tol);

// Parses "x,y,z".
std::array<double, 3> parse_vector3(const std::string& text);

}  // namespace nmw
