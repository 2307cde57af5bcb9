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

// nmwitness: detect non-Markovian qubit dynamics from uncertainty-relation violations
//
//   nmwitness dephasing   --lambda 1 --gamma0 2 --t-max 3 [--cross-poles]
//   nmwitness spinbath    [--rate-deph EXPR|@file.csv] [--rate-dis ..] [--rate-abs ..] [--unitary ..]
//   nmwitness unital      [--model spinbath|dephasing] --r 1,0,0 --t-dir 0,1,0
//   nmwitness detect-file matrix.csv
//
// Exit codes: 0 success, 2 configuration or parse error, 3 numerical failure.

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "nmw/cli.hpp"
#include "nmw/errors.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

struct Options {
    nmw::ScanConfig cfg;
    std::string out;
    std::string r = "1,0,0";
    std::string t_dir = "0,1,0";
    std::string unital_model = "spinbath";
    std::string matrix_path;
    bool serial = false;
    std::string rate_deph, rate_dis, rate_abs, unitary;
};

void add_grid_options(CLI::App* cmd, Options& o, bool choi) {
    cmd->add_option("--t-min", o.cfg.t_min, "first grid time")->capture_default_str();
    cmd->add_option("--t-max", o.cfg.t_max, "last grid time")->capture_default_str();
    cmd->add_option("--dt", o.cfg.dt, "grid spacing")->capture_default_str();
    if (choi) {
        cmd->add_option("--epsilon", o.cfg.eps, "length of the intermediate interval")->capture_default_str();
        cmd->add_option("--choi-dt", o.cfg.choi_dt, "RK4 step for Choi evolution (default epsilon/100)");
        cmd->add_option("--tol", o.cfg.tol, "negativity threshold")->capture_default_str();
        cmd->add_option("--obs-a", o.cfg.obs_a, "first two-qubit Pauli observable")->capture_default_str();
        cmd->add_option("--obs-b", o.cfg.obs_b, "second two-qubit Pauli observable")->capture_default_str();
    }
    cmd->add_option("--out", o.out, "output CSV path (default stdout)");
    cmd->add_flag("--serial", o.serial, "disable OpenMP row parallelism");
}

void add_dephasing_options(CLI::App* cmd, Options& o) {
    cmd->add_option("--lambda", o.cfg.dephasing.lambda, "coupling lambda")->capture_default_str();
    cmd->add_option("--gamma0", o.cfg.dephasing.gamma0, "rate scale gamma0")->capture_default_str();
    cmd->add_option("--pole-margin", o.cfg.pole_margin, "distance kept from poles of gamma(t)")
        ->capture_default_str();
}

void add_spinbath_options(CLI::App* cmd, Options& o) {
    cmd->add_option("--rate-deph", o.rate_deph, "dephasing rate: expression in t or @file.csv");
    cmd->add_option("--rate-dis", o.rate_dis, "dissipation rate: expression in t or @file.csv");
    cmd->add_option("--rate-abs", o.rate_abs, "absorption rate: expression in t or @file.csv");
    cmd->add_option("--unitary", o.unitary, "unitary coefficient U(t): expression in t or @file.csv");
    cmd->add_option("--demo-depth", o.cfg.demo.depth, "demo rates: modulation depth (>1 gives a negative window)")
        ->capture_default_str();
    cmd->add_option("--demo-center", o.cfg.demo.center, "demo rates: window center")->capture_default_str();
    cmd->add_option("--demo-width", o.cfg.demo.width, "demo rates: window width")->capture_default_str();
}

void finish_spinbath(Options& o) {
    auto take = [](const std::string& s) { return s.empty() ? std::nullopt : std::optional<std::string>(s); };
    o.cfg.rate_deph = take(o.rate_deph);
    o.cfg.rate_dis = take(o.rate_dis);
    o.cfg.rate_abs = take(o.rate_abs);
    o.cfg.unitary = take(o.unitary);
    const bool custom = o.cfg.rate_deph || o.cfg.rate_dis || o.cfg.rate_abs || o.cfg.unitary;
    o.cfg.model = custom ? nmw::Model::Custom : nmw::Model::SpinBath;
}

int emit(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return std::cout ? 0 : kExitConfig;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw nmw::ConfigError("cannot open output file '" + path + "'");
    out << text;
    return out ? 0 : kExitConfig;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Detect non-Markovian qubit dynamics through uncertainty-relation violations"};
    app.require_subcommand(1);

    Options deph_o, spin_o, unital_o, detect_o;
    spin_o.cfg.t_max = 5.0;
    unital_o.cfg.t_max = 5.0;
    unital_o.cfg.dt = 1e-3;

    auto* dephasing = app.add_subcommand("dephasing", "Choi-state scan of the time-dependent dephasing channel");
    add_dephasing_options(dephasing, deph_o);
    add_grid_options(dephasing, deph_o, true);
    dephasing->add_flag("--cross-poles", deph_o.cfg.cross_poles, "scan past poles of gamma(t), skipping nearby rows");

    auto* spinbath = app.add_subcommand("spinbath", "Choi-state scan of the spin-bath master equation");
    add_spinbath_options(spinbath, spin_o);
    add_grid_options(spinbath, spin_o, true);

    auto* unital = app.add_subcommand("unital", "RS uncertainty of an evolving qubit under unital dynamics");
    unital->add_option("--model", unital_o.unital_model, "spinbath or dephasing")
        ->check(CLI::IsMember({"spinbath", "dephasing"}))
        ->capture_default_str();
    add_dephasing_options(unital, unital_o);
    add_spinbath_options(unital, unital_o);
    add_grid_options(unital, unital_o, false);
    unital->add_option("--r", unital_o.r, "direction r of A = r.sigma")->capture_default_str();
    unital->add_option("--t-dir", unital_o.t_dir, "direction t of B = t.sigma")->capture_default_str();

    auto* detect = app.add_subcommand("detect-file", "Witness report for a Hermitian matrix stored as re,im CSV");
    detect->add_option("matrix", detect_o.matrix_path, "matrix CSV file")->required();
    detect->add_option("--tol", detect_o.cfg.tol, "negativity threshold")->capture_default_str();
    detect->add_option("--out", detect_o.out, "output CSV path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitConfig;
    }

    try {
        if (*dephasing) {
            Options& o = deph_o;
            o.cfg.exec = o.serial ? nmw::Execution::Serial : nmw::Execution::Parallel;
            o.cfg.model = nmw::Model::Dephasing;
            return emit(nmw::run_dephasing_scan(o.cfg), o.out);
        }
        if (*spinbath) {
            Options& o = spin_o;
            o.cfg.exec = o.serial ? nmw::Execution::Serial : nmw::Execution::Parallel;
            finish_spinbath(o);
            return emit(nmw::run_spinbath_scan(o.cfg), o.out);
        }
        if (*unital) {
            Options& o = unital_o;
            o.cfg.exec = o.serial ? nmw::Execution::Serial : nmw::Execution::Parallel;
            o.cfg.r = nmw::parse_vector3(o.r);
            o.cfg.t_dir = nmw::parse_vector3(o.t_dir);
            if (o.unital_model == "dephasing") o.cfg.model = nmw::Model::Dephasing;
            else finish_spinbath(o);
            return emit(nmw::run_unital_scan(o.cfg), o.out);
        }
        if (*detect) {
            std::ifstream in(detect_o.matrix_path);
            if (!in) throw nmw::ConfigError("cannot open matrix file '" + detect_o.matrix_path + "'");
            return emit(nmw::run_detect_file(in, detect_o.matrix_path, detect_o.cfg.tol), detect_o.out);
        }
    } catch (const nmw::ConfigError& e) {
        std::cerr << "nmwitness: " << e.what() << '\n';
        return kExitConfig;
    } catch (const nmw::NumericalError& e) {
        std::cerr << "nmwitness: numerical failure: " << e.what() << '\n';
        return kExitNumerical;
    }
    return kExitConfig;
}
