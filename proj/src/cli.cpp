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

#include "nmw/cli.hpp"

#include <cmath>
#include <iostream>
#include <sstream>
#include <utility>

#include "nmw/csv.hpp"
#include "nmw/errors.hpp"
#include "nmw/quantifier.hpp"
#include "nmw/scan.hpp"

namespace nmw {

namespace {

using Metadata = std::vector<std::pair<std::string, std::string>>;

constexpr const char* kToolName = "nmwitness";

void write_metadata(std::ostringstream& out, const Metadata& meta) {
    for (const auto& [key, value] : meta) out << "# " << key << ',' << value << '\n';
}

std::string vec3(const std::array<double, 3>& v) {
    return format_number(v[0]) + ';' + format_number(v[1]) + ';' + format_number(v[2]);
}

std::vector<double> scan_grid(double t_min, double t_max, double dt) {
    const auto n = static_cast<std::size_t>(std::floor((t_max - t_min) / dt + 1e-9));
    std::vector<double> grid(n + 1);
    for (std::size_t k = 0; k <= n; ++k) grid[k] = t_min + static_cast<double>(k) * dt;
    return grid;
}

Metadata common_metadata(const char* command, const ScanConfig& cfg) {
    return {{"tool", std::string(kToolName) + ' ' + command},
            {"model", to_string(cfg.model)},
            {"integrator", "rk4 fixed step"},
            {"seed", "0 (deterministic, no sampling)"}};
}

void add_choi_settings(Metadata& meta, const ScanConfig& cfg, const ChoiScanSettings& s) {
    meta.emplace_back("t_min", format_number(cfg.t_min));
    meta.emplace_back("t_max", format_number(cfg.t_max));
    meta.emplace_back("dt", format_number(cfg.dt));
    meta.emplace_back("epsilon", format_number(s.eps));
    meta.emplace_back("choi_dt", format_number(s.effective_dt()));
    meta.emplace_back("tol", format_number(s.tol));
    meta.emplace_back("observables", cfg.obs_a + ';' + cfg.obs_b);
}

void add_rate_metadata(Metadata& meta, const LindbladGenerator& gen) {
    std::size_t i = 1;
    for (const auto& ch : gen.channels())
        meta.emplace_back("rate_" + std::to_string(i++), ch.label + ": " + ch.rate.description());
    for (const auto& term : gen.hamiltonian()) meta.emplace_back("hamiltonian", "sigma_z * " + term.coeff.description());
}

std::string rate_header(std::size_t count) {
    std::string h;
    for (std::size_t i = 1; i <= count; ++i) h += ",rate_" + std::to_string(i);
    return h;
}

std::string render_choi_scan(const Metadata& meta, const LindbladGenerator& gen,
                             const std::vector<ChoiScanRow>& rows) {
    std::ostringstream out;
    write_metadata(out, meta);
    out << 't' << rate_header(gen.channels().size()) << ",min_choi_eig,rs_lhs,sum_lhs,sum_rhs,verdict\n";
    for (const auto& row : rows) {
        out << format_number(row.t);
        for (double r : row.rates) out << ',' << format_number(r);
        out << ',' << format_number(row.min_choi_eig) << ',' << format_number(row.rs_lhs) << ','
            << format_number(row.sum.lhs) << ',' << format_number(row.sum.rhs) << ',' << to_string(row.verdict)
            << '\n';
    }
    return out.str();
}

ChoiScanSettings choi_settings(const ScanConfig& cfg) { return {cfg.eps, cfg.choi_dt, cfg.tol}; }

ObservablePair scan_observables(const ScanConfig& cfg) {
    ObservablePair obs(HermitianMatrix(pauli::from_label(cfg.obs_a)), HermitianMatrix(pauli::from_label(cfg.obs_b)));
    if (obs.a.dim() != 4) throw ConfigError("Choi-scan observables must act on two qubits (e.g. 'xy')");
    return obs;
}

// Clips or filters the grid around poles of the dephasing rate.
std::vector<double> dephasing_grid(const ScanConfig& cfg, Metadata& meta) {
    const DephasingParams& p = cfg.dephasing;
    double t_max = cfg.t_max;
    const auto first = dephasing_first_pole(p);
    if (first) meta.emplace_back("first_pole", format_number(*first));
    if (first && !cfg.cross_poles && t_max > *first - cfg.pole_margin) {
        t_max = *first - cfg.pole_margin;
        if (t_max < cfg.t_min) {
            std::ostringstream msg;
            msg << "dephasing rate has a pole at t = " << *first << "; nothing to scan before it";
            throw SingularRateError(msg.str(), *first);
        }
        meta.emplace_back("notice", "t_max clipped to " + format_number(t_max) + " (pole margin " +
                                        format_number(cfg.pole_margin) + ")");
        std::cerr << kToolName << ": t_max clipped to " << t_max << " before the pole at t = " << *first << '\n';
    }
    std::vector<double> grid = scan_grid(cfg.t_min, t_max, cfg.dt);
    if (!cfg.cross_poles) return grid;

    const std::vector<double> poles = dephasing_poles(p, t_max + cfg.eps + cfg.pole_margin);
    std::vector<double> kept;
    std::size_t skipped = 0;
    for (double t : grid) {
        bool near = false;
        for (double pole : poles) near = near || (t + cfg.eps > pole - cfg.pole_margin && t < pole + cfg.pole_margin);
        if (near) ++skipped;
        else kept.push_back(t);
    }
    meta.emplace_back("pole_margin", format_number(cfg.pole_margin));
    meta.emplace_back("rows_skipped_near_poles", std::to_string(skipped));
    return kept;
}

}  // namespace

std::string to_string(Model m) {
    switch (m) {
        case Model::Dephasing: return "dephasing";
        case Model::SpinBath: return "spinbath-demo";
        case Model::Custom: return "custom";
    }
    return "unknown";
}

void ScanConfig::validate() const {
    if (!(dt > 0.0)) throw ConfigError("--dt must be positive");
    if (!(eps > 0.0)) throw ConfigError("--epsilon must be positive");
    if (choi_dt < 0.0) throw ConfigError("--choi-dt must be nonnegative");
    if (choi_dt > eps) throw ConfigError("--choi-dt must not exceed --epsilon");
    if (!(t_max > t_min)) throw ConfigError("--t-max must exceed --t-min");
    if (!(tol > 0.0)) throw ConfigError("--tol must be positive");
    if (!(pole_margin >= 1e-6)) throw ConfigError("--pole-margin must be at least 1e-6");
    if (model == Model::Dephasing) {
        dephasing.validate();
        if (t_min < 0.0) throw ConfigError("dephasing scans need --t-min >= 0");
    }
}

SpinBathParams spinbath_params(const ScanConfig& cfg) {
    if (cfg.model != Model::Custom) return spinbath_demo(cfg.demo);
    auto pick = [](const std::optional<std::string>& spec) {
        return spec ? rate_from_spec(*spec) : RateFunction::constant(0.0);
    };
    return {pick(cfg.unitary), pick(cfg.rate_deph), pick(cfg.rate_dis), pick(cfg.rate_abs)};
}

std::string run_dephasing_scan(const ScanConfig& cfg) {
    cfg.validate();
    const ChoiScanSettings settings = choi_settings(cfg);
    Metadata meta = common_metadata("dephasing", cfg);
    meta.emplace_back("lambda", format_number(cfg.dephasing.lambda));
    meta.emplace_back("gamma0", format_number(cfg.dephasing.gamma0));
    add_choi_settings(meta, cfg, settings);
    const std::vector<double> grid = dephasing_grid(cfg, meta);
    const LindbladGenerator gen = dephasing_generator(cfg.dephasing);
    add_rate_metadata(meta, gen);
    const auto rows = choi_scan(gen, grid, scan_observables(cfg), settings, cfg.exec);
    return render_choi_scan(meta, gen, rows);
}

std::string run_spinbath_scan(const ScanConfig& cfg) {
    cfg.validate();
    const ChoiScanSettings settings = choi_settings(cfg);
    Metadata meta = common_metadata("spinbath", cfg);
    if (cfg.model == Model::SpinBath) meta.emplace_back("note", "demonstration rates, not microscopic spin-bath rates");
    add_choi_settings(meta, cfg, settings);
    const LindbladGenerator gen = spinbath_generator(spinbath_params(cfg));
    add_rate_metadata(meta, gen);
    const std::vector<double> grid = scan_grid(cfg.t_min, cfg.t_max, cfg.dt);
    const auto rows = choi_scan(gen, grid, scan_observables(cfg), settings, cfg.exec);
    return render_choi_scan(meta, gen, rows);
}

std::string run_unital_scan(const ScanConfig& cfg) {
    cfg.validate();
    if (cfg.t_min != 0.0) throw ConfigError("unital scans start at t = 0; --t-min is not supported");
    const BlochDirections dirs(cfg.r, cfg.t_dir);

    Metadata meta = common_metadata("unital", cfg);
    double t_max = cfg.t_max;
    std::optional<LindbladGenerator> gen;
    if (cfg.model == Model::Dephasing) {
        meta.emplace_back("lambda", format_number(cfg.dephasing.lambda));
        meta.emplace_back("gamma0", format_number(cfg.dephasing.gamma0));
        if (const auto pole = dephasing_first_pole(cfg.dephasing); pole && t_max > *pole - cfg.pole_margin) {
            // uniform_grid rounds up to cover t_max, so snap down to a whole number of steps.
            t_max = cfg.dt * std::floor((*pole - cfg.pole_margin) / cfg.dt + 1e-9);
            if (!(t_max > 0.0)) throw SingularRateError("dephasing rate has a pole before any sample", *pole);
            meta.emplace_back("notice", "t_max clipped to " + format_number(t_max));
            std::cerr << kToolName << ": t_max clipped to " << t_max << " before the pole at t = " << *pole << '\n';
        }
        gen.emplace(dephasing_generator(cfg.dephasing));
    } else {
        if (cfg.model == Model::SpinBath)
            meta.emplace_back("note", "demonstration rates, not microscopic spin-bath rates");
        gen.emplace(spinbath_generator(spinbath_params(cfg)));
    }
    meta.emplace_back("t_max", format_number(t_max));
    meta.emplace_back("dt", format_number(cfg.dt));
    meta.emplace_back("rho0", "|+><+|");
    meta.emplace_back("r", vec3(dirs.r()));
    meta.emplace_back("t_dir", vec3(dirs.t()));
    add_rate_metadata(meta, *gen);

    const auto rows = unital_scan(*gen, DensityMatrix::plus_state(), dirs, t_max, cfg.dt, cfg.exec);

    TimeSeries rs, sl;
    for (const auto& row : rows) {
        rs.times.push_back(row.t);
        rs.values.push_back(row.rs);
        sl.times.push_back(row.t);
        sl.values.push_back(row.linear_entropy);
    }

    std::ostringstream out;
    write_metadata(out, meta);
    out << 't' << rate_header(gen->channels().size()) << ",R,dRdt,S_l\n";
    for (const auto& row : rows) {
        out << format_number(row.t);
        for (double r : row.rates) out << ',' << format_number(r);
        out << ',' << format_number(row.rs) << ',' << format_number(row.rs_rate) << ','
            << format_number(row.linear_entropy) << '\n';
    }
    write_metadata(out, {{"N", format_number(nm_quantifier(rs))}, {"N_purity", format_number(nm_quantifier(sl))}});
    return out.str();
}

std::string run_detect_file(std::istream& in, const std::string& name, double tol) {
    if (!(tol > 0.0)) throw ConfigError("--tol must be positive");
    const HermitianMatrix c(read_matrix_csv(in, name));
    const double tr = trace(c.matrix()).real();
    if (std::abs(tr - 1.0) > 1e-8) throw ConfigError(name + ": trace " + format_number(tr) + " is not 1");
    const WitnessReport report = detect(c, tol);
    std::ostringstream out;
    write_metadata(out, {{"tool", std::string(kToolName) + " detect-file"},
                         {"source", name},
                         {"dim", std::to_string(c.dim())},
                         {"tol", format_number(tol)}});
    out << witness_report_csv_header() << '\n' << witness_report_csv_row(report) << '\n';
    return out.str();
}

std::array<double, 3> parse_vector3(const std::string& text) {
    std::array<double, 3> v{};
    std::istringstream in(text);
    std::string field;
    std::size_t i = 0;
    while (std::getline(in, field, ',')) {
        if (i == 3) throw ConfigError("expected three components in '" + text + "'");
        std::size_t used = 0;
        try {
            v[i] = std::stod(field, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || field.find_first_not_of(" \t", used) != std::string::npos)
            throw ConfigError("bad vector component '" + field + "' in '" + text + "'");
        ++i;
    }
    if (i != 3) throw ConfigError("expected three components in '" + text + "'");
    return v;
}

}  // namespace nmw
