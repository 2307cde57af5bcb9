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

#include "nmw/models.hpp"

#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "nmw/errors.hpp"

namespace nmw {

namespace {

constexpr double kPoleDenominatorTol = 1e-14;
constexpr double kImagResidueTol = 1e-12;
constexpr double kSimpsonTol = 1e-12;
constexpr int kSimpsonMaxDepth = 50;

// sinh(x) / x, with its Taylor series near the origin.
cplx sinhc(cplx x) {
    if (std::abs(x) < 1e-4) {
        const cplx x2 = x * x;
        return 1.0 + x2 / 6.0 + x2 * x2 / 120.0;
    }
    return std::sinh(x) / x;
}

double simpson(double a, double b, double fa, double fm, double fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_simpson(const DephasingParams& p, double a, double fa, double b, double fb, double m,
                        double fm, double whole, double tol, int depth) {
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = dephasing_rate(p, lm), frm = dephasing_rate(p, rm);
    const double left = simpson(a, m, fa, flm, fm);
    const double right = simpson(m, b, fm, frm, fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    return adaptive_simpson(p, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
           adaptive_simpson(p, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

std::string describe(const DephasingParams& p) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "dephasing(lambda=%.12g,gamma0=%.12g)", p.lambda, p.gamma0);
    return buf;
}

}  // namespace

void DephasingParams::validate() const {
    if (!(lambda > 0.0) || !std::isfinite(lambda)) throw ConfigError("dephasing: lambda must be positive");
    if (!(gamma0 > 0.0) || !std::isfinite(gamma0)) throw ConfigError("dephasing: gamma0 must be positive");
}

double dephasing_rate(const DephasingParams& p, double t) {
    const cplx g = std::sqrt(cplx{p.lambda * p.lambda - 2.0 * p.gamma0 * p.lambda, 0.0});
    const cplx x = 0.5 * t * g;
    cplx value;
    if (std::abs(x.real()) > 20.0) {
        // Real g at large t: cosh overflows, tanh does not.
        const cplx th = std::tanh(x);
        value = 2.0 * p.lambda * p.gamma0 * th / (g + p.lambda * th);
    } else {
        // Numerator and denominator divided by g: sinh(x)/g = (t/2) sinhc(x).
        const cplx s_over_g = 0.5 * t * sinhc(x);
        const cplx denom = std::cosh(x) + p.lambda * s_over_g;
        if (std::abs(denom) < kPoleDenominatorTol) {
            std::ostringstream msg;
            msg << "dephasing rate is singular at t = " << t;
            throw SingularRateError(msg.str(), t);
        }
        value = 2.0 * p.lambda * p.gamma0 * s_over_g / denom;
    }
    if (std::abs(value.imag()) > kImagResidueTol * std::max(1.0, std::abs(value.real()))) {
        throw NumericalError("dephasing rate: imaginary residue " + std::to_string(value.imag()));
    }
    return value.real();
}

std::vector<double> dephasing_poles(const DephasingParams& p, double t_max) {
    std::vector<double> out;
    if (!p.non_markovian()) return out;
    const double omega = std::sqrt(2.0 * p.gamma0 * p.lambda - p.lambda * p.lambda);
    // omega cos(omega t / 2) + lambda sin(omega t / 2) = 0
    const double base = std::numbers::pi - std::atan(omega / p.lambda);
    for (int k = 0;; ++k) {
        const double t = 2.0 / omega * (base + k * std::numbers::pi);
        if (t > t_max) break;
        out.push_back(t);
    }
    return out;
}

std::optional<double> dephasing_first_pole(const DephasingParams& p) {
    if (!p.non_markovian()) return std::nullopt;
    const double omega = std::sqrt(2.0 * p.gamma0 * p.lambda - p.lambda * p.lambda);
    return 2.0 / omega * (std::numbers::pi - std::atan(omega / p.lambda));
}

double dephasing_rate_integral(const DephasingParams& p, double a, double b) {
    if (b < a) return -dephasing_rate_integral(p, b, a);
    if (b == a) return 0.0;
    for (double pole : dephasing_poles(p, b)) {
        if (pole >= a) {
            std::ostringstream msg;
            msg << "dephasing rate has a pole at t = " << pole << " inside [" << a << ", " << b << "]";
            throw SingularRateError(msg.str(), pole);
        }
    }
    const double m = 0.5 * (a + b);
    const double fa = dephasing_rate(p, a), fm = dephasing_rate(p, m), fb = dephasing_rate(p, b);
    const double whole = simpson(a, b, fa, fm, fb);
    return adaptive_simpson(p, a, fa, b, fb, m, fm, whole, kSimpsonTol, kSimpsonMaxDepth);
}

RateFunction dephasing_rate_function(const DephasingParams& p) {
    p.validate();
    return RateFunction::parametric([p](double t) { return dephasing_rate(p, t); }, describe(p));
}

LindbladGenerator dephasing_generator(const DephasingParams& p) {
    return LindbladGenerator(2, {{pauli::z(), dephasing_rate_function(p), "deph"}});
}

ChoiState dephasing_choi_from_integral(double rate_integral, TimeInterval interval) {
    const double q = std::exp(-2.0 * rate_integral);
    ComplexMatrix c(4);
    c(0, 0) = 0.5;
    c(3, 3) = 0.5;
    c(0, 3) = 0.5 * q;
    c(3, 0) = 0.5 * q;
    return ChoiState(HermitianMatrix(std::move(c)), interval);
}

ChoiState dephasing_choi_exact(const DephasingParams& p, double t, double eps) {
    if (!(eps > 0.0)) throw ConfigError("dephasing_choi_exact: interval length must be positive");
    p.validate();
    return dephasing_choi_from_integral(dephasing_rate_integral(p, t, t + eps), {t, eps});
}

LindbladGenerator spinbath_generator(const SpinBathParams& p) {
    std::vector<LindbladChannel> channels{{pauli::z(), p.dephasing, "deph"},
                                          {pauli::minus(), p.dissipation, "dis"},
                                          {pauli::plus(), p.absorption, "abs"}};
    // i U [rho, sigma_z] = -i [U sigma_z, rho]
    std::vector<HamiltonianTerm> ham{{pauli::z(), p.unitary}};
    return LindbladGenerator(2, std::move(channels), std::move(ham));
}

double SpinBathDemo::modulation(double t) const {
    const double u = (t - center) / width;
    return 1.0 - depth * std::exp(-u * u);
}

std::optional<std::pair<double, double>> SpinBathDemo::negative_window() const {
    if (depth <= 1.0) return std::nullopt;
    const double half = width * std::sqrt(std::log(depth));
    return std::pair{center - half, center + half};
}

SpinBathParams spinbath_demo(const SpinBathDemo& demo) {
    if (!(demo.width > 0.0)) throw ConfigError("spin-bath demo: width must be positive");
    auto scaled = [demo](double amplitude, const char* name) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "demo %s: %.12g*(1-%.12g*exp(-((t-%.12g)/%.12g)^2))", name, amplitude,
                      demo.depth, demo.center, demo.width);
        return RateFunction::parametric([demo, amplitude](double t) { return amplitude * demo.modulation(t); },
                                        buf);
    };
    return SpinBathParams{RateFunction::constant(demo.unitary), scaled(demo.dephasing, "deph"),
                          scaled(demo.dissipation, "dis"), scaled(demo.absorption, "abs")};
}

}  // namespace nmw
