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

#include "nmw/uncertainty.hpp"

#include <cmath>
#include <string>

#include "nmw/errors.hpp"

namespace nmw {

namespace {

constexpr double kStateTraceTol = 1e-8;
constexpr double kImagResidueTol = 1e-10;

std::array<double, 3> normalized(std::array<double, 3> v, const char* name) {
    const double n = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
    if (!(n > 0.0) || !std::isfinite(n)) throw ConfigError(std::string(name) + " direction must be nonzero");
    for (auto& x : v) x /= n;
    return v;
}

double real_checked(cplx z, const char* what) {
    if (std::abs(z.imag()) > kImagResidueTol * std::max(1.0, std::abs(z.real())))
        throw NumericalError(std::string(what) + ": imaginary residue " + std::to_string(z.imag()));
    return z.real();
}

}  // namespace

ObservablePair::ObservablePair(HermitianMatrix a_, HermitianMatrix b_) : a(std::move(a_)), b(std::move(b_)) {
    if (a.dim() != b.dim()) throw ConfigError("ObservablePair: observables differ in dimension");
}

ObservablePair ObservablePair::choi_default() {
    return {HermitianMatrix(pauli::from_label("xy")), HermitianMatrix(pauli::from_label("xx"))};
}

BlochDirections::BlochDirections(std::array<double, 3> r, std::array<double, 3> t)
    : r_(normalized(r, "r")), t_(normalized(t, "t")) {}

double BlochDirections::overlap() const noexcept { return r_[0] * t_[0] + r_[1] * t_[1] + r_[2] * t_[2]; }

HermitianMatrix bloch_operator(const std::array<double, 3>& n) {
    return HermitianMatrix(pauli::x() * n[0] + pauli::y() * n[1] + pauli::z() * n[2]);
}

HermitianMatrix BlochDirections::a() const { return bloch_operator(r_); }
HermitianMatrix BlochDirections::b() const { return bloch_operator(t_); }
ObservablePair BlochDirections::pair() const { return {a(), b()}; }

void check_state_compatible(const ComplexMatrix& m, const HermitianMatrix& state) {
    if (m.dim() != state.dim())
        throw ConfigError("observable dimension " + std::to_string(m.dim()) + " does not match state dimension " +
                          std::to_string(state.dim()));
    const double tr = trace(state.matrix()).real();
    if (std::abs(tr - 1.0) > kStateTraceTol)
        throw ConfigError("state trace " + std::to_string(tr) + " is not 1");
}

DensityMatrix validate_state(const HermitianMatrix& state) { return DensityMatrix(state); }

double expectation(const HermitianMatrix& m, const HermitianMatrix& state) {
    check_state_compatible(m, state);
    return real_checked(trace_product(state.matrix(), m.matrix()), "expectation");
}

double variance(const HermitianMatrix& m, const HermitianMatrix& state) {
    check_state_compatible(m, state);
    const double mean = expectation(m, state);
    const double second = real_checked(trace_product(state.matrix(), m.matrix() * m.matrix()), "variance");
    return second - mean * mean;
}

double rs_lhs(const ObservablePair& pair, const HermitianMatrix& state) {
    check_state_compatible(pair.a, state);
    const double var_a = variance(pair.a, state);
    const double var_b = variance(pair.b, state);
    const double mean_a = expectation(pair.a, state);
    const double mean_b = expectation(pair.b, state);
    const cplx comm = trace_product(state.matrix(), commutator(pair.a, pair.b));
    const cplx anti = trace_product(state.matrix(), anticommutator(pair.a, pair.b));
    return var_a * var_b - 0.25 * std::norm(comm) - 0.25 * std::norm(anti - 2.0 * mean_a * mean_b);
}

SumUncertainty sum_uncertainty(const ObservablePair& pair, const HermitianMatrix& state) {
    check_state_compatible(pair.a, state);
    const cplx comm = trace_product(state.matrix(), commutator(pair.a, pair.b));
    return {variance(pair.a, state) + variance(pair.b, state), std::abs(comm)};
}

double variance_convexity_gap(std::span<const HermitianMatrix> observables,
                              std::span<const HermitianMatrix> components, std::span<const double> weights) {
    if (components.empty() || components.size() != weights.size())
        throw ConfigError("variance_convexity_gap: need one weight per component");
    double total = 0.0;
    for (double w : weights) {
        if (!(w >= 0.0)) throw ConfigError("variance_convexity_gap: weights must be nonnegative");
        total += w;
    }
    if (std::abs(total - 1.0) > 1e-12) throw ConfigError("variance_convexity_gap: weights must sum to 1");

    ComplexMatrix mixture(components.front().dim());
    for (std::size_t k = 0; k < components.size(); ++k) mixture += components[k].matrix() * weights[k];
    const HermitianMatrix mixed = HermitianMatrix::symmetrized(mixture);

    double gap = 0.0;
    for (const auto& a : observables) {
        gap += variance(a, mixed);
        for (std::size_t k = 0; k < components.size(); ++k) gap -= weights[k] * variance(a, components[k]);
    }
    return gap;
}

double linear_entropy(const DensityMatrix& rho, std::size_t d) {
    if (d < 2) throw ConfigError("linear_entropy: dimension must be at least 2");
    const double purity = trace_product(rho.matrix(), rho.matrix()).real();
    const double dd = static_cast<double>(d);
    return dd / (dd - 1.0) * (1.0 - purity);
}

double linear_entropy(const DensityMatrix& rho) { return linear_entropy(rho, rho.dim()); }

double rs_factorized(const BlochDirections& dirs, const DensityMatrix& rho) {
    if (rho.dim() != 2) throw ConfigError("rs_factorized: qubit state required");
    const double c = dirs.overlap();
    return (1.0 - c * c) * linear_entropy(rho, 2);
}

}  // namespace nmw
