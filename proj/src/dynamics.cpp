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

#include "nmw/dynamics.hpp"

#include <cmath>
#include <sstream>

#include "nmw/errors.hpp"

namespace nmw {

namespace {

constexpr double kStatePsdFailure = -1e-6;
constexpr double kChoiTraceTol = 1e-8;

std::size_t step_count(double span, double dt) {
    if (span <= 0.0) return 0;
    return static_cast<std::size_t>(std::max(1.0, std::ceil(span / dt - 1e-9)));
}

ComplexMatrix rk4_step(const LindbladGenerator& gen, double t, double h, const ComplexMatrix& y) {
    const ComplexMatrix k1 = gen.apply(t, y);
    const ComplexMatrix k2 = gen.apply(t + 0.5 * h, y + k1 * (0.5 * h));
    const ComplexMatrix k3 = gen.apply(t + 0.5 * h, y + k2 * (0.5 * h));
    const ComplexMatrix k4 = gen.apply(t + h, y + k3 * h);
    return y + (k1 + k2 * 2.0 + k3 * 2.0 + k4) * (h / 6.0);
}

ComplexMatrix normalized(const ComplexMatrix& m) {
    ComplexMatrix out = (m + m.adjoint()) * 0.5;
    return out * (1.0 / trace(out).real());
}

double min_eigenvalue(const HermitianMatrix& m) { return hermitian_eig(m).eigenvalues.front(); }

}  // namespace

LindbladGenerator::LindbladGenerator(std::size_t dim, std::vector<LindbladChannel> channels,
                                     std::vector<HamiltonianTerm> hamiltonian)
    : dim_(dim), channels_(std::move(channels)), hamiltonian_(std::move(hamiltonian)) {
    if (dim == 0 || dim > kMaxDim) throw ConfigError("LindbladGenerator: unsupported dimension");
    for (const auto& ch : channels_) {
        if (ch.op.dim() != dim_)
            throw ConfigError("LindbladGenerator: channel '" + ch.label + "' has wrong dimension");
        const ComplexMatrix dag = ch.op.adjoint();
        cache_.push_back({dag, dag * ch.op});
    }
    for (const auto& term : hamiltonian_) {
        if (term.op.dim() != dim_) throw ConfigError("LindbladGenerator: Hamiltonian term has wrong dimension");
        if (!term.op.is_hermitian()) throw ConfigError("LindbladGenerator: Hamiltonian term is not Hermitian");
    }
}

std::vector<double> LindbladGenerator::rates(double t) const {
    std::vector<double> out;
    out.reserve(channels_.size());
    for (const auto& ch : channels_) out.push_back(ch.rate(t));
    return out;
}

ComplexMatrix LindbladGenerator::hamiltonian_at(double t) const {
    ComplexMatrix h(dim_);
    for (const auto& term : hamiltonian_) h += term.op * term.coeff(t);
    return h;
}

LindbladGenerator LindbladGenerator::lifted(std::size_t ancilla_dim) const {
    const ComplexMatrix id = ComplexMatrix::identity(ancilla_dim);
    std::vector<LindbladChannel> channels;
    for (const auto& ch : channels_) channels.push_back({kron(id, ch.op), ch.rate, ch.label});
    std::vector<HamiltonianTerm> ham;
    for (const auto& term : hamiltonian_) ham.push_back({kron(id, term.op), term.coeff});
    return LindbladGenerator(ancilla_dim * dim_, std::move(channels), std::move(ham));
}

ComplexMatrix LindbladGenerator::apply(double t, const ComplexMatrix& rho) const {
    if (rho.dim() != dim_) throw ConfigError("lindblad_rhs: state dimension does not match generator");
    ComplexMatrix out(dim_);
    if (!hamiltonian_.empty()) {
        const ComplexMatrix h = hamiltonian_at(t);
        out += commutator(h, rho) * cplx{0.0, -1.0};
    }
    for (std::size_t i = 0; i < channels_.size(); ++i) {
        const double gamma = channels_[i].rate(t);
        if (gamma == 0.0) continue;
        const ComplexMatrix& l = channels_[i].op;
        const Cached& c = cache_[i];
        ComplexMatrix term = l * rho * c.dag - anticommutator(c.dag_op, rho) * 0.5;
        out += term * gamma;
    }
    return out;
}

DensityMatrix::DensityMatrix(HermitianMatrix m, double psd_tol) : m_(std::move(m)) {
    const double tr = trace(m_.matrix()).real();
    if (std::abs(tr - 1.0) > 1e-10)
        throw ConfigError("DensityMatrix: trace " + std::to_string(tr) + " is not 1");
    const double lo = min_eigenvalue(m_);
    if (lo < -psd_tol)
        throw ConfigError("DensityMatrix: negative eigenvalue " + std::to_string(lo));
}

DensityMatrix DensityMatrix::pure(std::span<const cplx> psi) {
    double norm2 = 0.0;
    for (const auto& a : psi) norm2 += std::norm(a);
    if (norm2 == 0.0) throw ConfigError("DensityMatrix::pure: zero vector");
    return DensityMatrix(HermitianMatrix::symmetrized(ComplexMatrix::outer(psi, psi) * (1.0 / norm2)));
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t dim) {
    return DensityMatrix(HermitianMatrix(ComplexMatrix::identity(dim) * (1.0 / static_cast<double>(dim))));
}

DensityMatrix DensityMatrix::from_bloch(double nx, double ny, double nz) {
    if (nx * nx + ny * ny + nz * nz > 1.0 + 1e-12) throw ConfigError("Bloch vector longer than 1");
    const ComplexMatrix m =
        (pauli::i2() + pauli::x() * nx + pauli::y() * ny + pauli::z() * nz) * 0.5;
    return DensityMatrix(HermitianMatrix(m));
}

DensityMatrix DensityMatrix::plus_state() { return from_bloch(1.0, 0.0, 0.0); }

ChoiState::ChoiState(HermitianMatrix m, TimeInterval interval) : m_(std::move(m)), interval_(interval) {
    const auto root = static_cast<std::size_t>(std::lround(std::sqrt(static_cast<double>(m_.dim()))));
    if (root * root != m_.dim()) throw ConfigError("ChoiState: dimension is not a perfect square");
    system_dim_ = root;
    const double tr = trace(m_.matrix()).real();
    if (std::abs(tr - 1.0) > kChoiTraceTol)
        throw ConfigError("ChoiState: trace " + std::to_string(tr) + " is not 1");
}

ChoiState ChoiState::identity_channel(std::size_t system_dim, TimeInterval interval) {
    std::vector<cplx> phi(system_dim * system_dim);
    const double amp = 1.0 / std::sqrt(static_cast<double>(system_dim));
    for (std::size_t i = 0; i < system_dim; ++i) phi[i * system_dim + i] = amp;
    return ChoiState(HermitianMatrix::symmetrized(ComplexMatrix::outer(phi, phi)), interval);
}

HermitianMatrix lindblad_rhs(const LindbladGenerator& gen, double t, const HermitianMatrix& rho) {
    return HermitianMatrix::symmetrized(gen.apply(t, rho.matrix()));
}

std::vector<DensityMatrix> state_trajectory(const LindbladGenerator& gen, const DensityMatrix& rho0,
                                            double t0, double dt, std::size_t steps) {
    if (!(dt > 0.0)) throw ConfigError("state_trajectory: dt must be positive");
    if (rho0.dim() != gen.dim()) throw ConfigError("state_trajectory: state dimension does not match generator");
    std::vector<DensityMatrix> out;
    out.reserve(steps + 1);
    out.push_back(rho0);
    ComplexMatrix y = rho0.matrix();
    for (std::size_t k = 0; k < steps; ++k) {
        const double t = t0 + static_cast<double>(k) * dt;
        y = normalized(rk4_step(gen, t, dt, y));
        HermitianMatrix h = HermitianMatrix::symmetrized(y);
        const double lo = min_eigenvalue(h);
        if (lo < kStatePsdFailure) {
            std::ostringstream msg;
            msg << "state_trajectory: state lost positivity at t = " << t + dt << " (min eigenvalue " << lo
                << ")";
            throw NumericalError(msg.str());
        }
        out.emplace_back(std::move(h), -kStatePsdFailure);
    }
    return out;
}

DensityMatrix propagate_state(const LindbladGenerator& gen, const DensityMatrix& rho0, double t0, double t1,
                              double dt) {
    if (!(dt > 0.0)) throw ConfigError("propagate_state: dt must be positive");
    if (t1 < t0) throw ConfigError("propagate_state: t1 < t0");
    if (rho0.dim() != gen.dim()) throw ConfigError("propagate_state: state dimension does not match generator");
    const std::size_t n = step_count(t1 - t0, dt);
    if (n == 0) return rho0;
    const double h = (t1 - t0) / static_cast<double>(n);
    ComplexMatrix y = rho0.matrix();
    for (std::size_t k = 0; k < n; ++k) y = normalized(rk4_step(gen, t0 + static_cast<double>(k) * h, h, y));
    HermitianMatrix out = HermitianMatrix::symmetrized(y);
    const double lo = min_eigenvalue(out);
    if (lo < kStatePsdFailure) {
        std::ostringstream msg;
        msg << "propagate_state: integration produced a non-positive state at t = " << t1
            << " (min eigenvalue " << lo << "); reduce dt or check the generator";
        throw NumericalError(msg.str());
    }
    return DensityMatrix(std::move(out), -kStatePsdFailure);
}

ChoiState intermediate_choi(const LindbladGenerator& gen, double t, double eps, double dt) {
    if (!(eps > 0.0)) throw ConfigError("intermediate_choi: interval length must be positive");
    if (!(dt > 0.0)) throw ConfigError("intermediate_choi: dt must be positive");
    const LindbladGenerator big = gen.lifted(gen.dim());
    const std::size_t n = step_count(eps, dt);
    const double h = eps / static_cast<double>(n);
    ComplexMatrix c = ChoiState::identity_channel(gen.dim()).matrix();
    for (std::size_t k = 0; k < n; ++k) {
        c = rk4_step(big, t + static_cast<double>(k) * h, h, c);
        c = (c + c.adjoint()) * 0.5;
    }
    const double tr = trace(c).real();
    if (std::abs(tr - 1.0) > kChoiTraceTol) {
        std::ostringstream msg;
        msg << "intermediate_choi: trace drifted to " << tr << " over [" << t << ", " << t + eps << "]";
        throw NumericalError(msg.str());
    }
    return ChoiState(HermitianMatrix::symmetrized(c), {t, eps});
}

double min_choi_eigenvalue(const ChoiState& c) { return min_eigenvalue(c.hermitian()); }

double unitality_defect(const LindbladGenerator& gen, double t) {
    const ComplexMatrix mixed = ComplexMatrix::identity(gen.dim()) * (1.0 / static_cast<double>(gen.dim()));
    const ComplexMatrix r = gen.apply(t, mixed);
    double worst = 0.0;
    for (const auto& e : r.entries()) worst = std::max(worst, std::abs(e));
    return worst;
}

}  // namespace nmw
