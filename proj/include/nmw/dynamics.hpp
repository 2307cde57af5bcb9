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

// dynamics.hpp: time-local Lindblad evolution of states and of intermediate-interval Choi matrices
//
//   drho/dt = -i[H(t), rho] + sum_i Gamma_i(t) (L_i rho L_i^dagger - 1/2 {L_i^dagger L_i, rho})
//
// with H(t) = sum_k c_k(t) H_k. All times and rates are dimensionless.
//
// The Choi matrix of the propagator over [t, t + eps] is obtained by evolving
// |phi><phi|, |phi> = d^{-1/2} sum_i |ii>, under (id (x) L_s). It has unit
// trace and is PSD for every interval iff the map is CP over that interval.

#pragma once

#include <span>
#include <string>
#include <vector>

#include "nmw/matrix.hpp"
#include "nmw/rate.hpp"

namespace nmw {

struct HamiltonianTerm {
    ComplexMatrix op;      // Hermitian
    RateFunction coeff;    // c_k(t)
};

struct LindbladChannel {
    ComplexMatrix op;
    RateFunction rate;
    std::string label;
};

class LindbladGenerator {
  public:
    // Throws ConfigError if operator dimensions disagree or a Hamiltonian term is not Hermitian.
    LindbladGenerator(std::size_t dim, std::vector<LindbladChannel> channels,
                      std::vector<HamiltonianTerm> hamiltonian = {});

    std::size_t dim() const noexcept { return dim_; }
    std::span<const LindbladChannel> channels() const noexcept { return channels_; }
    std::span<const HamiltonianTerm> hamiltonian() const noexcept { return hamiltonian_; }

    std::vector<double> rates(double t) const;
    // H(t)
    ComplexMatrix hamiltonian_at(double t) const;

    // The same generator acting on the second factor of C^ancilla (x) C^dim.
    LindbladGenerator lifted(std::size_t ancilla_dim) const;

    // Raw right-hand side; no symmetrization.
    ComplexMatrix apply(double t, const ComplexMatrix& rho) const;

  private:
    struct Cached {
        ComplexMatrix dag;
        ComplexMatrix dag_op;  // L^dagger L
    };

    std::size_t dim_;
    std::vector<LindbladChannel> channels_;
    std::vector<HamiltonianTerm> hamiltonian_;
    std::vector<Cached> cache_;
};

// Unit-trace PSD Hermitian matrix.
class DensityMatrix {
  public:
    // Throws ConfigError unless |Tr - 1| <= 1e-10 and every eigenvalue >= -psd_tol.
    explicit DensityMatrix(HermitianMatrix m, double psd_tol = 1e-10);

    static DensityMatrix pure(std::span<const cplx> psi);
    static DensityMatrix maximally_mixed(std::size_t dim);
    // (I + n . sigma) / 2 with |n| <= 1.
    static DensityMatrix from_bloch(double nx, double ny, double nz);
    static DensityMatrix plus_state();  // |+><+|

    const HermitianMatrix& hermitian() const noexcept { return m_; }
    const ComplexMatrix& matrix() const noexcept { return m_.matrix(); }
    operator const HermitianMatrix&() const noexcept { return m_; }
    std::size_t dim() const noexcept { return m_.dim(); }

  private:
    HermitianMatrix m_;
};

struct TimeInterval {
    double start;
    double length;
};

// Unit-trace Hermitian d^2 x d^2 matrix; negativity is allowed.
class ChoiState {
  public:
    // Throws ConfigError unless dim is a perfect square and |Tr - 1| <= 1e-8.
    ChoiState(HermitianMatrix m, TimeInterval interval);

    // |phi><phi| for a d-dimensional system.
    static ChoiState identity_channel(std::size_t system_dim, TimeInterval interval = {0.0, 0.0});

    const HermitianMatrix& hermitian() const noexcept { return m_; }
    const ComplexMatrix& matrix() const noexcept { return m_.matrix(); }
    operator const HermitianMatrix&() const noexcept { return m_; }
    std::size_t dim() const noexcept { return m_.dim(); }
    std::size_t system_dim() const noexcept { return system_dim_; }
    TimeInterval interval() const noexcept { return interval_; }

  private:
    HermitianMatrix m_;
    std::size_t system_dim_;
    TimeInterval interval_;
};

HermitianMatrix lindblad_rhs(const LindbladGenerator& gen, double t, const HermitianMatrix& rho);

// Classical RK4 on a uniform grid of ceil((t1 - t0) / dt) steps; each step is
// re-symmetrized and renormalized to unit trace. Throws NumericalError if the
// final state has an eigenvalue below -1e-6.
DensityMatrix propagate_state(const LindbladGenerator& gen, const DensityMatrix& rho0, double t0,
                              double t1, double dt);

// States at t0 + k dt, k = 0..steps, integrated sequentially with the same stepper.
std::vector<DensityMatrix> state_trajectory(const LindbladGenerator& gen, const DensityMatrix& rho0,
                                            double t0, double dt, std::size_t steps);

// Choi matrix of the propagator over [t, t + eps] using ceil(eps / dt) RK4 steps.
ChoiState intermediate_choi(const LindbladGenerator& gen, double t, double eps, double dt);

double min_choi_eigenvalue(const ChoiState& c);

// Largest entry modulus of rhs(I/d) at time t; zero for unital generators.
double unitality_defect(const LindbladGenerator& gen, double t);

}  // namespace nmw
