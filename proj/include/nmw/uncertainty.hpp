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

// uncertainty.hpp: variance-based uncertainty functionals over unit-trace Hermitian matrices
//
// Nothing here requires positivity: evaluating these functionals on Choi
// matrices with negative eigenvalues is how non-Markovianity shows up.
// validate_state() is the entry point for callers who need a physical state.

#pragma once

#include <array>
#include <span>

#include "nmw/dynamics.hpp"
#include "nmw/matrix.hpp"

namespace nmw {

// Relations count as violated only below -kViolationTol.
inline constexpr double kViolationTol = 1e-9;

struct ObservablePair {
    HermitianMatrix a;
    HermitianMatrix b;

    // Throws ConfigError on dimension mismatch.
    ObservablePair(HermitianMatrix a, HermitianMatrix b);

    // S_x = sigma_x (x) sigma_y, S_y = sigma_x (x) sigma_x.
    static ObservablePair choi_default();
};

class BlochDirections {
  public:
    // Normalizes r and t; throws ConfigError for a zero vector.
    BlochDirections(std::array<double, 3> r, std::array<double, 3> t);

    const std::array<double, 3>& r() const noexcept { return r_; }
    const std::array<double, 3>& t() const noexcept { return t_; }
    double overlap() const noexcept;  // r . t

    HermitianMatrix a() const;  // r . sigma
    HermitianMatrix b() const;  // t . sigma
    ObservablePair pair() const;

  private:
    std::array<double, 3> r_;
    std::array<double, 3> t_;
};

HermitianMatrix bloch_operator(const std::array<double, 3>& n);

// Throws ConfigError unless state is unit trace within 1e-8 and matches m in dimension.
void check_state_compatible(const ComplexMatrix& m, const HermitianMatrix& state);
// Throws ConfigError unless state is a valid density matrix.
DensityMatrix validate_state(const HermitianMatrix& state);

// Re Tr[state M]
double expectation(const HermitianMatrix& m, const HermitianMatrix& state);
// <M^2> - <M>^2; negative values are possible for non-PSD state.
double variance(const HermitianMatrix& m, const HermitianMatrix& state);

// Var A Var B - |<[A,B]>|^2 / 4 - |<{A,B}> - 2<A><B>|^2 / 4
double rs_lhs(const ObservablePair& pair, const HermitianMatrix& state);

struct SumUncertainty {
    double lhs;  // Var A + Var B
    double rhs;  // |<[A,B]>|
    bool violated() const noexcept { return lhs < rhs - kViolationTol; }
};
SumUncertainty sum_uncertainty(const ObservablePair& pair, const HermitianMatrix& state);

// sum_i Var_C(A_i) - sum_k p_k sum_i Var_{C_k}(A_i), C = sum_k p_k C_k.
// Nonnegative whenever the components are states.
double variance_convexity_gap(std::span<const HermitianMatrix> observables,
                              std::span<const HermitianMatrix> components, std::span<const double> weights);

// (d / (d - 1)) (1 - Tr rho^2)
double linear_entropy(const DensityMatrix& rho, std::size_t d);
double linear_entropy(const DensityMatrix& rho);

// [1 - (r . t)^2] S_l(rho) for A = r . sigma, B = t . sigma on a qubit.
double rs_factorized(const BlochDirections& dirs, const DensityMatrix& rho);

}  // namespace nmw
