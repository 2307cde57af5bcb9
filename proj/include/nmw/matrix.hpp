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

// matrix.hpp: dense complex matrices for small open-system problems (d <= 16)
//
// ComplexMatrix is a plain row-major value type. HermitianMatrix is the
// validated wrapper every state, Choi matrix and observable is built on.

#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string_view>
#include <vector>

namespace nmw {

using cplx = std::complex<double>;

inline constexpr std::size_t kMaxDim = 16;
inline constexpr double kHermitianTol = 1e-12;

class ComplexMatrix {
  public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(std::size_t dim);
    ComplexMatrix(std::size_t dim, std::vector<cplx> entries);
    // Row-major nested initializer, e.g. {{1, 0}, {0, -1}}.
    ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows);

    static ComplexMatrix identity(std::size_t dim);
    static ComplexMatrix diagonal(std::span<const double> values);
    // |v><w|
    static ComplexMatrix outer(std::span<const cplx> v, std::span<const cplx> w);

    std::size_t dim() const noexcept { return dim_; }
    std::span<const cplx> entries() const noexcept { return entries_; }

    cplx& operator()(std::size_t row, std::size_t col) { return entries_[row * dim_ + col]; }
    const cplx& operator()(std::size_t row, std::size_t col) const {
        return entries_[row * dim_ + col];
    }

    ComplexMatrix adjoint() const;
    bool is_hermitian(double tol = kHermitianTol) const;
    // Largest |M(i,j) - conj(M(j,i))|.
    double hermiticity_defect() const;

    ComplexMatrix& operator+=(const ComplexMatrix& other);
    ComplexMatrix& operator-=(const ComplexMatrix& other);
    ComplexMatrix& operator*=(cplx scale);

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
    friend ComplexMatrix operator*(ComplexMatrix a, cplx s) { return a *= s; }
    friend ComplexMatrix operator*(cplx s, ComplexMatrix a) { return a *= s; }
    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
    friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

  private:
    std::size_t dim_ = 0;
    std::vector<cplx> entries_;
};

// A ComplexMatrix known to satisfy M = M^dagger within kHermitianTol.
class HermitianMatrix {
  public:
    HermitianMatrix() = default;
    // Throws ConfigError if the input is not Hermitian within tol.
    explicit HermitianMatrix(ComplexMatrix m, double tol = kHermitianTol);

    // (M + M^dagger) / 2, no check.
    static HermitianMatrix symmetrized(const ComplexMatrix& m);

    const ComplexMatrix& matrix() const noexcept { return m_; }
    operator const ComplexMatrix&() const noexcept { return m_; }
    std::size_t dim() const noexcept { return m_.dim(); }
    const cplx& operator()(std::size_t r, std::size_t c) const { return m_(r, c); }

  private:
    ComplexMatrix m_;
};

struct SpectralDecomposition {
    std::vector<double> eigenvalues;                // ascending
    std::vector<std::vector<cplx>> eigenvectors;    // orthonormal, eigenvectors[k] pairs with eigenvalues[k]

    ComplexMatrix reconstruct() const;
    ComplexMatrix projector(std::size_t k) const;
};

// Cyclic complex Jacobi. Converges when the largest off-diagonal modulus drops
// below 1e-13 (scaled by max(1, ||M||_F)); throws NumericalError after 100 sweeps.
SpectralDecomposition hermitian_eig(const HermitianMatrix& m);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix anticommutator(const ComplexMatrix& a, const ComplexMatrix& b);
// Tr[M^dagger M]
double hs_norm_sq(const ComplexMatrix& m);
cplx trace(const ComplexMatrix& m);
// Tr[A B] without forming the product.
cplx trace_product(const ComplexMatrix& a, const ComplexMatrix& b);
double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b);

namespace pauli {
ComplexMatrix i2();
ComplexMatrix x();
ComplexMatrix y();
ComplexMatrix z();
// sigma_+ = (x + i y) / 2 = |0><1|, sigma_- = (x - i y) / 2 = |1><0|
ComplexMatrix plus();
ComplexMatrix minus();
// Tensor product of single-qubit Paulis from a label such as "xy" or "zi".
ComplexMatrix from_label(std::string_view label);
}  // namespace pauli

}  // namespace nmw
