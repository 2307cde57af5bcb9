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

// Fixed-seed generators shared by the unit suites and the acceptance binary.
// Draws come from raw 64-bit words so sequences are identical across standard libraries.

#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "nmw/dynamics.hpp"
#include "nmw/matrix.hpp"

namespace nmw::testing {

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // [0, 1)
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    std::size_t index(std::size_t n) { return static_cast<std::size_t>(uniform() * static_cast<double>(n)); }

    // Box-Muller; the second variate is discarded to keep the stream simple.
    double normal() {
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * uniform());
    }
    cplx complex_normal() { return {normal(), normal()}; }

  private:
    std::mt19937_64 engine_;
};

inline ComplexMatrix random_matrix(Rng& rng, std::size_t d) {
    ComplexMatrix m(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) m(i, j) = rng.complex_normal();
    return m;
}

inline HermitianMatrix random_hermitian(Rng& rng, std::size_t d, double scale = 1.0) {
    ComplexMatrix m = random_matrix(rng, d);
    ComplexMatrix h = m + m.adjoint();
    h *= 0.5 * scale;
    return HermitianMatrix::symmetrized(h);
}

// Gram-Schmidt on Gaussian columns; columns of the result are orthonormal.
inline ComplexMatrix random_unitary(Rng& rng, std::size_t d) {
    ComplexMatrix g = random_matrix(rng, d);
    for (std::size_t c = 0; c < d; ++c) {
        for (std::size_t p = 0; p < c; ++p) {
            cplx dot = 0.0;
            for (std::size_t r = 0; r < d; ++r) dot += std::conj(g(r, p)) * g(r, c);
            for (std::size_t r = 0; r < d; ++r) g(r, c) -= dot * g(r, p);
        }
        double norm = 0.0;
        for (std::size_t r = 0; r < d; ++r) norm += std::norm(g(r, c));
        norm = std::sqrt(norm);
        for (std::size_t r = 0; r < d; ++r) g(r, c) /= norm;
    }
    return g;
}

// U diag(spectrum) U^dagger for a random U.
inline HermitianMatrix with_spectrum(Rng& rng, const std::vector<double>& spectrum) {
    const ComplexMatrix u = random_unitary(rng, spectrum.size());
    return HermitianMatrix::symmetrized(u * ComplexMatrix::diagonal(spectrum) * u.adjoint());
}

// G G^dagger / Tr, full rank with probability one.
inline DensityMatrix random_density(Rng& rng, std::size_t d) {
    const ComplexMatrix g = random_matrix(rng, d);
    ComplexMatrix rho = g * g.adjoint();
    rho *= 1.0 / trace(rho).real();
    return DensityMatrix(HermitianMatrix::symmetrized(rho));
}

// Unit trace, at least one eigenvalue at or below -min_gap.
inline HermitianMatrix random_nonpositive_unit_trace(Rng& rng, std::size_t d, double min_gap = 1e-6) {
    std::vector<double> spec(d);
    spec[0] = -rng.uniform(min_gap, 0.5);
    double rest = 0.0;
    for (std::size_t k = 1; k < d; ++k) {
        spec[k] = rng.uniform(-0.3, 1.0);
        rest += spec[k];
    }
    // Shift the other eigenvalues so the total is one; spec[0] stays fixed.
    const double shift = (1.0 - spec[0] - rest) / static_cast<double>(d - 1);
    for (std::size_t k = 1; k < d; ++k) spec[k] += shift;
    return with_spectrum(rng, spec);
}

inline std::array<double, 3> random_direction(Rng& rng) {
    std::array<double, 3> v{rng.normal(), rng.normal(), rng.normal()};
    const double n = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
    for (double& x : v) x /= n;
    return v;
}

inline DensityMatrix random_bloch_state(Rng& rng) {
    const auto n = random_direction(rng);
    const double r = std::cbrt(rng.uniform());
    return DensityMatrix::from_bloch(r * n[0], r * n[1], r * n[2]);
}

inline double max_abs_entry(const ComplexMatrix& m) {
    double best = 0.0;
    for (const cplx& z : m.entries()) best = std::max(best, std::abs(z));
    return best;
}

}  // namespace nmw::testing
