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

// Cyclic Jacobi for complex Hermitian matrices.
//
// Each (p, q) rotation is U = V R where V = diag(1, e^{-i phi}) makes the pivot
// real and R is the classical real Jacobi rotation on the resulting 2x2 block.

#include <algorithm>
#include <cmath>
#include <numeric>

#include "nmw/errors.hpp"
#include "nmw/matrix.hpp"

namespace nmw {

namespace {

constexpr double kOffDiagTol = 1e-13;
constexpr int kMaxSweeps = 100;

double max_off_diagonal(const ComplexMatrix& a) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = i + 1; j < a.dim(); ++j) worst = std::max(worst, std::abs(a(i, j)));
    return worst;
}

void rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
    const cplx apq = a(p, q);
    const double mag = std::abs(apq);
    if (mag == 0.0) return;
    const cplx phase = apq / mag;  // e^{i phi}

    const double app = a(p, p).real();
    const double aqq = a(q, q).real();
    const double theta = (aqq - app) / (2.0 * mag);
    const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    const double c = 1.0 / std::sqrt(t * t + 1.0);
    const double s = t * c;

    // U restricted to the (p, q) block.
    const cplx upp = c;
    const cplx upq = s;
    const cplx uqp = -s * std::conj(phase);
    const cplx uqq = c * std::conj(phase);

    const std::size_t n = a.dim();
    for (std::size_t k = 0; k < n; ++k) {
        const cplx akp = a(k, p), akq = a(k, q);
        a(k, p) = akp * upp + akq * uqp;
        a(k, q) = akp * upq + akq * uqq;
    }
    for (std::size_t k = 0; k < n; ++k) {
        const cplx apk = a(p, k), aqk = a(q, k);
        a(p, k) = std::conj(upp) * apk + std::conj(uqp) * aqk;
        a(q, k) = std::conj(upq) * apk + std::conj(uqq) * aqk;
    }
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    a(p, p) = a(p, p).real();
    a(q, q) = a(q, q).real();

    for (std::size_t k = 0; k < n; ++k) {
        const cplx vkp = v(k, p), vkq = v(k, q);
        v(k, p) = vkp * upp + vkq * uqp;
        v(k, q) = vkp * upq + vkq * uqq;
    }
}

}  // namespace

SpectralDecomposition hermitian_eig(const HermitianMatrix& m) {
    const std::size_t n = m.dim();
    ComplexMatrix a = m.matrix();
    ComplexMatrix v = ComplexMatrix::identity(n);

    const double threshold = kOffDiagTol * std::max(1.0, std::sqrt(hs_norm_sq(a)));
    int sweep = 0;
    while (max_off_diagonal(a) >= threshold) {
        if (++sweep > kMaxSweeps) {
            throw NumericalError("hermitian_eig: Jacobi did not converge in 100 sweeps");
        }
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) rotate(a, v, p, q);
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    // Stable sort keeps ties in solver order so output is deterministic.
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

    SpectralDecomposition out;
    out.eigenvalues.reserve(n);
    out.eigenvectors.reserve(n);
    for (std::size_t k : order) {
        out.eigenvalues.push_back(a(k, k).real());
        std::vector<cplx> col(n);
        for (std::size_t i = 0; i < n; ++i) col[i] = v(i, k);
        out.eigenvectors.push_back(std::move(col));
    }
    return out;
}

}  // namespace nmw
