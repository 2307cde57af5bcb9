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

#include "nmw/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "nmw/errors.hpp"

namespace nmw {

namespace {

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* where) {
    if (a.dim() != b.dim()) {
        throw ConfigError(std::string(where) + ": dimension mismatch (" + std::to_string(a.dim()) +
                          " vs " + std::to_string(b.dim()) + ")");
    }
}

void require_supported(std::size_t dim, const char* where) {
    if (dim > kMaxDim) {
        throw ConfigError(std::string(where) + ": dimension " + std::to_string(dim) +
                          " exceeds supported maximum " + std::to_string(kMaxDim));
    }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {
    require_supported(dim, "ComplexMatrix");
}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<cplx> entries)
    : dim_(dim), entries_(std::move(entries)) {
    require_supported(dim, "ComplexMatrix");
    if (entries_.size() != dim * dim) {
        throw ConfigError("ComplexMatrix: expected " + std::to_string(dim * dim) + " entries, got " +
                          std::to_string(entries_.size()));
    }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows)
    : dim_(rows.size()) {
    require_supported(dim_, "ComplexMatrix");
    entries_.reserve(dim_ * dim_);
    for (const auto& row : rows) {
        if (row.size() != dim_) throw ConfigError("ComplexMatrix: ragged initializer");
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
    ComplexMatrix m(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
    return m;
}

ComplexMatrix ComplexMatrix::outer(std::span<const cplx> v, std::span<const cplx> w) {
    if (v.size() != w.size()) throw ConfigError("outer: vector length mismatch");
    ComplexMatrix m(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j < w.size(); ++j) m(i, j) = v[i] * std::conj(w[j]);
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) out(i, j) = std::conj((*this)(j, i));
    return out;
}

double ComplexMatrix::hermiticity_defect() const {
    double worst = 0.0;
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = i; j < dim_; ++j)
            worst = std::max(worst, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return worst;
}

bool ComplexMatrix::is_hermitian(double tol) const { return hermiticity_defect() <= tol; }

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
    require_same_dim(*this, other, "operator+");
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += other.entries_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
    require_same_dim(*this, other, "operator-");
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= other.entries_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx scale) {
    for (auto& e : entries_) e *= scale;
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b, "operator*");
    const std::size_t n = a.dim();
    ComplexMatrix out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const cplx aik = a(i, k);
            if (aik == cplx{}) continue;
            for (std::size_t j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
        }
    return out;
}

HermitianMatrix::HermitianMatrix(ComplexMatrix m, double tol) : m_(std::move(m)) {
    const double defect = m_.hermiticity_defect();
    if (defect > tol) {
        throw ConfigError("HermitianMatrix: input is not Hermitian (defect " + std::to_string(defect) +
                          ")");
    }
}

HermitianMatrix HermitianMatrix::symmetrized(const ComplexMatrix& m) {
    HermitianMatrix h;
    h.m_ = (m + m.adjoint()) * 0.5;
    return h;
}

ComplexMatrix SpectralDecomposition::projector(std::size_t k) const {
    return ComplexMatrix::outer(eigenvectors.at(k), eigenvectors.at(k));
}

ComplexMatrix SpectralDecomposition::reconstruct() const {
    ComplexMatrix out(eigenvalues.size());
    for (std::size_t k = 0; k < eigenvalues.size(); ++k) out += projector(k) * eigenvalues[k];
    return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    const std::size_t da = a.dim(), db = b.dim();
    if (da * db > kMaxDim) {
        throw ConfigError("kron: product dimension " + std::to_string(da * db) +
                          " exceeds supported maximum " + std::to_string(kMaxDim));
    }
    ComplexMatrix out(da * db);
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < da; ++j)
            for (std::size_t k = 0; k < db; ++k)
                for (std::size_t l = 0; l < db; ++l) out(i * db + k, j * db + l) = a(i, j) * b(k, l);
    return out;
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) { return a * b - b * a; }

ComplexMatrix anticommutator(const ComplexMatrix& a, const ComplexMatrix& b) {
    return a * b + b * a;
}

double hs_norm_sq(const ComplexMatrix& m) {
    double sum = 0.0;
    for (const auto& e : m.entries()) sum += std::norm(e);
    return sum;
}

cplx trace(const ComplexMatrix& m) {
    cplx sum{};
    for (std::size_t i = 0; i < m.dim(); ++i) sum += m(i, i);
    return sum;
}

cplx trace_product(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b, "trace_product");
    cplx sum{};
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t k = 0; k < a.dim(); ++k) sum += a(i, k) * b(k, i);
    return sum;
}

double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
    return std::sqrt(hs_norm_sq(a - b));
}

namespace pauli {

ComplexMatrix i2() { return ComplexMatrix::identity(2); }
ComplexMatrix x() { return {{0.0, 1.0}, {1.0, 0.0}}; }
ComplexMatrix y() { return {{0.0, cplx{0.0, -1.0}}, {cplx{0.0, 1.0}, 0.0}}; }
ComplexMatrix z() { return {{1.0, 0.0}, {0.0, -1.0}}; }
ComplexMatrix plus() { return {{0.0, 1.0}, {0.0, 0.0}}; }
ComplexMatrix minus() { return {{0.0, 0.0}, {1.0, 0.0}}; }

ComplexMatrix from_label(std::string_view label) {
    if (label.empty()) throw ConfigError("pauli label is empty");
    ComplexMatrix out = ComplexMatrix::identity(1);
    for (char c : label) {
        ComplexMatrix factor;
        switch (c) {
            case 'i': case 'I': factor = i2(); break;
            case 'x': case 'X': factor = x(); break;
            case 'y': case 'Y': factor = y(); break;
            case 'z': case 'Z': factor = z(); break;
            default:
                throw ConfigError("pauli label '" + std::string(label) + "' has unknown factor '" + c + "'");
        }
        out = kron(out, factor);
    }
    return out;
}

}  // namespace pauli

}  // namespace nmw
