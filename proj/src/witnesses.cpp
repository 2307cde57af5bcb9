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

#include "nmw/witnesses.hpp"

#include <algorithm>

#include "nmw/csv.hpp"
#include "nmw/errors.hpp"

namespace nmw {

std::vector<EigenPair> negative_eigenspace(const HermitianMatrix& c, double tol) {
    if (!(tol > 0.0)) throw ConfigError("negative_eigenspace: tol must be positive");
    SpectralDecomposition spec = hermitian_eig(c);
    std::vector<EigenPair> out;
    for (std::size_t k = 0; k < spec.eigenvalues.size() && spec.eigenvalues[k] < -tol; ++k)
        out.push_back({spec.eigenvalues[k], std::move(spec.eigenvectors[k])});
    return out;
}

RsViolatingPair construct_rs_violating_pair(const HermitianMatrix& c, double tol) {
    const SpectralDecomposition spec = hermitian_eig(c);
    if (spec.eigenvalues.empty() || !(spec.eigenvalues.front() < -tol))
        throw NotConstructibleError("construct_rs_violating_pair: matrix has no negative eigenvalue");

    const std::size_t n = spec.eigenvalues.size();
    HermitianMatrix h1 = HermitianMatrix::symmetrized(spec.projector(0));
    ComplexMatrix h2(n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l)
            if (k != l) h2 += ComplexMatrix::outer(spec.eigenvectors[k], spec.eigenvectors[l]);
    return {std::move(h1), HermitianMatrix::symmetrized(h2), spec.eigenvalues.front()};
}

std::vector<double> projective_witness_values(const HermitianMatrix& c) {
    const SpectralDecomposition spec = hermitian_eig(c);
    std::vector<double> out;
    out.reserve(spec.eigenvalues.size());
    for (std::size_t k = 0; k < spec.eigenvalues.size(); ++k)
        out.push_back(trace_product(c.matrix(), spec.projector(k)).real());
    return out;
}

double variance_witness(const HermitianMatrix& c, const HermitianMatrix& w) { return variance(w, c); }

std::string to_string(Verdict v) {
    return v == Verdict::NonMarkovianDetected ? "NON_MARKOVIAN_DETECTED" : "MARKOVIAN_CONSISTENT";
}

WitnessReport detect(const HermitianMatrix& c, double tol) {
    if (!(tol > 0.0)) throw ConfigError("detect: tol must be positive");
    const SpectralDecomposition spec = hermitian_eig(c);
    WitnessReport r;
    r.min_eigenvalue = spec.eigenvalues.front();
    r.negative_count = static_cast<std::size_t>(
        std::count_if(spec.eigenvalues.begin(), spec.eigenvalues.end(), [tol](double l) { return l < -tol; }));

    std::vector<HermitianMatrix> projectors;
    for (std::size_t k = 0; k < spec.eigenvalues.size(); ++k) {
        projectors.push_back(HermitianMatrix::symmetrized(spec.projector(k)));
        r.projective_values.push_back(trace_product(c.matrix(), projectors.back().matrix()).real());
        r.variance_witness_values.push_back(variance_witness(c, projectors.back()));
    }

    if (r.negative_count > 0) {
        r.verdict = Verdict::NonMarkovianDetected;
        const RsViolatingPair pair = construct_rs_violating_pair(c, tol);
        r.rs_pair_value = rs_lhs(ObservablePair(pair.h1, pair.h2), c);
    }
    if (r.negative_count >= 2) {
        r.sum_pair_value = sum_uncertainty(ObservablePair(projectors[0], projectors[1]), c);
    }
    return r;
}

std::string witness_report_csv_header() {
    return "min_eigenvalue,negative_count,projective_values,rs_pair_value,sum_lhs,sum_rhs,"
           "variance_witness_values,verdict";
}

std::string witness_report_csv_row(const WitnessReport& r) {
    auto join = [](const std::vector<double>& xs) {
        std::string out;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            if (i) out += ';';
            out += format_number(xs[i]);
        }
        return out;
    };
    std::string row = format_number(r.min_eigenvalue);
    row += ',' + std::to_string(r.negative_count);
    row += ',' + join(r.projective_values);
    row += ',' + (r.rs_pair_value ? format_number(*r.rs_pair_value) : std::string());
    row += ',' + (r.sum_pair_value ? format_number(r.sum_pair_value->lhs) : std::string());
    row += ',' + (r.sum_pair_value ? format_number(r.sum_pair_value->rhs) : std::string());
    row += ',' + join(r.variance_witness_values);
    row += ',' + to_string(r.verdict);
    return row;
}

}  // namespace nmw
