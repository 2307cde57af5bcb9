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

// witnesses.hpp: witness operators built from the spectrum of a (possibly non-PSD) Choi matrix
//
// All functions take a unit-trace HermitianMatrix so they apply to ChoiState
// and to synthetic test matrices of any dimension alike.

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nmw/errors.hpp"
#include "nmw/matrix.hpp"
#include "nmw/uncertainty.hpp"

namespace nmw {

inline constexpr double kDetectTol = 1e-9;

struct EigenPair {
    double value;
    std::vector<cplx> vector;
};

// Eigenpairs with eigenvalue < -tol, most negative first.
std::vector<EigenPair> negative_eigenspace(const HermitianMatrix& c, double tol = kDetectTol);

// No negative eigenvalue to build a violating pair from. Distinct from a
// detection failure.
class NotConstructibleError : public ConfigError {
  public:
    using ConfigError::ConfigError;
};

struct RsViolatingPair {
    HermitianMatrix h1;  // projector onto the most negative eigenvector
    HermitianMatrix h2;  // sum_{k != l} |k><l| over the full eigenbasis
    double eigenvalue;   // the eigenvalue h1 projects onto
};

// Throws NotConstructibleError if c has no eigenvalue below -tol.
RsViolatingPair construct_rs_violating_pair(const HermitianMatrix& c, double tol = kDetectTol);

// Tr[C P_i] for every spectral projector, ascending; equals the eigenvalues.
std::vector<double> projective_witness_values(const HermitianMatrix& c);

// Var_C(W). For a projector onto eigenvalue l this is l - l^2.
double variance_witness(const HermitianMatrix& c, const HermitianMatrix& w);

enum class Verdict { MarkovianConsistent, NonMarkovianDetected };
std::string to_string(Verdict v);

struct WitnessReport {
    double min_eigenvalue = 0.0;
    std::size_t negative_count = 0;
    std::vector<double> projective_values;
    std::optional<double> rs_pair_value;
    std::optional<SumUncertainty> sum_pair_value;
    std::vector<double> variance_witness_values;
    Verdict verdict = Verdict::MarkovianConsistent;
};

// Verdict is NonMarkovianDetected iff the minimum eigenvalue is below -tol; in
// that case the RS pair is always built. With two or more negative eigenvalues
// the sum relation is evaluated on the two most negative eigenprojectors.
WitnessReport detect(const HermitianMatrix& c, double tol = kDetectTol);

// Header and row for the one-line CSV serialization. List fields are ';'-joined.
std::string witness_report_csv_header();
std::string witness_report_csv_row(const WitnessReport& r);

}  // namespace nmw
