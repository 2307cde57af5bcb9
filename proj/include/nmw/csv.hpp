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

#pragma once

#include <istream>
#include <string>

#include "nmw/matrix.hpp"

namespace nmw {

// 12 significant digits, '.' decimal point regardless of locale.
std::string format_number(double x);

// One matrix row per line, each row a sequence of "re,im" pairs:
//   re00,im00,re01,im01,...
// Blank lines and lines starting with '#' are skipped.
ComplexMatrix read_matrix_csv(std::istream& in, const std::string& name = "matrix");
std::string write_matrix_csv(const ComplexMatrix& m);

}  // namespace nmw
