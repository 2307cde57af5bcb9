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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nmw {

// Bad inputs: wrong dimensions, non-Hermitian matrices, invalid parameters.
// The CLI maps these to exit code 2.
class ConfigError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// Rate-expression syntax errors, carrying the byte offset of the failure.
class ParseError : public ConfigError {
  public:
    ParseError(const std::string& message, std::size_t offset)
        : ConfigError(message + " at offset " + std::to_string(offset)), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

  private:
    std::size_t offset_;
};

// Integration blow-up, poles of a rate function, failed convergence.
// The CLI maps these to exit code 3.
class NumericalError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// A rate function evaluated at (or integrated across) one of its poles.
class SingularRateError : public NumericalError {
  public:
    SingularRateError(const std::string& message, double location)
        : NumericalError(message), location_(location) {}

    double location() const noexcept { return location_; }

  private:
    double location_;
};

}  // namespace nmw
