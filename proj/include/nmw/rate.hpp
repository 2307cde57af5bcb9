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

// rate.hpp: time-dependent Lindblad coefficients Gamma(t), in dimensionless units.

#pragma once

#include <functional>
#include <istream>
#include <string>
#include <vector>

#include "nmw/expr.hpp"

namespace nmw {

class RateFunction {
  public:
    enum class Kind { Parametric, Expression, Table };

    RateFunction() : RateFunction(constant(0.0)) {}

    static RateFunction constant(double value);
    static RateFunction parametric(std::function<double(double)> fn, std::string description);
    static RateFunction expression(RateExpression expr);
    // Linear interpolation inside [times.front(), times.back()], constant outside.
    // times must be strictly increasing.
    static RateFunction table(std::vector<double> times, std::vector<double> values,
                              std::string description = "table");

    double operator()(double t) const { return fn_(t); }
    Kind kind() const noexcept { return kind_; }
    const std::string& description() const noexcept { return description_; }

  private:
    RateFunction(Kind kind, std::function<double(double)> fn, std::string description)
        : kind_(kind), fn_(std::move(fn)), description_(std::move(description)) {}

    Kind kind_;
    std::function<double(double)> fn_;
    std::string description_;
};

// Two-column CSV "t,rate" with a header row. '#' lines and blank lines are skipped.
RateFunction read_rate_table(std::istream& in, const std::string& name = "table");
RateFunction load_rate_table(const std::string& path);

// "@path.csv" loads a table, anything else is parsed as an expression.
RateFunction rate_from_spec(const std::string& spec);

}  // namespace nmw
