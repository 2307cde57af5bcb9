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

// expr.hpp: arithmetic expressions in one variable t, used to supply rate functions.
//
// Grammar (lowest to highest precedence):
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := ('-' | '+') unary | power
//   power   := primary ('^' unary)?          right-associative
//   primary := number | 't' | 'pi' | 'e' | func '(' expr ')' | '(' expr ')'
// so "-2^2" is -4 and "2^3^2" is 512.

#pragma once

#include <memory>
#include <string>
#include <string_view>

namespace nmw {

class RateExpression {
  public:
    struct Node;

    // Throws ParseError (with byte offset) on bad input.
    static RateExpression parse(std::string_view source);

    double evaluate(double t) const;
    double operator()(double t) const { return evaluate(t); }

    const std::string& source() const noexcept { return source_; }
    // Fully parenthesized rendering; parse(to_string()) evaluates identically.
    std::string to_string() const;

  private:
    RateExpression(std::string source, std::shared_ptr<const Node> root)
        : source_(std::move(source)), root_(std::move(root)) {}

    std::string source_;
    std::shared_ptr<const Node> root_;
};

}  // namespace nmw
