// Copyright 2026 The torusinv Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

#include "torusinv/curve_ring.hpp"
#include "torusinv/unipoly.hpp"

namespace torusinv {

/// Syntax or mixed-variable error, with the 1-based source column.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t column)
      : std::runtime_error("column " + std::to_string(column) + ": " + message),
        column_(column) {}

  std::size_t column() const { return column_; }

 private:
  std::size_t column_;
};

/// Abstract syntax tree node for the expression grammar
///   expr   := term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := atom ('^' uint)?
///   atom   := rational | 'X' | 'Y' | 'n' | '(' expr ')' | '-' atom
/// Note the grammar binds '^' to the whole atom, so "-n^2" is (-n)^2.
struct Expression {
  enum class Kind { Constant, Variable, Add, Subtract, Multiply, Power, Negate };

  Kind kind;
  Rational value;                // Constant
  char variable = 0;             // Variable: 'X', 'Y' or 'n'
  unsigned exponent = 0;         // Power
  std::unique_ptr<Expression> lhs;  // operand of Negate/Power, left of binary
  std::unique_ptr<Expression> rhs;  // right operand of binary nodes
};

struct ParsedExpression {
  std::unique_ptr<Expression> root;
  bool uses_xy = false;
  bool uses_n = false;
};

/// Recursive-descent parse; whitespace insensitive. An expression may use
/// either {X, Y} or {n}, never both.
ParsedExpression parse_expression(std::string_view source);

/// Evaluates an X,Y expression into an unreduced bivariate polynomial.
/// The tree must not contain the variable n.
RawBivariate to_bivariate(const Expression& expr);

/// Evaluates an n expression into a polynomial in n.
/// The tree must not contain X or Y.
UniPoly to_function_poly(const Expression& expr);

}  // namespace torusinv
