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

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "torusinv/rational.hpp"

namespace torusinv {

/// Semantic label for the variable of a univariate polynomial: `N` for
/// functions on the odd integers, `X` for polynomials in the curve
/// coordinate. Mixing tags in one operation is a contract violation.
enum class Var { N, X };

char var_symbol(Var v);

/// Dense univariate polynomial with exact rational coefficients.
/// Coefficient i is the coefficient of the i-th power of the variable; the
/// representation never carries trailing zeros, so the zero polynomial is the
/// empty coefficient sequence and its degree is nullopt (below every integer).
class UniPoly {
 public:
  explicit UniPoly(Var var) : var_(var) {}
  UniPoly(Var var, std::vector<Rational> coeffs);

  static UniPoly zero(Var var) { return UniPoly(var); }
  static UniPoly constant(Var var, const Rational& c);
  static UniPoly variable(Var var);
  static UniPoly monomial(Var var, std::size_t power, const Rational& coeff);

  Var var() const { return var_; }
  bool is_zero() const { return coeffs_.empty(); }
  std::optional<int> degree() const;
  Rational coeff(std::size_t i) const;
  Rational leading_coeff() const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const Rational& s, UniPoly p);

  /// Exact Horner evaluation.
  Rational eval(const Rational& at) const;

  /// Substitutes `inner` for the variable; the result carries `inner`'s tag.
  UniPoly compose(const UniPoly& inner) const;

  friend bool operator==(const UniPoly& a, const UniPoly& b) {
    return a.var_ == b.var_ && a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

  /// Canonical text: terms in decreasing power, e.g. "n^3 - n",
  /// "1/2*n^2 + 3". Output re-parses to the same polynomial under the
  /// expression grammar.
  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const UniPoly& p) {
    return os << p.str();
  }

 private:
  void normalize();
  static void require_same_var(const UniPoly& a, const UniPoly& b);

  Var var_;
  std::vector<Rational> coeffs_;
};

UniPoly pow(const UniPoly& base, unsigned exponent);

/// Finite set of exact samples of a function on the odd integers.
/// Keys are odd and pairwise distinct.
class SampleSet {
 public:
  SampleSet() = default;

  /// Throws std::domain_error on an even point and std::invalid_argument on a
  /// duplicate one.
  void insert(std::int64_t point, const Rational& value);

  bool empty() const { return points_.empty(); }
  std::size_t size() const { return points_.size(); }
  const std::map<std::int64_t, Rational>& points() const { return points_; }

 private:
  std::map<std::int64_t, Rational> points_;
};

/// The unique polynomial in n of degree < |samples| through all sample
/// points (Newton divided differences, exact). Throws std::invalid_argument
/// on an empty sample set.
UniPoly interpolate(const SampleSet& samples);

/// The `count` odd integers nearest zero, 1, -1, 3, -3, ...; the default
/// sampling nodes when only a degree bound is known. Small magnitudes keep
/// the intermediate rationals small.
std::vector<std::int64_t> nearest_odd_nodes(std::size_t count);

}  // namespace torusinv
