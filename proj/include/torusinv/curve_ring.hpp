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
#include <ostream>
#include <string>
#include <utility>

#include "torusinv/unipoly.hpp"

namespace torusinv {

/// Unreduced bivariate polynomial in X and Y: a sparse map from exponent
/// pairs to nonzero rational coefficients. This is the pre-reduction input
/// form; normal_form() turns it into a canonical CurveElement.
class RawBivariate {
 public:
  RawBivariate() = default;

  static RawBivariate constant(const Rational& c);
  static RawBivariate x();
  static RawBivariate y();

  /// Accumulates a coefficient onto the (x_power, y_power) term; terms that
  /// cancel to zero are dropped. Negative powers are rejected.
  void add_term(int x_power, int y_power, const Rational& coeff);

  const std::map<std::pair<int, int>, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  RawBivariate operator-() const;
  friend RawBivariate operator+(RawBivariate a, const RawBivariate& b);
  friend RawBivariate operator-(RawBivariate a, const RawBivariate& b);
  friend RawBivariate operator*(const RawBivariate& a, const RawBivariate& b);

 private:
  std::map<std::pair<int, int>, Rational> terms_;
};

RawBivariate pow(const RawBivariate& base, unsigned exponent);

/// Canonical residue p(X) + q(X)*Y in Q[X,Y]/(X^3 + X^2 - Y^2).
///
/// The defining relation is monic of degree 2 in Y, so every residue class
/// has exactly one representative with Y-degree <= 1; equality of elements is
/// coefficientwise equality of the pair (p, q).
class CurveElement {
 public:
  CurveElement()
      : p_(UniPoly::zero(Var::X)), q_(UniPoly::zero(Var::X)) {}

  /// Both parts must be polynomials in X.
  CurveElement(UniPoly p, UniPoly q);

  static CurveElement zero() { return CurveElement(); }
  static CurveElement constant(const Rational& c);
  static CurveElement one() { return constant(Rational(1)); }
  static CurveElement x();
  static CurveElement y();
  static CurveElement x_power(unsigned l);

  const UniPoly& p() const { return p_; }
  const UniPoly& q() const { return q_; }
  bool is_zero() const { return p_.is_zero() && q_.is_zero(); }

  CurveElement operator-() const;
  friend CurveElement operator+(const CurveElement& a, const CurveElement& b);
  friend CurveElement operator-(const CurveElement& a, const CurveElement& b);
  friend CurveElement operator*(const CurveElement& a, const CurveElement& b);
  friend CurveElement operator*(const Rational& s, const CurveElement& a);

  friend bool operator==(const CurveElement& a, const CurveElement& b) {
    return a.p_ == b.p_ && a.q_ == b.q_;
  }
  friend bool operator!=(const CurveElement& a, const CurveElement& b) {
    return !(a == b);
  }

  /// Value on the knot indexed by the odd integer n:
  /// p(n^2-1) + q(n^2-1)*(n^3-n). Throws std::domain_error for even n.
  Rational eval_at(std::int64_t n) const;

  /// The element as a polynomial function on the odd integers, expanded in n.
  /// The result always takes equal values at n = 1 and n = -1.
  UniPoly to_function() const;

  /// Filtration order: max(2*deg p, 3 + 2*deg q), with absent parts ignored;
  /// 0 for nonzero constants. Undefined for the zero element
  /// (std::domain_error).
  int order() const;

  /// Canonical text "p(X) + (q(X))*Y"; "0" for the zero element.
  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const CurveElement& e) {
    return os << e.str();
  }

 private:
  UniPoly p_;
  UniPoly q_;
};

/// Rewrites every power Y^j with j >= 2 through Y^2 = X^3 + X^2 and collects
/// the result into the canonical (p, q) pair. Idempotent on reduced input.
CurveElement normal_form(const RawBivariate& raw);

/// Images of the generators under the evaluation isomorphism onto functions
/// on odd integers: X becomes n^2 - 1, Y becomes n^3 - n.
UniPoly x_image();
UniPoly y_image();

}  // namespace torusinv
