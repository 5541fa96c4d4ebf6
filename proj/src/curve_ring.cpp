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

#include "torusinv/curve_ring.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace torusinv {

namespace {

// X^3 + X^2, the right-hand side of the defining relation Y^2 = X^3 + X^2.
const UniPoly& relation_rhs() {
  static const UniPoly r(Var::X,
                         {Rational(0), Rational(0), Rational(1), Rational(1)});
  return r;
}

}  // namespace

RawBivariate RawBivariate::constant(const Rational& c) {
  RawBivariate r;
  r.add_term(0, 0, c);
  return r;
}

RawBivariate RawBivariate::x() {
  RawBivariate r;
  r.add_term(1, 0, Rational(1));
  return r;
}

RawBivariate RawBivariate::y() {
  RawBivariate r;
  r.add_term(0, 1, Rational(1));
  return r;
}

void RawBivariate::add_term(int x_power, int y_power, const Rational& coeff) {
  if (x_power < 0 || y_power < 0)
    throw std::invalid_argument("negative exponent in bivariate term");
  if (coeff.is_zero()) return;
  const auto key = std::make_pair(x_power, y_power);
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, coeff);
    return;
  }
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

RawBivariate RawBivariate::operator-() const {
  RawBivariate r;
  for (const auto& [key, c] : terms_) r.terms_.emplace(key, -c);
  return r;
}

RawBivariate operator+(RawBivariate a, const RawBivariate& b) {
  for (const auto& [key, c] : b.terms_) a.add_term(key.first, key.second, c);
  return a;
}

RawBivariate operator-(RawBivariate a, const RawBivariate& b) {
  for (const auto& [key, c] : b.terms_) a.add_term(key.first, key.second, -c);
  return a;
}

RawBivariate operator*(const RawBivariate& a, const RawBivariate& b) {
  RawBivariate r;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_)
      r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
  return r;
}

RawBivariate pow(const RawBivariate& base, unsigned exponent) {
  RawBivariate result = RawBivariate::constant(Rational(1));
  RawBivariate sq = base;
  unsigned e = exponent;
  while (e > 0) {
    if (e & 1u) result = result * sq;
    e >>= 1u;
    if (e > 0) sq = sq * sq;
  }
  return result;
}

CurveElement::CurveElement(UniPoly p, UniPoly q)
    : p_(std::move(p)), q_(std::move(q)) {
  if (p_.var() != Var::X || q_.var() != Var::X)
    throw std::invalid_argument("curve element parts must be polynomials in X");
}

CurveElement CurveElement::constant(const Rational& c) {
  return CurveElement(UniPoly::constant(Var::X, c), UniPoly::zero(Var::X));
}

CurveElement CurveElement::x() {
  return CurveElement(UniPoly::variable(Var::X), UniPoly::zero(Var::X));
}

CurveElement CurveElement::y() {
  return CurveElement(UniPoly::zero(Var::X),
                      UniPoly::constant(Var::X, Rational(1)));
}

CurveElement CurveElement::x_power(unsigned l) {
  return CurveElement(UniPoly::monomial(Var::X, l, Rational(1)),
                      UniPoly::zero(Var::X));
}

CurveElement CurveElement::operator-() const {
  return CurveElement(-p_, -q_);
}

CurveElement operator+(const CurveElement& a, const CurveElement& b) {
  return CurveElement(a.p_ + b.p_, a.q_ + b.q_);
}

CurveElement operator-(const CurveElement& a, const CurveElement& b) {
  return CurveElement(a.p_ - b.p_, a.q_ - b.q_);
}

// (p1 + q1 Y)(p2 + q2 Y) = p1 p2 + q1 q2 Y^2 + (p1 q2 + p2 q1) Y, with Y^2
// rewritten through the relation.
CurveElement operator*(const CurveElement& a, const CurveElement& b) {
  return CurveElement(a.p_ * b.p_ + a.q_ * b.q_ * relation_rhs(),
                      a.p_ * b.q_ + b.p_ * a.q_);
}

CurveElement operator*(const Rational& s, const CurveElement& a) {
  return CurveElement(s * a.p_, s * a.q_);
}

Rational CurveElement::eval_at(std::int64_t n) const {
  if (n % 2 == 0) throw std::domain_error("n must be odd");
  const Integer big_n(static_cast<long>(n));
  const Rational x_val(Integer(big_n * big_n - 1));
  const Rational y_val(Integer(big_n * big_n * big_n - big_n));
  return p_.eval(x_val) + q_.eval(x_val) * y_val;
}

UniPoly CurveElement::to_function() const {
  return p_.compose(x_image()) + q_.compose(x_image()) * y_image();
}

int CurveElement::order() const {
  if (is_zero())
    throw std::domain_error("order of the zero element is undefined");
  int ord = 0;
  if (auto d = p_.degree()) ord = std::max(ord, 2 * *d);
  if (auto d = q_.degree()) ord = std::max(ord, 3 + 2 * *d);
  return ord;
}

std::string CurveElement::str() const {
  if (is_zero()) return "0";
  std::string out;
  if (!p_.is_zero()) out += p_.str();
  if (!q_.is_zero()) {
    if (!out.empty()) out += " + ";
    out += "(" + q_.str() + ")*Y";
  }
  return out;
}

CurveElement normal_form(const RawBivariate& raw) {
  // Highest Y-power first: a single rewrite Y^j -> (X^3+X^2)^(j/2) * Y^(j&1)
  // per term, no re-reduction needed.
  std::vector<std::pair<std::pair<int, int>, Rational>> terms(
      raw.terms().begin(), raw.terms().end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    if (a.first.second != b.first.second)
      return a.first.second > b.first.second;
    return a.first.first > b.first.first;
  });

  UniPoly p = UniPoly::zero(Var::X);
  UniPoly q = UniPoly::zero(Var::X);
  for (const auto& [key, c] : terms) {
    const auto [x_exp, y_exp] = key;
    UniPoly contribution =
        UniPoly::monomial(Var::X, static_cast<std::size_t>(x_exp), c) *
        pow(relation_rhs(), static_cast<unsigned>(y_exp / 2));
    if (y_exp % 2 == 0)
      p += contribution;
    else
      q += contribution;
  }
  return CurveElement(std::move(p), std::move(q));
}

UniPoly x_image() {
  return UniPoly(Var::N, {Rational(-1), Rational(0), Rational(1)});
}

UniPoly y_image() {
  return UniPoly(Var::N, {Rational(0), Rational(-1), Rational(0), Rational(1)});
}

}  // namespace torusinv
