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

#include "torusinv/unipoly.hpp"

#include <stdexcept>

namespace torusinv {

char var_symbol(Var v) { return v == Var::N ? 'n' : 'X'; }

UniPoly::UniPoly(Var var, std::vector<Rational> coeffs)
    : var_(var), coeffs_(std::move(coeffs)) {
  normalize();
}

UniPoly UniPoly::constant(Var var, const Rational& c) {
  return UniPoly(var, {c});
}

UniPoly UniPoly::variable(Var var) {
  return UniPoly(var, {Rational(0), Rational(1)});
}

UniPoly UniPoly::monomial(Var var, std::size_t power, const Rational& coeff) {
  std::vector<Rational> cs(power + 1);
  cs[power] = coeff;
  return UniPoly(var, std::move(cs));
}

std::optional<int> UniPoly::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return static_cast<int>(coeffs_.size()) - 1;
}

Rational UniPoly::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

Rational UniPoly::leading_coeff() const {
  return coeffs_.empty() ? Rational(0) : coeffs_.back();
}

void UniPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

void UniPoly::require_same_var(const UniPoly& a, const UniPoly& b) {
  if (a.var_ != b.var_)
    throw std::invalid_argument("polynomial variable tags do not match");
}

UniPoly UniPoly::operator-() const {
  UniPoly r(var_);
  r.coeffs_.reserve(coeffs_.size());
  for (const Rational& c : coeffs_) r.coeffs_.push_back(-c);
  return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  require_same_var(*this, o);
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  normalize();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  require_same_var(*this, o);
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  normalize();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  UniPoly::require_same_var(a, b);
  if (a.is_zero() || b.is_zero()) return UniPoly(a.var_);
  std::vector<Rational> cs(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      cs[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return UniPoly(a.var_, std::move(cs));
}

UniPoly operator*(const Rational& s, UniPoly p) {
  for (Rational& c : p.coeffs_) c *= s;
  p.normalize();
  return p;
}

Rational UniPoly::eval(const Rational& at) const {
  Rational acc(0);
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * at + coeffs_[i];
  return acc;
}

UniPoly UniPoly::compose(const UniPoly& inner) const {
  UniPoly acc(inner.var());
  for (std::size_t i = coeffs_.size(); i-- > 0;)
    acc = acc * inner + UniPoly::constant(inner.var(), coeffs_[i]);
  return acc;
}

UniPoly pow(const UniPoly& base, unsigned exponent) {
  UniPoly result = UniPoly::constant(base.var(), Rational(1));
  UniPoly sq = base;
  unsigned e = exponent;
  while (e > 0) {
    if (e & 1u) result = result * sq;
    e >>= 1u;
    if (e > 0) sq = sq * sq;
  }
  return result;
}

namespace {

std::string power_text(char sym, std::size_t k) {
  std::string s(1, sym);
  if (k > 1) s += "^" + std::to_string(k);
  return s;
}

// Term with a positive coefficient, used after a " + "/" - " separator.
std::string magnitude_term(const Rational& c, char sym, std::size_t k) {
  if (k == 0) return c.str();
  if (c == Rational(1)) return power_text(sym, k);
  return c.str() + "*" + power_text(sym, k);
}

// Leading term, sign included. A bare "-X^2" would re-parse as (-X)^2 under
// the expression grammar, so a leading coefficient of -1 on a power >= 2 is
// spelled "-1*X^2".
std::string leading_term(const Rational& c, char sym, std::size_t k) {
  if (k == 0) return c.str();
  if (c == Rational(1)) return power_text(sym, k);
  if (c == Rational(-1))
    return k == 1 ? "-" + power_text(sym, k) : "-1*" + power_text(sym, k);
  return c.str() + "*" + power_text(sym, k);
}

}  // namespace

std::string UniPoly::str() const {
  if (is_zero()) return "0";
  const char sym = var_symbol(var_);
  std::string out;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Rational& c = coeffs_[i];
    if (c.is_zero()) continue;
    if (first) {
      out += leading_term(c, sym, i);
      first = false;
    } else {
      out += c.sign() < 0 ? " - " : " + ";
      out += magnitude_term(abs(c), sym, i);
    }
  }
  return out;
}

void SampleSet::insert(std::int64_t point, const Rational& value) {
  if (point % 2 == 0)
    throw std::domain_error("sample point " + std::to_string(point) +
                            " is not odd");
  if (!points_.emplace(point, value).second)
    throw std::invalid_argument("duplicate sample point " +
                                std::to_string(point));
}

UniPoly interpolate(const SampleSet& samples) {
  if (samples.empty())
    throw std::invalid_argument("cannot interpolate an empty sample set");

  std::vector<Rational> nodes;
  std::vector<Rational> dd;
  nodes.reserve(samples.size());
  dd.reserve(samples.size());
  for (const auto& [point, value] : samples.points()) {
    nodes.emplace_back(Integer(point));
    dd.push_back(value);
  }

  // Divided differences in place: dd[i] becomes f[x_0, ..., x_i].
  const std::size_t m = nodes.size();
  for (std::size_t j = 1; j < m; ++j)
    for (std::size_t i = m - 1; i >= j; --i)
      dd[i] = (dd[i] - dd[i - 1]) / (nodes[i] - nodes[i - j]);

  UniPoly result(Var::N);
  UniPoly basis = UniPoly::constant(Var::N, Rational(1));
  for (std::size_t i = 0; i < m; ++i) {
    result += dd[i] * basis;
    basis = basis * UniPoly(Var::N, {-nodes[i], Rational(1)});
  }
  return result;
}

std::vector<std::int64_t> nearest_odd_nodes(std::size_t count) {
  std::vector<std::int64_t> nodes;
  nodes.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const std::int64_t magnitude = 2 * static_cast<std::int64_t>(i / 2) + 1;
    nodes.push_back(i % 2 == 0 ? magnitude : -magnitude);
  }
  return nodes;
}

}  // namespace torusinv
