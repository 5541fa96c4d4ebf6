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

#include <doctest.h>

#include <random>

using torusinv::CurveElement;
using torusinv::normal_form;
using torusinv::Rational;
using torusinv::RawBivariate;
using torusinv::UniPoly;
using torusinv::Var;

namespace {

UniPoly in_x(std::vector<Rational> coeffs) {
  return UniPoly(Var::X, std::move(coeffs));
}

CurveElement random_element(std::mt19937_64& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 9);
  auto part = [&] {
    std::vector<Rational> cs(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& c : cs) c = Rational(num(rng), den(rng));
    return UniPoly(Var::X, std::move(cs));
  };
  return CurveElement(part(), part());
}

}  // namespace

TEST_SUITE("curve_ring") {

TEST_CASE("normal form rewrites powers of Y") {
  RawBivariate y_squared;
  y_squared.add_term(0, 2, Rational(1));
  CHECK(normal_form(y_squared) ==
        CurveElement(in_x({0, 0, 1, 1}), UniPoly::zero(Var::X)));

  RawBivariate xy;
  xy.add_term(1, 1, Rational(1));
  CHECK(normal_form(xy) ==
        CurveElement(UniPoly::zero(Var::X), UniPoly::variable(Var::X)));

  RawBivariate y_cubed;
  y_cubed.add_term(0, 3, Rational(1));
  const CurveElement reduced = normal_form(y_cubed);
  CHECK(reduced == CurveElement(UniPoly::zero(Var::X), in_x({0, 0, 1, 1})));
  // confirm Y^3 = (X^3+X^2)*Y pointwise on odd integers
  for (long n : {3, 5, 7}) {
    const Rational y = CurveElement::y().eval_at(n);
    CHECK(reduced.eval_at(n) == y * y * y);
  }
}

TEST_CASE("normal form handles stacked powers of Y") {
  // Y^4 + 3*X*Y^3 - Y
  RawBivariate raw;
  raw.add_term(0, 4, Rational(1));
  raw.add_term(1, 3, Rational(3));
  raw.add_term(0, 1, Rational(-1));
  const CurveElement e = normal_form(raw);
  const UniPoly relation = in_x({0, 0, 1, 1});
  CHECK(e.p() == relation * relation);
  CHECK(e.q() == Rational(3) * (UniPoly::variable(Var::X) * relation) -
                     UniPoly::constant(Var::X, Rational(1)));
  for (long n : {-5, 3, 9}) {
    const Rational x = CurveElement::x().eval_at(n);
    const Rational y = CurveElement::y().eval_at(n);
    CHECK(e.eval_at(n) == y * y * y * y + Rational(3) * x * y * y * y - y);
  }
}

TEST_CASE("normal form is idempotent on reduced input") {
  RawBivariate already_reduced;
  already_reduced.add_term(2, 0, Rational(3));
  already_reduced.add_term(1, 1, Rational(-2));
  const CurveElement e = normal_form(already_reduced);
  RawBivariate again;
  for (std::size_t i = 0; i < e.p().coeffs().size(); ++i)
    again.add_term(static_cast<int>(i), 0, e.p().coeff(i));
  for (std::size_t i = 0; i < e.q().coeffs().size(); ++i)
    again.add_term(static_cast<int>(i), 1, e.q().coeff(i));
  CHECK(normal_form(again) == e);
}

TEST_CASE("addition") {
  const CurveElement x_plus_y = CurveElement::x() + CurveElement::y();
  CHECK(x_plus_y.p() == UniPoly::variable(Var::X));
  CHECK(x_plus_y.q() == UniPoly::constant(Var::X, Rational(1)));

  std::mt19937_64 rng(1);
  const CurveElement a = random_element(rng, 4);
  CHECK(a + CurveElement::zero() == a);
  CHECK((a - a).is_zero());
}

TEST_CASE("multiplication uses the defining relation") {
  CHECK(CurveElement::y() * CurveElement::y() ==
        CurveElement(in_x({0, 0, 1, 1}), UniPoly::zero(Var::X)));
  CHECK(CurveElement::x() * CurveElement::y() ==
        CurveElement(UniPoly::zero(Var::X), UniPoly::variable(Var::X)));

  // (1+Y)(1-Y) = 1 - X^3 - X^2; at n=3 both sides give (1+24)(1-24) = -575
  const CurveElement product =
      (CurveElement::one() + CurveElement::y()) *
      (CurveElement::one() - CurveElement::y());
  CHECK(product == CurveElement(in_x({1, 0, -1, -1}), UniPoly::zero(Var::X)));
  CHECK(product.eval_at(3) == Rational(-575));
}

TEST_CASE("evaluation reproduces the generator values") {
  CHECK(CurveElement::x().eval_at(3) == Rational(8));
  CHECK(CurveElement::y().eval_at(3) == Rational(24));
  CHECK(CurveElement::y().eval_at(-3) == Rational(-24));
  CHECK(CurveElement::y().eval_at(5) == Rational(120));
  for (long n : {1, -1}) {
    CHECK(CurveElement::x().eval_at(n) == Rational(0));
    CHECK(CurveElement::y().eval_at(n) == Rational(0));
  }
  CHECK_THROWS_AS(CurveElement::x().eval_at(4), std::domain_error);
}

TEST_CASE("defining relation holds pointwise") {
  for (long n = -99; n <= 99; n += 2) {
    const Rational x = CurveElement::x().eval_at(n);
    const Rational y = CurveElement::y().eval_at(n);
    CHECK(y * y == x * x * x + x * x);
  }
}

TEST_CASE("to_function expands in n") {
  CHECK(CurveElement::x().to_function() ==
        UniPoly(Var::N, {-1, 0, 1}));
  CHECK(CurveElement::one().to_function() ==
        UniPoly::constant(Var::N, Rational(1)));
  // X*Y becomes (n^2-1)(n^3-n) = n^5 - 2n^3 + n
  CHECK((CurveElement::x() * CurveElement::y()).to_function() ==
        UniPoly(Var::N, {0, 1, 0, -2, 0, 1}));
}

TEST_CASE("to_function agrees with eval_at") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 30; ++trial) {
    const CurveElement a = random_element(rng, 5);
    const UniPoly f = a.to_function();
    for (long n : {-7, -1, 1, 3, 9}) {
      CHECK(f.eval(Rational(n)) == a.eval_at(n));
    }
  }
}

TEST_CASE("ring axioms on random elements") {
  std::mt19937_64 rng(20260810);
  for (int trial = 0; trial < 25; ++trial) {
    const CurveElement a = random_element(rng, 6);
    const CurveElement b = random_element(rng, 6);
    const CurveElement c = random_element(rng, 6);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("evaluation is a ring homomorphism") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    const CurveElement a = random_element(rng, 5);
    const CurveElement b = random_element(rng, 5);
    for (long n : {-9, -3, 1, 5, 11}) {
      CHECK((a * b).eval_at(n) == a.eval_at(n) * b.eval_at(n));
      CHECK((a + b).eval_at(n) == a.eval_at(n) + b.eval_at(n));
    }
  }
}

TEST_CASE("to_function never kills a nonzero element") {
  // phi(p) has even leading degree and phi(q*Y) odd, so no cancellation.
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const CurveElement a = random_element(rng, 10);
    if (a.is_zero()) continue;
    CHECK_FALSE(a.to_function().is_zero());
  }
}

TEST_CASE("restricted functions are admissible") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    const UniPoly f = random_element(rng, 6).to_function();
    CHECK(f.eval(Rational(1)) == f.eval(Rational(-1)));
  }
}

TEST_CASE("order of basis elements") {
  const CurveElement x2 = CurveElement::x_power(2);
  CHECK(x2.order() == 4);
  CHECK((CurveElement::x() * CurveElement::y()).order() == 5);
  CHECK(CurveElement::constant(Rational(7)).order() == 0);
  CHECK(CurveElement::y().order() == 3);
  CHECK_THROWS_AS(CurveElement::zero().order(), std::domain_error);
}

TEST_CASE("order is additive and matches the function degree") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const CurveElement a = random_element(rng, 5);
    const CurveElement b = random_element(rng, 5);
    if (a.is_zero() || b.is_zero()) continue;
    CHECK((a * b).order() == a.order() + b.order());
    if (a.order() > 0) CHECK(a.order() == *a.to_function().degree());
  }
}

TEST_CASE("canonical text") {
  CHECK(CurveElement::zero().str() == "0");
  CHECK(CurveElement::x().str() == "X");
  CHECK(CurveElement::y().str() == "(1)*Y");
  CHECK((CurveElement::y() * CurveElement::y()).str() == "X^3 + X^2");
  const CurveElement mixed =
      CurveElement(in_x({1, 2}), in_x({0, 0, 1, 1}));
  CHECK(mixed.str() == "2*X + 1 + (X^3 + X^2)*Y");
}

}  // TEST_SUITE
