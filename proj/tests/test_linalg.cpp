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

#include "torusinv/linalg.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using torusinv::Rational;
using torusinv::rank;

namespace {

using Matrix = std::vector<std::vector<Rational>>;

}  // namespace

TEST_SUITE("linalg") {

TEST_CASE("rank of the generator images") {
  // 1, n^2 - 1 and n^3 - n have distinct degrees, hence rank 3.
  const Matrix rows{{1}, {-1, 0, 1}, {0, -1, 0, 1}};
  CHECK(rank(rows) == 3);
}

TEST_CASE("empty and degenerate inputs") {
  CHECK(rank({}) == 0);
  CHECK(rank({{Rational(0), Rational(0)}}) == 0);
  CHECK(rank({{1, 2}, {1, 2}}) == 1);
  // rows of unequal length are padded with zeros
  CHECK(rank({{1}, {0, 1}, {0, 0, 1}}) == 3);
}

TEST_CASE("exact cancellation is detected") {
  // Third row is the sum of the first two with awkward fractions.
  const Matrix rows{{Rational(1, 3), Rational(2, 7), Rational(5)},
                    {Rational(-1, 2), Rational(3), Rational(1, 11)},
                    {Rational(-1, 6), Rational(23, 7), Rational(56, 11)}};
  CHECK(rank(rows) == 2);
}

TEST_CASE("rank is invariant under permutation and scaling") {
  std::mt19937_64 rng(101);
  std::uniform_int_distribution<long> entry(-6, 6);
  std::uniform_int_distribution<long> den(1, 5);
  std::uniform_int_distribution<std::size_t> dims(1, 6);

  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n_rows = dims(rng), n_cols = dims(rng);
    Matrix m(n_rows, std::vector<Rational>(n_cols));
    for (auto& row : m)
      for (auto& e : row) e = Rational(entry(rng), den(rng));
    const int r = rank(m);

    Matrix shuffled = m;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    CHECK(rank(shuffled) == r);

    Matrix scaled = m;
    for (auto& row : scaled) {
      Rational s(0);
      while (s.is_zero()) s = Rational(entry(rng), den(rng));
      for (auto& e : row) e *= s;
    }
    CHECK(rank(scaled) == r);
  }
}

}  // TEST_SUITE
