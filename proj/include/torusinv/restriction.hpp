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

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "torusinv/curve_ring.hpp"
#include "torusinv/unipoly.hpp"

namespace torusinv {

/// A polynomial failed the f(1) = f(-1) membership test.
class AdmissibilityError : public std::domain_error {
 public:
  AdmissibilityError(Rational at_one, Rational at_minus_one);

  const Rational& value_at_one() const { return at_one_; }
  const Rational& value_at_minus_one() const { return at_minus_one_; }

 private:
  Rational at_one_;
  Rational at_minus_one_;
};

class InsufficientSamplesError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// One monomial of the filtration basis: X^l (order 2l) or X^(l-1)*Y
/// (order 2l+1), with l >= 1. Ordered by filtration order, which is distinct
/// across all basis monomials.
struct BasisMonomial {
  enum class Kind { PowerOfX, PowerOfXTimesY };

  Kind kind;
  int l;

  int order() const { return kind == Kind::PowerOfX ? 2 * l : 2 * l + 1; }
  CurveElement to_element() const;
  /// Image on odd integers; monic of degree order() in n.
  UniPoly to_function() const;

  /// The unique basis monomial of the given order k >= 2.
  static BasisMonomial of_order(int k);

  friend bool operator<(const BasisMonomial& a, const BasisMonomial& b) {
    return a.order() < b.order();
  }
  friend bool operator==(const BasisMonomial& a, const BasisMonomial& b) {
    return a.kind == b.kind && a.l == b.l;
  }
};

/// A function on odd integers written in the basis {1, X^l, X^(l-1)*Y}.
struct Decomposition {
  Rational constant;
  std::map<BasisMonomial, Rational> terms;  // coefficients are nonzero

  /// constant + sum of coeff * monomial, as a canonical curve element.
  CurveElement reassemble() const;
};

/// True iff f(1) = f(-1); the membership criterion for restricted invariants.
bool is_admissible(const UniPoly& f);

/// Writes an admissible polynomial in n as a combination of basis monomials
/// by greedy leading-term elimination (the basis images are monic of pairwise
/// distinct degrees). Throws AdmissibilityError when f(1) != f(-1).
Decomposition decompose(const UniPoly& f);

/// Interpolates the samples and decomposes the result. The caller-supplied
/// degree bound pins the polynomial: fewer than bound+1 samples raise
/// InsufficientSamplesError, and samples off every polynomial of the stated
/// degree raise std::domain_error instead of being overfitted.
Decomposition from_samples(const SampleSet& samples, int degree_bound);

/// dim A_k, computed constructively as the exact rank of the coefficient
/// matrix of all basis-monomial images (including the constant 1) of order
/// <= k.
int filtration_dimension(int k);

struct TheoremCheck {
  int k = 0;
  int dim = 0;
  int quotient_dim = 0;
  bool dimension_ok = false;  // dim and quotient match the expected counts
  bool span_ok = false;       // images span the admissible space of degree <= k
  bool generator_ok = false;  // order-k monomial independent of lower orders

  bool pass() const { return dimension_ok && span_ok && generator_ok; }
};

struct TheoremReport {
  std::vector<TheoremCheck> checks;

  bool all_pass() const;
  /// One record per k: "k=<k> dim=<d> quotient_dim=<q> pass=<bool>".
  std::string to_text() const;
  /// JSON array of {"k", "dim", "quotient_dim", "pass"} records.
  std::string to_json() const;
};

/// Constructive verification of the structure of the restricted algebra for
/// every order k <= k_max: dimension counts, span of the admissible space,
/// and independence of each new generator. Failures are report entries, not
/// exceptions.
TheoremReport verify_theorem(int k_max);

}  // namespace torusinv
