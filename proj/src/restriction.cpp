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

#include "torusinv/restriction.hpp"

#include <json.hpp>

#include <sstream>
#include <utility>

#include "torusinv/linalg.hpp"

namespace torusinv {

AdmissibilityError::AdmissibilityError(Rational at_one, Rational at_minus_one)
    : std::domain_error("polynomial is not admissible: f(1) = " +
                        at_one.str() + ", f(-1) = " + at_minus_one.str()),
      at_one_(std::move(at_one)),
      at_minus_one_(std::move(at_minus_one)) {}

CurveElement BasisMonomial::to_element() const {
  if (l < 1)
    throw std::invalid_argument("basis monomial exponent must be >= 1");
  if (kind == Kind::PowerOfX)
    return CurveElement::x_power(static_cast<unsigned>(l));
  return CurveElement(UniPoly::zero(Var::X),
                      UniPoly::monomial(Var::X, static_cast<std::size_t>(l - 1),
                                        Rational(1)));
}

UniPoly BasisMonomial::to_function() const {
  if (l < 1)
    throw std::invalid_argument("basis monomial exponent must be >= 1");
  if (kind == Kind::PowerOfX) return pow(x_image(), static_cast<unsigned>(l));
  return pow(x_image(), static_cast<unsigned>(l - 1)) * y_image();
}

BasisMonomial BasisMonomial::of_order(int k) {
  if (k < 2)
    throw std::invalid_argument("no basis monomial of order " +
                                std::to_string(k));
  if (k % 2 == 0) return {Kind::PowerOfX, k / 2};
  return {Kind::PowerOfXTimesY, (k - 1) / 2};
}

CurveElement Decomposition::reassemble() const {
  CurveElement acc = CurveElement::constant(constant);
  for (const auto& [monomial, coeff] : terms)
    acc = acc + coeff * monomial.to_element();
  return acc;
}

bool is_admissible(const UniPoly& f) {
  return f.eval(Rational(1)) == f.eval(Rational(-1));
}

Decomposition decompose(const UniPoly& f) {
  if (f.var() != Var::N)
    throw std::invalid_argument("decompose expects a polynomial in n");
  const Rational at_one = f.eval(Rational(1));
  const Rational at_minus_one = f.eval(Rational(-1));
  if (at_one != at_minus_one)
    throw AdmissibilityError(at_one, at_minus_one);

  Decomposition out;
  UniPoly remainder = f;
  while (remainder.degree().value_or(-1) >= 2) {
    const int d = *remainder.degree();
    const Rational c = remainder.leading_coeff();
    const BasisMonomial monomial = BasisMonomial::of_order(d);
    remainder -= c * monomial.to_function();
    out.terms.emplace(monomial, c);
  }
  // The basis images vanish at n = +-1, so the remainder is still admissible;
  // an admissible polynomial of degree <= 1 is constant.
  if (remainder.degree().value_or(-1) >= 1)
    throw std::logic_error("greedy elimination left a non-constant remainder");
  out.constant = remainder.coeff(0);
  return out;
}

Decomposition from_samples(const SampleSet& samples, int degree_bound) {
  if (degree_bound < 0)
    throw std::invalid_argument("degree bound must be nonnegative");
  if (static_cast<long>(samples.size()) < static_cast<long>(degree_bound) + 1)
    throw InsufficientSamplesError(
        "need " + std::to_string(degree_bound + 1) +
        " samples to pin a polynomial of degree " +
        std::to_string(degree_bound) + ", got " +
        std::to_string(samples.size()));
  const UniPoly f = interpolate(samples);
  if (f.degree().value_or(-1) > degree_bound)
    throw std::domain_error("samples do not lie on any polynomial of degree " +
                            std::to_string(degree_bound));
  return decompose(f);
}

namespace {

// Coefficient rows (in powers of n) of the images of 1 and of every basis
// monomial of order in [2, k].
std::vector<std::vector<Rational>> image_rows(int k) {
  std::vector<std::vector<Rational>> rows;
  rows.push_back({Rational(1)});
  for (int order = 2; order <= k; ++order)
    rows.push_back(BasisMonomial::of_order(order).to_function().coeffs());
  return rows;
}

// A direct basis of the admissible polynomials of degree <= k:
// the even powers of n, and n^j - n for odd j >= 3.
std::vector<std::vector<Rational>> admissible_rows(int k) {
  std::vector<std::vector<Rational>> rows;
  for (int j = 0; j <= k; j += 2)
    rows.push_back(
        UniPoly::monomial(Var::N, static_cast<std::size_t>(j), Rational(1))
            .coeffs());
  for (int j = 3; j <= k; j += 2) {
    UniPoly p =
        UniPoly::monomial(Var::N, static_cast<std::size_t>(j), Rational(1)) -
        UniPoly::variable(Var::N);
    rows.push_back(p.coeffs());
  }
  return rows;
}

}  // namespace

int filtration_dimension(int k) {
  if (k < 0) throw std::invalid_argument("filtration order must be >= 0");
  return rank(image_rows(k));
}

bool TheoremReport::all_pass() const {
  for (const TheoremCheck& c : checks)
    if (!c.pass()) return false;
  return true;
}

std::string TheoremReport::to_text() const {
  std::ostringstream os;
  for (const TheoremCheck& c : checks)
    os << "k=" << c.k << " dim=" << c.dim << " quotient_dim=" << c.quotient_dim
       << " pass=" << (c.pass() ? "true" : "false") << "\n";
  return os.str();
}

std::string TheoremReport::to_json() const {
  nlohmann::ordered_json records = nlohmann::ordered_json::array();
  for (const TheoremCheck& c : checks) {
    nlohmann::ordered_json record;
    record["k"] = c.k;
    record["dim"] = c.dim;
    record["quotient_dim"] = c.quotient_dim;
    record["pass"] = c.pass();
    records.push_back(std::move(record));
  }
  return records.dump();
}

TheoremReport verify_theorem(int k_max) {
  if (k_max < 0) throw std::invalid_argument("k_max must be >= 0");

  TheoremReport report;
  int previous_dim = 0;
  for (int k = 0; k <= k_max; ++k) {
    TheoremCheck check;
    check.k = k;
    check.dim = filtration_dimension(k);
    check.quotient_dim = check.dim - previous_dim;

    const int expected_dim = k <= 1 ? 1 : k;
    const int expected_quotient = k == 0 ? 1 : (k == 1 ? 0 : 1);
    check.dimension_ok =
        check.dim == expected_dim && check.quotient_dim == expected_quotient;

    // The images must span exactly the admissible polynomials of degree <= k:
    // both sets have the expected rank, and stacking them adds nothing.
    const auto images = image_rows(k);
    const auto admissible = admissible_rows(k);
    const int expected_admissible_dim = k == 0 ? 1 : k;
    auto combined = images;
    combined.insert(combined.end(), admissible.begin(), admissible.end());
    check.span_ok = rank(images) == expected_admissible_dim &&
                    rank(admissible) == expected_admissible_dim &&
                    rank(combined) == expected_admissible_dim;

    if (k >= 2) {
      auto lower = image_rows(k - 1);
      const int lower_rank = rank(lower);
      lower.push_back(BasisMonomial::of_order(k).to_function().coeffs());
      check.generator_ok = rank(lower) == lower_rank + 1;
    } else {
      check.generator_ok = true;
    }

    previous_dim = check.dim;
    report.checks.push_back(check);
  }
  return report;
}

}  // namespace torusinv
