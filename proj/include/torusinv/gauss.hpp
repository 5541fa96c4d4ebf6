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
#include <string>
#include <vector>

#include "torusinv/rational.hpp"

namespace torusinv {

/// One crossing: the positions of its over- and under-visit along the knot
/// traversal, and its sign.
struct Arrow {
  int over_position = 0;
  int under_position = 0;
  int sign = 1;

  friend bool operator==(const Arrow& a, const Arrow& b) {
    return a.over_position == b.over_position &&
           a.under_position == b.under_position && a.sign == b.sign;
  }
};

/// Signed chord configuration of a knot diagram: c crossings visited at the
/// 2c positions 0..2c-1, each position used exactly once. The basepoint sits
/// before position 0.
class GaussDiagram {
 public:
  GaussDiagram() = default;
  explicit GaussDiagram(std::vector<Arrow> arrows);

  std::size_t crossing_count() const { return arrows_.size(); }
  const std::vector<Arrow>& arrows() const { return arrows_; }

  friend bool operator==(const GaussDiagram& a, const GaussDiagram& b) {
    return a.arrows_ == b.arrows_;
  }
  friend bool operator!=(const GaussDiagram& a, const GaussDiagram& b) {
    return !(a == b);
  }

 private:
  std::vector<Arrow> arrows_;
};

/// Standard diagram of the (n,2)-torus knot (closed alternating 2-braid):
/// empty for |n| = 1; otherwise |n| crossings visited 1..m,1..m with over and
/// under alternating from "over at crossing 1", all signs matching the sign
/// of n. Throws std::domain_error for even n.
GaussDiagram torus_diagram(std::int64_t n);

/// Same chord configuration with every sign negated.
GaussDiagram mirror(const GaussDiagram& d);

/// The same diagram read starting from the endpoint gap before position
/// `gap` (taken mod 2c).
GaussDiagram shift_basepoint(const GaussDiagram& d, int gap);

/// Order-2 invariant: signed count of interleaved crossing pairs whose
/// visits read under, over, over, under from the basepoint. Normalized so
/// the unknot gives 0 and the trefoil 1.
Rational v2(const GaussDiagram& d);

/// Order-3 invariant: signed count of pairwise-interleaved crossing triples
/// whose six visits alternate over/under around the circle. Normalized so
/// the trefoil gives 1 and its mirror -1.
Rational v3(const GaussDiagram& d);

/// The order-2 invariant x = 8*v2 on the (n,2)-torus knot; equals n^2 - 1.
Rational x_invariant(std::int64_t n);

/// The order-3 invariant y = 24*v3 on the (n,2)-torus knot; equals n^3 - n.
Rational y_invariant(std::int64_t n);

/// Gauss code text: "O<id><sign>"/"U<id><sign>" tokens in traversal order,
/// e.g. "O1+ U2+ O3+ U1+ O2+ U3+" for the trefoil. The empty diagram prints
/// as the empty string.
std::string to_gauss_code(const GaussDiagram& d);

/// Parses the token form above. Crossings are renumbered in order of first
/// visit; each id must occur exactly once as O and once as U with a
/// consistent sign. Throws std::invalid_argument on malformed codes.
GaussDiagram parse_gauss_code(const std::string& text);

}  // namespace torusinv
