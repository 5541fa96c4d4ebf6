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

#include "torusinv/gauss.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <map>
#include <sstream>
#include <stdexcept>

namespace torusinv {

GaussDiagram::GaussDiagram(std::vector<Arrow> arrows)
    : arrows_(std::move(arrows)) {
  const int positions = 2 * static_cast<int>(arrows_.size());
  std::vector<bool> used(positions, false);
  for (const Arrow& a : arrows_) {
    if (a.sign != 1 && a.sign != -1)
      throw std::invalid_argument("arrow sign must be +1 or -1");
    if (a.over_position == a.under_position)
      throw std::invalid_argument("arrow endpoints must be distinct");
    for (int p : {a.over_position, a.under_position}) {
      if (p < 0 || p >= positions)
        throw std::invalid_argument("arrow endpoint out of range");
      if (used[p]) throw std::invalid_argument("duplicate endpoint position");
      used[p] = true;
    }
  }
}

GaussDiagram torus_diagram(std::int64_t n) {
  if (n % 2 == 0) throw std::domain_error("n must be odd");
  const std::int64_t m = n < 0 ? -n : n;
  if (m == 1) return GaussDiagram();
  const int sign = n > 0 ? 1 : -1;
  std::vector<Arrow> arrows;
  arrows.reserve(static_cast<std::size_t>(m));
  // Crossing i is visited at positions i and i+m; m is odd, so exactly one of
  // the two is even, and the traversal alternates over/under starting with
  // "over" at position 0.
  for (int i = 0; i < static_cast<int>(m); ++i) {
    const int first = i;
    const int second = i + static_cast<int>(m);
    Arrow a;
    a.over_position = first % 2 == 0 ? first : second;
    a.under_position = first % 2 == 0 ? second : first;
    a.sign = sign;
    arrows.push_back(a);
  }
  return GaussDiagram(std::move(arrows));
}

GaussDiagram mirror(const GaussDiagram& d) {
  std::vector<Arrow> arrows = d.arrows();
  for (Arrow& a : arrows) a.sign = -a.sign;
  return GaussDiagram(std::move(arrows));
}

GaussDiagram shift_basepoint(const GaussDiagram& d, int gap) {
  const int positions = 2 * static_cast<int>(d.crossing_count());
  if (positions == 0) return d;
  const int g = ((gap % positions) + positions) % positions;
  std::vector<Arrow> arrows = d.arrows();
  for (Arrow& a : arrows) {
    a.over_position = (a.over_position - g + positions) % positions;
    a.under_position = (a.under_position - g + positions) % positions;
  }
  return GaussDiagram(std::move(arrows));
}

namespace {

struct Endpoint {
  int position;
  bool over;
  int arrow;  // index into the pair/triple under consideration
};

template <std::size_t N>
void sort_by_position(std::array<Endpoint, N>& e) {
  std::sort(e.begin(), e.end(),
            [](const Endpoint& a, const Endpoint& b) {
              return a.position < b.position;
            });
}

}  // namespace

Rational v2(const GaussDiagram& d) {
  const auto& arrows = d.arrows();
  long long total = 0;
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    for (std::size_t j = i + 1; j < arrows.size(); ++j) {
      std::array<Endpoint, 4> e{{
          {arrows[i].over_position, true, 0},
          {arrows[i].under_position, false, 0},
          {arrows[j].over_position, true, 1},
          {arrows[j].under_position, false, 1},
      }};
      sort_by_position(e);
      const bool interleaved = e[0].arrow == e[2].arrow && e[1].arrow == e[3].arrow;
      if (!interleaved) continue;
      if (!e[0].over && e[1].over && e[2].over && !e[3].over)
        total += arrows[i].sign * arrows[j].sign;
    }
  }
  return Rational(static_cast<long>(total));
}

Rational v3(const GaussDiagram& d) {
  const auto& arrows = d.arrows();
  long long total = 0;
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    for (std::size_t j = i + 1; j < arrows.size(); ++j) {
      for (std::size_t k = j + 1; k < arrows.size(); ++k) {
        std::array<Endpoint, 6> e;
        int slot = 0;
        int idx = 0;
        for (std::size_t a : {i, j, k}) {
          e[slot++] = {arrows[a].over_position, true, idx};
          e[slot++] = {arrows[a].under_position, false, idx};
          ++idx;
        }
        sort_by_position(e);
        // Pairwise interleaved: the six endpoints alternate between the
        // three crossings twice around the circle.
        const bool interleaved =
            e[0].arrow != e[1].arrow && e[1].arrow != e[2].arrow &&
            e[0].arrow != e[2].arrow && e[3].arrow == e[0].arrow &&
            e[4].arrow == e[1].arrow && e[5].arrow == e[2].arrow;
        if (!interleaved) continue;
        bool alternating = true;
        for (int t = 1; t < 6; ++t)
          if (e[t].over == e[t - 1].over) alternating = false;
        if (!alternating) continue;
        total += arrows[i].sign * arrows[j].sign * arrows[k].sign;
      }
    }
  }
  return Rational(static_cast<long>(total));
}

Rational x_invariant(std::int64_t n) {
  return Rational(8) * v2(torus_diagram(n));
}

Rational y_invariant(std::int64_t n) {
  return Rational(24) * v3(torus_diagram(n));
}

std::string to_gauss_code(const GaussDiagram& d) {
  std::vector<std::string> tokens(2 * d.crossing_count());
  for (std::size_t i = 0; i < d.arrows().size(); ++i) {
    const Arrow& a = d.arrows()[i];
    const std::string id = std::to_string(i + 1);
    const char sign = a.sign > 0 ? '+' : '-';
    tokens[static_cast<std::size_t>(a.over_position)] = "O" + id + sign;
    tokens[static_cast<std::size_t>(a.under_position)] = "U" + id + sign;
  }
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0) out += ' ';
    out += tokens[i];
  }
  return out;
}

GaussDiagram parse_gauss_code(const std::string& text) {
  std::istringstream in(text);
  std::string token;

  struct Visit {
    int over_position = -1;
    int under_position = -1;
    int sign = 0;
    int first_seen = -1;
  };
  std::map<long, Visit> visits;

  int position = 0;
  while (in >> token) {
    if (token.size() < 3 || (token[0] != 'O' && token[0] != 'U'))
      throw std::invalid_argument("bad gauss code token '" + token + "'");
    const char role = token[0];
    const char sign_char = token.back();
    if (sign_char != '+' && sign_char != '-')
      throw std::invalid_argument("bad gauss code token '" + token +
                                  "': missing sign");
    const std::string digits = token.substr(1, token.size() - 2);
    if (digits.empty() ||
        digits.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("bad gauss code token '" + token +
                                  "': bad crossing id");
    const long id = std::strtol(digits.c_str(), nullptr, 10);
    if (id <= 0)
      throw std::invalid_argument("bad gauss code token '" + token +
                                  "': crossing ids start at 1");

    Visit& v = visits[id];
    if (v.first_seen < 0) v.first_seen = position;
    const int sign = sign_char == '+' ? 1 : -1;
    if (v.sign == 0)
      v.sign = sign;
    else if (v.sign != sign)
      throw std::invalid_argument("crossing " + std::to_string(id) +
                                  " has inconsistent signs");
    int& slot = role == 'O' ? v.over_position : v.under_position;
    if (slot >= 0)
      throw std::invalid_argument("crossing " + std::to_string(id) +
                                  " visited twice as " + role);
    slot = position;
    ++position;
  }

  std::vector<const Visit*> ordered;
  ordered.reserve(visits.size());
  for (const auto& [id, v] : visits) {
    if (v.over_position < 0 || v.under_position < 0)
      throw std::invalid_argument("crossing " + std::to_string(id) +
                                  " needs exactly one O and one U visit");
    ordered.push_back(&v);
  }
  std::sort(ordered.begin(), ordered.end(),
            [](const Visit* a, const Visit* b) {
              return a->first_seen < b->first_seen;
            });

  std::vector<Arrow> arrows;
  arrows.reserve(ordered.size());
  for (const Visit* v : ordered)
    arrows.push_back({v->over_position, v->under_position, v->sign});
  return GaussDiagram(std::move(arrows));
}

}  // namespace torusinv
