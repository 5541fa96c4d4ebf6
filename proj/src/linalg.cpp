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

#include <algorithm>
#include <cstddef>
#include <utility>

namespace torusinv {

int rank(std::vector<std::vector<Rational>> rows) {
  if (rows.empty()) return 0;
  std::size_t cols = 0;
  for (const auto& row : rows) cols = std::max(cols, row.size());
  for (auto& row : rows) row.resize(cols);

  int r = 0;
  for (std::size_t c = 0; c < cols && r < static_cast<int>(rows.size()); ++c) {
    std::size_t pivot = rows.size();
    for (std::size_t i = r; i < rows.size(); ++i) {
      if (rows[i][c].is_zero()) continue;
      if (pivot == rows.size() || abs(rows[pivot][c]) < abs(rows[i][c]))
        pivot = i;
    }
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c].is_zero()) continue;
      const Rational factor = rows[i][c] / rows[r][c];
      for (std::size_t j = c; j < cols; ++j)
        rows[i][j] -= factor * rows[r][j];
    }
    ++r;
  }
  return r;
}

}  // namespace torusinv
