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

#include <vector>

#include "torusinv/rational.hpp"

namespace torusinv {

/// Exact rank over the rationals by Gaussian elimination with partial
/// pivoting on the entry of largest absolute value. Rows of unequal length
/// are padded with zeros on the right.
int rank(std::vector<std::vector<Rational>> rows);

}  // namespace torusinv
