// Copyright 2026 The invbzf Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Exact feasibility for small linear systems over x >= 0.

#ifndef INVBZF_LP_HPP_
#define INVBZF_LP_HPP_

#include <optional>
#include <span>
#include <vector>

#include "invbzf/rational.hpp"

namespace invbzf {

enum class Relation { kLessEqual, kGreaterEqual, kEqual };

struct LinearRow {
  std::vector<Rational> coeffs;
  Relation relation = Relation::kLessEqual;
  Rational rhs;
};

// A point x >= 0 satisfying every row, or nullopt if none exists.
//
// Phase one of the simplex method on a fraction-free integer tableau with
// Bland's rule, so it always terminates and the answer is exact. Runs in
// 128-bit integers and restarts with arbitrary precision on overflow.
std::optional<std::vector<Rational>> find_nonnegative_solution(
    std::size_t num_vars, std::span<const LinearRow> rows);

}  // namespace invbzf

#endif  // INVBZF_LP_HPP_
