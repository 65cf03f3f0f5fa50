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


// Reference values the reproduction harness compares against, as printed
// (decimal strings keep the printed precision, which sets the tolerance).

#ifndef INVBZF_REFERENCE_HPP_
#define INVBZF_REFERENCE_HPP_

#include <array>
#include <cstdint>
#include <span>

#include "invbzf/stats.hpp"

namespace invbzf::reference {

// median, average, 10%, 5%, 1% quantiles
struct StatsRow {
  int n;
  std::uint64_t grid_points;  // 0 for rows computed on a sample
  std::array<const char*, 5> d1;
  std::array<const char*, 5> dinf;
  bool sampled;
};
std::span<const StatsRow> grid_stats(GridRule rule);

struct CountRow {
  int n;
  std::uint64_t simple;  // 0: not known exactly
  std::uint64_t complete;
  std::uint64_t weighted;
};
std::span<const CountRow> class_counts();

// Deviations from the family target (2, ..., 2, 1)/(2n - 1). Marks: 0 none,
// 1 upper bound from local search, 2 upper bound from a restricted search.
struct FamilyRow {
  int n;
  const char* simple;  // "" when not listed
  const char* complete;
  int complete_mark;
  const char* weighted;
  int weighted_mark;
  const char* heuristic;
  const char* c_error;
};
std::span<const FamilyRow> family_table(MetricKind metric);  // d1 or dinf

// Square-root targets for six-member to 27-member councils, d1.
struct CouncilRow {
  int n;
  const char* simple;
  int simple_mark;
  const char* complete;
  int complete_mark;
  const char* weighted;
  int weighted_mark;
  const char* half;
  const char* qstar;
  const char* qbar;
};
std::span<const CouncilRow> council_d1();

// Half a unit in the last printed decimal.
double cell_tolerance(const char* printed);

// Per-cell tolerance for the grid statistics, which absorbs the unstated
// quantile convention.
inline constexpr double kStatsTolerance = 0.001;

}  // namespace invbzf::reference

#endif  // INVBZF_REFERENCE_HPP_
