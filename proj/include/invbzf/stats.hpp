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

// Distribution of deviations over a target grid, for the quota heuristics
// and for the enumerated optimum of a class.

#ifndef INVBZF_STATS_HPP_
#define INVBZF_STATS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "invbzf/enumerate.hpp"
#include "invbzf/heuristics.hpp"
#include "invbzf/target.hpp"

namespace invbzf {

enum class GridRule { kHalf, kQStar, kQBar, kOptimal };
std::string to_string(GridRule r);  // "half", "qstar", "qbar", "optimal"
GridRule parse_grid_rule(const std::string& s);

// Lower empirical quantiles: the ceil(p m)-th smallest of m values.
struct Summary {
  std::uint64_t count = 0;
  Rational median;
  Rational average;
  Rational q10;
  Rational q05;
  Rational q01;
};

// values must be sorted ascending and non-empty.
Rational lower_quantile(const std::vector<Rational>& sorted, const Rational& p);
Summary summarize(std::vector<Rational> values);

struct GridStatsRequest {
  int n = 2;
  int denominator = 100;
  GridRule rule = GridRule::kQStar;
  GameClass cls = GameClass::kW;  // for kOptimal
  MetricKind metric = MetricKind::kD1;
  std::optional<std::uint64_t> sample;  // uniform draws with replacement
  std::uint64_t seed = 1;
  int threads = 0;  // 0: default_threads()
};

// INVBZF_THREADS if set to a positive integer, else the hardware concurrency.
int default_threads();

// d1 or dinf only. Every grid point's deviation is exact; kOptimal needs the
// class to be enumerable for n.
Summary grid_statistics(const GridStatsRequest& req);

// Per-point deviations in grid order (or sample order), for tests.
std::vector<Rational> grid_deviations(const GridStatsRequest& req);

}  // namespace invbzf

#endif  // INVBZF_STATS_HPP_
