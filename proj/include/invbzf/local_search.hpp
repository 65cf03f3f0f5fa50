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


// Hill climbing over integer weighted games, and the unavoidable-deviation
// quantiles used to judge when further search is unlikely to pay off.

#ifndef INVBZF_LOCAL_SEARCH_HPP_
#define INVBZF_LOCAL_SEARCH_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "invbzf/solver.hpp"
#include "invbzf/target.hpp"

namespace invbzf {

struct SearchConfig {
  std::int64_t max_weight = 0;  // 0: 4n
  int restarts = 10;
  std::uint64_t seed = 1;
  // Stop as soon as a game at distance <= stop_at is found.
  std::optional<Rational> stop_at;
  std::uint64_t max_steps = 100'000;  // per restart
};

// Neighbours of (q; w): one weight +-1, any other quota, or two unequal
// weights swapped. Each restart starts from a randomized rounding of c beta
// (log-uniform scale c) and the q* quota, then moves to the best strictly improving
// neighbour (ties: smallest weight vector, then quota) until none improves.
// traces, when given, receives each climb's distance sequence.
SolveResult hill_climb(const TargetVector& beta, const Metric& metric, const SearchConfig& config = {},
                       std::vector<std::vector<Rational>>* traces = nullptr);

struct TerminationQuantiles {
  int n;
  Rational median;
  Rational average;
  Rational q10;
  Rational q05;
  Rational q01;
  bool sampled;  // estimated from a sample rather than the full grid
};

// Unavoidable d1 / dinf deviations over the 0.01 grid, n = 2..20. Throws
// std::out_of_range for other n or metrics.
TerminationQuantiles termination_quantiles(int n, MetricKind metric);

}  // namespace invbzf

#endif  // INVBZF_LOCAL_SEARCH_HPP_
