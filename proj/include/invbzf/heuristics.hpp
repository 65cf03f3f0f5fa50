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

// Weighted games with weights equal to the target and one of three quota
// rules: 1/2, (1 + sqrt(sum beta_i^2))/2, and 1/2 + 1/sqrt(pi n).

#ifndef INVBZF_HEURISTICS_HPP_
#define INVBZF_HEURISTICS_HPP_

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "invbzf/game.hpp"
#include "invbzf/target.hpp"

namespace invbzf {

enum class QuotaRule { kHalf, kQStar, kQBar };

std::string to_string(QuotaRule r);  // "half", "qstar", "qbar"
QuotaRule parse_quota_rule(const std::string& s);

class AmbiguousAtPrecision : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct HeuristicResult {
  QuotaRule rule;
  Real quota_value;
  // Integer form: weights beta_i * D and the smallest winning integer weight.
  // Present when those fit in 64 bits.
  std::optional<WeightedGame> integer_game;
  // Present for n <= 24.
  std::optional<SimpleGame> game;
  SwingProfile swings;
  PowerVector pbi;
  // One entry per metric passed to evaluate_heuristic.
  std::vector<Rational> distances;
  bool ambiguous = false;
};

Real qbar_value(int n);
Real quota_value(const TargetVector& beta, QuotaRule rule);

// |w(S) - qbar| below this is treated as undecidable.
inline constexpr int kQBarDecisionDigits = 40;

// Coalition S wins iff sum_{i in S} beta_i >= quota(rule). Throws
// AmbiguousAtPrecision if the q-bar comparison cannot be decided, unless
// allow_ambiguous is set (then ties count as winning and the flag is set).
HeuristicResult heuristic_game(const TargetVector& beta, QuotaRule rule, bool allow_ambiguous = false);

HeuristicResult evaluate_heuristic(const TargetVector& beta, QuotaRule rule, std::span<const Metric> metrics,
                                   bool allow_ambiguous = false);

// Integer threshold T such that a coalition with numerator sum K wins iff
// K >= T, for a grid target with numerators `parts` over `den`. For q-bar
// the decision uses kQBarDecisionDigits; sets *ambiguous when it cannot.
std::int64_t integer_threshold(std::span<const std::int64_t> parts, std::int64_t den, QuotaRule rule,
                               bool* ambiguous = nullptr);

}  // namespace invbzf

#endif  // INVBZF_HEURISTICS_HPP_
