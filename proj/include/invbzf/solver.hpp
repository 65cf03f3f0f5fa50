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

// Exact solutions of the inverse problem: find the game in a class whose
// Banzhaf vector is closest to the target.

#ifndef INVBZF_SOLVER_HPP_
#define INVBZF_SOLVER_HPP_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "invbzf/enumerate.hpp"
#include "invbzf/game.hpp"
#include "invbzf/target.hpp"

namespace invbzf {

enum class SolveStatus { kProvedOptimal, kBracketed, kHeuristicOnly };
std::string to_string(SolveStatus s);

struct SolveResult {
  SimpleGame best_game;
  Rational distance;  // exact distance of best_game's PBI to the target
  SolveStatus status;
  // Bounds on the class optimum; lower == distance when proved optimal.
  Rational lower;
  Rational upper;
  std::uint64_t iterations = 0;
  std::uint64_t nodes = 0;
  std::optional<WeightedGame> witness_weights;
};

struct SearchLimits {
  std::uint64_t max_nodes = 10'000'000;  // per feasibility call
};

struct FeasibilityProblem {
  TargetVector beta;
  GameClass cls = GameClass::kS;
  Metric metric = Metric::d1();
  Rational alpha;
  // Ask for distance < alpha instead of <= alpha.
  bool strict = false;
};

enum class Feasibility { kFeasible, kInfeasible, kUnknown };
std::string to_string(Feasibility f);

struct FeasibilityResult {
  Feasibility status = Feasibility::kUnknown;
  std::optional<SimpleGame> game;
  Rational distance;  // of game, when feasible
  std::optional<WeightedGame> weights;
  std::uint64_t nodes = 0;
};

// (1 / (n 2^n))^2
Rational epsilon_floor(int n);

// Minimum over enumerate_class(n, cls) and all relabelings. Throws
// ResourceLimit beyond the enumeration limits. The target may be
// unnormalized.
SolveResult solve_by_enumeration(const TargetVector& beta, GameClass cls, const Metric& metric);

// Depth-first search over the truth table in a monotonicity-respecting
// coalition order, with swing-count bounds pruning against alpha. Returns
// kUnknown once the node budget is spent.
FeasibilityResult feasible(const FeasibilityProblem& problem, const SearchLimits& limits = {});

// Bisection on alpha with feasibility queries. The upper end starts at the
// best heuristic game; once the bracket is narrower than epsilon_floor(n) a
// strict query at the upper end certifies optimality.
SolveResult bisection_solve(const TargetVector& beta, GameClass cls, const Metric& metric,
                            const SearchLimits& limits = {});

// Writes the feasibility problem as a mixed-integer program in CPLEX LP
// format. Supports d1 and dinf, n <= 12.
void export_ilp(const FeasibilityProblem& problem, std::ostream& out);

}  // namespace invbzf

#endif  // INVBZF_SOLVER_HPP_
