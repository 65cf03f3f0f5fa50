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


// Lower bounds on the d1 inverse problem from concentrating power on the
// first k ("major") players.

#ifndef INVBZF_BOUNDS_HPP_
#define INVBZF_BOUNDS_HPP_

#include <functional>
#include <optional>
#include <vector>

#include "invbzf/enumerate.hpp"
#include "invbzf/game.hpp"
#include "invbzf/target.hpp"

namespace invbzf {

struct AEParameters {
  int k = 1;
  Rational epsilon;  // 0 < epsilon < 1/(k+1)
};

// (2k+1) eps / (1 - (k+1) eps) + eps. Throws std::invalid_argument outside
// the admissible range.
Rational ae_rhs(const AEParameters& p);

// v~(S) = 1 iff at least half of the 2^(n-k) coalitions (S & majors) | U,
// U a set of minor players, win in v. nullopt when that rule does not give a
// simple game (the empty coalition wins or the grand coalition loses).
std::optional<SimpleGame> reduce_major_players(const SimpleGame& v, int k);

// min over eps <= x <= 1 of |1 - x - sum_{i<k} beta_i| + |x - sum_{i>=k} beta_i|
Rational l1_bound(const TargetVector& beta, const AEParameters& p);

// Exact d1 optimum for an unnormalized k-vector.
using KSolver = std::function<Rational(const TargetVector&)>;
KSolver enumeration_k_solver(GameClass cls = GameClass::kS);

struct BoundRow {
  int k = 1;
  Rational epsilon;
  Rational l1;
  Rational l2;  // epsilon' - ae_rhs
  Rational bound;  // min(l1, l2)
};

// Valid for every n-player simple game and a normalized beta.
BoundRow lower_bound(const TargetVector& beta, const AEParameters& p, const KSolver& solver = enumeration_k_solver());

// epsilon = 1/(2^s (k+1)) for s = 1..steps; rows in that order.
std::vector<BoundRow> bound_sweep(const TargetVector& beta, int k, int steps = 8,
                                  const KSolver& solver = enumeration_k_solver());
// Row with the largest bound.
BoundRow best_bound(const std::vector<BoundRow>& rows);

}  // namespace invbzf

#endif  // INVBZF_BOUNDS_HPP_
