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


// The target family beta^n = (2, ..., 2, 1) / (2n - 1) and the weighted games
// (2n + a - 4; 3^a, 2^(n - a - 1), 1) that approximate it.

#ifndef INVBZF_ANALYTIC_HPP_
#define INVBZF_ANALYTIC_HPP_

#include <utility>

#include "invbzf/game.hpp"
#include "invbzf/target.hpp"

namespace invbzf {

TargetVector family_target(int n);  // n >= 2

// Quota intervals for weights beta^n: kFirst j = ((2j-1)/(2n-1), 2j/(2n-1)],
// 1 <= j <= n-1; kSecond j = (2j/(2n-1), (2j+1)/(2n-1)], 0 <= j <= n-1.
enum class FamilyInterval { kFirst, kSecond };
std::pair<Rational, Rational> family_interval(int n, FamilyInterval kind, int j);

// kFirst: (1/(n-1), ..., 1/(n-1), 0); kSecond: (1/n, ..., 1/n).
PowerVector family_pbi(int n, FamilyInterval kind, int j);

// Distance of the heuristic game with weights beta^n: its quota lands in a
// kSecond interval, so the PBI is uniform. j is fixed to (n - 1) / 2.
Rational family_heuristic_distance(int n, MetricKind metric);

// (2n + a - 4; 3^a, 2^(n-a-1), 1), 1 <= a <= n - 2.
WeightedGame vn_game(int n, int a);
// Closed form: 2n - a - 2 per weight-3 player, 2n - a - 4 per weight-2
// player, a for the weight-1 player.
SwingProfile vn_swings(int n, int a);

// n >= 8
int a_for_d1(int n);
int a_for_dinf(int n);

struct FamilyDeviation {
  Rational weight3;  // beta_i - B_i for each weight-3 player
  Rational weight2;
  Rational weight1;
  Rational d1;
};
// Closed forms by n mod 7 for vn_game(n, a_for_d1(n)), n >= 8.
FamilyDeviation family_d1_deviation(int n);

// Upper bound on the dinf optimum over weighted games, n >= 8.
Rational b_bound(int n);

}  // namespace invbzf

#endif  // INVBZF_ANALYTIC_HPP_
