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


#include "invbzf/bounds.hpp"

#include <algorithm>
#include <stdexcept>

#include "invbzf/solver.hpp"

namespace invbzf {

namespace {

void check(const AEParameters& p) {
  if (p.k < 1) throw std::invalid_argument("k must be at least 1");
  if (p.epsilon <= 0 || p.epsilon >= Rational(1, p.k + 1))
    throw std::invalid_argument("epsilon must lie strictly between 0 and 1/(k+1)");
}

}  // namespace

Rational ae_rhs(const AEParameters& p) {
  check(p);
  const Rational& e = p.epsilon;
  return (2 * p.k + 1) * e / (1 - (p.k + 1) * e) + e;
}

std::optional<SimpleGame> reduce_major_players(const SimpleGame& v, int k) {
  const int n = v.players();
  if (k < 1 || k >= n) throw std::invalid_argument("k must be in [1, n-1]");
  const Mask majors = (Mask{1} << k) - 1;
  const Coalition minors(Coalition::all(n).bits() & ~majors);
  const std::uint64_t half = std::uint64_t{1} << (n - k - 1);
  std::vector<bool> wins(std::size_t{1} << k);
  for (Mask t = 0; t <= majors; ++t) {
    std::uint64_t count = 0;
    for_each_subset(minors, [&](Coalition u) { count += v.winning(t | u.bits()); });
    wins[t] = count >= half;
  }
  std::vector<std::uint64_t> words(SimpleGame::word_count(n), 0);
  for (std::uint64_t s = 0; s < v.coalition_count(); ++s)
    if (wins[s & majors]) words[s >> 6] |= std::uint64_t{1} << (s & 63);
  return SimpleGame::try_from_table(n, std::move(words));
}

Rational l1_bound(const TargetVector& beta, const AEParameters& p) {
  check(p);
  if (p.k >= beta.size()) throw std::invalid_argument("k must be smaller than n");
  Rational major = 0, minor = 0;
  for (int i = 0; i < beta.size(); ++i) (i < p.k ? major : minor) += beta[i];
  auto f = [&](const Rational& x) { return Rational(abs(1 - x - major) + abs(x - minor)); };
  std::optional<Rational> best;
  // convex and piecewise linear: the minimum is at an end or a kink
  for (const Rational& x : {p.epsilon, Rational(1), Rational(1 - major), minor}) {
    if (x < p.epsilon || x > 1) continue;
    const Rational y = f(x);
    if (!best || y < *best) best = y;
  }
  return *best;
}

KSolver enumeration_k_solver(GameClass cls) {
  return [cls](const TargetVector& prefix) { return solve_by_enumeration(prefix, cls, Metric::d1()).distance; };
}

BoundRow lower_bound(const TargetVector& beta, const AEParameters& p, const KSolver& solver) {
  BoundRow row;
  row.k = p.k;
  row.epsilon = p.epsilon;
  row.l1 = l1_bound(beta, p);
  const std::vector<Rational> prefix(beta.values().begin(), beta.values().begin() + p.k);
  row.l2 = solver(TargetVector::unnormalized(prefix)) - ae_rhs(p);
  row.bound = std::min(row.l1, row.l2);
  return row;
}

std::vector<BoundRow> bound_sweep(const TargetVector& beta, int k, int steps, const KSolver& solver) {
  if (steps < 1) throw std::invalid_argument("steps must be positive");
  // the k-player optimum does not depend on epsilon
  std::optional<Rational> sub;
  const KSolver cached = [&](const TargetVector& t) {
    if (!sub) sub = solver(t);
    return *sub;
  };
  std::vector<BoundRow> rows;
  Rational eps(1, 2 * (k + 1));
  for (int s = 0; s < steps; ++s, eps /= 2) rows.push_back(lower_bound(beta, {k, eps}, cached));
  return rows;
}

BoundRow best_bound(const std::vector<BoundRow>& rows) {
  if (rows.empty()) throw std::invalid_argument("no bound rows");
  return *std::max_element(rows.begin(), rows.end(),
                           [](const BoundRow& a, const BoundRow& b) { return a.bound < b.bound; });
}

}  // namespace invbzf
