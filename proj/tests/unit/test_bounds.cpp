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


#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "invbzf/bounds.hpp"
#include "invbzf/grid.hpp"
#include "invbzf/solver.hpp"

using namespace invbzf;

namespace {

Rational d1(const PowerVector& a, const PowerVector& b) { return distance(Metric::d1(), a, b); }

WeightedGame random_weighted(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> w(0, 9);
  std::vector<std::int64_t> ws(n);
  std::int64_t sum = 0;
  while (sum == 0) {
    sum = 0;
    for (auto& x : ws) sum += x = w(rng);
  }
  std::uniform_int_distribution<std::int64_t> q(1, sum);
  return WeightedGame(q(rng), ws);
}

// A random simple game: a random class representative under a random labeling.
SimpleGame random_simple(int n, GameClass cls, std::mt19937_64& rng) {
  const auto& cat = class_catalog(n, cls);
  std::uniform_int_distribution<std::size_t> pick(0, cat.size() - 1);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return relabel(cat[pick(rng)].game, perm);
}

}  // namespace

TEST_CASE("concentration bound right-hand side") {
  CHECK(ae_rhs({2, Rational(1, 18)}) == Rational(7, 18));
  CHECK(ae_rhs({1, Rational(1, 4)}) == Rational(7, 4));
  Rational prev = ae_rhs({3, Rational(1, 5)});
  for (Rational e(1, 5); e > Rational(1, 100000); e /= 3) {
    const Rational r = ae_rhs({3, e});
    CHECK(r <= prev);
    prev = r;
  }
  CHECK(prev < Rational(1, 1000));
  CHECK_THROWS_AS(ae_rhs({2, Rational(1, 3)}), std::invalid_argument);
  CHECK_THROWS_AS(ae_rhs({2, 0}), std::invalid_argument);
  CHECK_THROWS_AS(ae_rhs({0, Rational(1, 10)}), std::invalid_argument);
}

TEST_CASE("major-player reduction") {
  const auto dictator = SimpleGame::from_predicate(4, [](Coalition s) { return s.contains(0); });
  CHECK(reduce_major_players(dictator, 1) == dictator);
  // power sitting with the minors breaks the construction
  const auto last = SimpleGame::from_predicate(3, [](Coalition s) { return s.contains(2); });
  CHECK_FALSE(reduce_major_players(last, 1).has_value());

  std::mt19937_64 rng(11);
  int valid = 0;
  for (int rep = 0; rep < 50; ++rep) {
    const auto w = random_weighted(5, rng);
    const auto r = reduce_major_players(realize(w), 2);
    if (!r) continue;
    ++valid;
    const auto s = swings(*r);
    for (int i = 2; i < 5; ++i) CHECK(s.per_player[i] == 0);
    CHECK(weighted_representation(*r).has_value());
  }
  CHECK(valid > 10);
  for (int rep = 0; rep < 100; ++rep) {
    const auto v = random_simple(6, GameClass::kC, rng);
    if (const auto r = reduce_major_players(v, 3)) CHECK(is_complete(*r));
  }
}

TEST_CASE("concentration inequality on random games") {
  std::mt19937_64 rng(5);
  int applied = 0;
  for (int rep = 0; rep < 500; ++rep) {
    const int n = 3 + rep % 4;
    const auto v = random_simple(n, n <= 6 ? GameClass::kS : GameClass::kW, rng);
    const PowerVector b = pbi(v);
    for (int k = 1; k < n; ++k) {
      const Rational eps = std::accumulate(b.begin() + k, b.end(), Rational(0));
      if (eps == 0 || eps >= Rational(1, k + 1)) continue;
      const auto r = reduce_major_players(v, k);
      REQUIRE(r.has_value());
      ++applied;
      CHECK(d1(b, pbi(*r)) <= ae_rhs({k, eps}));
    }
  }
  CHECK(applied > 100);
}

TEST_CASE("l1 by breakpoints equals a fine scan") {
  std::mt19937_64 rng(3);
  for (int rep = 0; rep < 200; ++rep) {
    const int n = 3 + rep % 4;
    std::vector<std::int64_t> raw(n);
    std::uniform_int_distribution<std::int64_t> part(0, 20);
    std::int64_t sum = 0;
    while (sum == 0) {
      sum = 0;
      for (auto& x : raw) sum += x = part(rng);
    }
    std::vector<Rational> beta;
    for (auto x : raw) beta.push_back(Rational(x, sum));
    for (auto& x : beta) x.canonicalize();
    const TargetVector t(beta);
    const int k = 1 + rep % (n - 1);
    const Rational eps(1, 3 * (k + 1));
    double major = 0;
    for (int i = 0; i < k; ++i) major += to_double(beta[i]);
    // ternary search on the convex function
    const long double m = major;
    auto f = [&](long double x) { return std::abs(1 - x - m) + std::abs(x - (1 - m)); };
    long double lo = to_double(eps), hi = 1;
    for (int it = 0; it < 200; ++it) {
      const long double a = lo + (hi - lo) / 3, b = hi - (hi - lo) / 3;
      (f(a) <= f(b) ? hi : lo) = f(a) <= f(b) ? b : a;
    }
    const double best = static_cast<double>(f((lo + hi) / 2));
    CHECK(std::abs(to_double(l1_bound(t, {k, eps})) - best) < 1e-12);
  }
}

TEST_CASE("two strong players: 1/9") {
  for (int n = 3; n <= 8; ++n) {
    std::vector<Rational> beta(n, 0);
    beta[0] = Rational(3, 4);
    beta[1] = Rational(1, 4);
    const TargetVector t(beta);
    const auto row = lower_bound(t, {2, Rational(1, 18)});
    CHECK(row.l1 == Rational(1, 9));
    CHECK(row.l2 == Rational(1, 9));
    CHECK(row.bound == Rational(1, 9));
  }
  CHECK(solve_by_enumeration(TargetVector::unnormalized({Rational(3, 4), Rational(1, 4)}), GameClass::kS,
                             Metric::d1())
            .distance == Rational(1, 2));
  const TargetVector t({Rational(3, 4), Rational(1, 4), 0, 0});
  const auto rows = bound_sweep(t, 2);
  CHECK(rows.size() == 8);
  CHECK(rows[0].epsilon == Rational(1, 6));
  CHECK(rows[1].epsilon == Rational(1, 12));
  CHECK(best_bound(rows).bound == Rational(1, 12));
  CHECK(best_bound(rows).bound <= Rational(1, 9));
}

TEST_CASE("bounds never exceed the optimum") {
  // exhaustive on the n = 4 grid, every admissible k, four epsilons each
  const Grid g(4, 100);
  std::uint64_t checked = 0;
  g.for_each(0, g.size(), [&](std::uint64_t, const std::vector<int>& parts) {
    const TargetVector t = g.target(parts);
    const Rational opt = solve_by_enumeration(t, GameClass::kS, Metric::d1()).distance;
    for (int k = 1; k < 4; ++k)
      for (const auto& row : bound_sweep(t, k, 4)) {
        if (row.bound > opt) FAIL_CHECK("bound above optimum");
        ++checked;
      }
  });
  CHECK(checked == 12 * g.size());
  // exact k-player hit with null minors
  const TargetVector hit({Rational(1, 2), Rational(1, 2), 0, 0, 0});
  for (const auto& row : bound_sweep(hit, 2)) CHECK(row.bound <= 0);
}
