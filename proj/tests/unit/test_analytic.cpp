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

#include <random>

#include "invbzf/analytic.hpp"

using namespace invbzf;

namespace {

Rational q(long a, long b) {
  Rational r(a, b);
  r.canonicalize();
  return r;
}

// (q; 2, ..., 2, 1) over 2n - 1 with integer quota numerator t: the game
// with weight-sum threshold t / (2n - 1).
PowerVector brute_family_pbi(int n, long t) {
  std::vector<std::int64_t> w(n, 2);
  w[n - 1] = 1;
  return pbi(swings(realize(WeightedGame(t, w))));
}

}  // namespace

TEST_CASE("family target and intervals") {
  const auto b = family_target(5);
  CHECK(b.values() == std::vector<Rational>{q(2, 9), q(2, 9), q(2, 9), q(2, 9), q(1, 9)});
  CHECK(family_interval(5, FamilyInterval::kFirst, 2) == std::pair<Rational, Rational>{q(3, 9), q(4, 9)});
  CHECK(family_interval(5, FamilyInterval::kSecond, 0) == std::pair<Rational, Rational>{0, q(1, 9)});
  CHECK_THROWS_AS(family_interval(5, FamilyInterval::kFirst, 0), std::invalid_argument);
  CHECK_THROWS_AS(family_interval(5, FamilyInterval::kSecond, 5), std::invalid_argument);
  // the intervals tile (0, 1]
  for (int n = 2; n <= 9; ++n) {
    Rational at = 0;
    for (int j = 0; j < n; ++j) {
      if (j > 0) {
        auto [lo, hi] = family_interval(n, FamilyInterval::kFirst, j);
        CHECK(lo == at);
        at = hi;
      }
      auto [lo, hi] = family_interval(n, FamilyInterval::kSecond, j);
      CHECK(lo == at);
      at = hi;
    }
    CHECK(at == 1);
  }
}

TEST_CASE("family PBI") {
  CHECK(family_pbi(5, FamilyInterval::kFirst, 2) == PowerVector{q(1, 4), q(1, 4), q(1, 4), q(1, 4), 0});
  CHECK(family_pbi(5, FamilyInterval::kSecond, 1) == PowerVector(5, q(1, 5)));
  CHECK(family_heuristic_distance(5, MetricKind::kD1) == q(8, 45));
  CHECK(family_heuristic_distance(5, MetricKind::kDInf) == q(4, 45));
  for (int n = 2; n <= 20; ++n) {
    const Rational d = 2 * n - 1;
    CHECK(family_heuristic_distance(n, MetricKind::kD1) == Rational(2 / d * Rational(n - 1, n)));
    CHECK(family_heuristic_distance(n, MetricKind::kDInf) == Rational(1 / d * Rational(n - 1, n)));
    const auto target = family_target(n);
    const auto& beta = target.values();
    if (n >= 3)
      for (int j = 1; j < n; ++j) {
        const auto b = family_pbi(n, FamilyInterval::kFirst, j);
        CHECK(distance(Metric::d1(), b, beta) == 2 / d);
        CHECK(distance(Metric::dinf(), b, beta) == 1 / d);
      }
  }
}

TEST_CASE("family PBI against brute force at random quotas") {
  std::mt19937_64 rng(7);
  for (int n = 2; n <= 16; ++n) {
    const long den = 2 * n - 1;
    std::uniform_int_distribution<long> pick(1, den * 1000);
    for (int rep = 0; rep < 20; ++rep) {
      // quota x / (1000 (2n - 1)) in (0, 1]; a coalition of weight w wins iff 1000 w >= x
      const long x = pick(rng);
      const Rational quota(x, den * 1000);
      const long t = (x + 999) / 1000;
      FamilyInterval kind = FamilyInterval::kSecond;
      int j = 0;
      for (int i = 0; i < n; ++i) {
        if (i > 0 && quota > family_interval(n, FamilyInterval::kFirst, i).first &&
            quota <= family_interval(n, FamilyInterval::kFirst, i).second)
          kind = FamilyInterval::kFirst, j = i;
        if (quota > family_interval(n, FamilyInterval::kSecond, i).first &&
            quota <= family_interval(n, FamilyInterval::kSecond, i).second)
          kind = FamilyInterval::kSecond, j = i;
      }
      CHECK(family_pbi(n, kind, j) == brute_family_pbi(n, t));
    }
  }
}

TEST_CASE("swing counts of the (2n + a - 4; 3^a, 2^(n-a-1), 1) games") {
  CHECK(vn_swings(5, 3).per_player == std::vector<std::int64_t>{5, 5, 5, 3, 3});
  CHECK(swings(realize(WeightedGame(9, {3, 3, 3, 2, 1}))).per_player == std::vector<std::int64_t>{5, 5, 5, 3, 3});
  // the quota 2n - a - 4 as printed gives different counts
  CHECK(swings(realize(WeightedGame(3, {3, 3, 3, 2, 1}))).per_player == std::vector<std::int64_t>{3, 3, 3, 1, 1});
  CHECK(vn_swings(8, 6).per_player == std::vector<std::int64_t>{8, 8, 8, 8, 8, 8, 6, 6});
  for (int k = 2; k <= 3; ++k) CHECK(vn_swings(7 * k, 6 * k - 1).total == 56 * k * k - 11 * k);
  for (int n = 3; n <= 16; ++n)
    for (int a = 1; a <= n - 2; ++a) {
      CAPTURE(n);
      CAPTURE(a);
      CHECK(vn_swings(n, a) == swings(realize(vn_game(n, a))));
    }
  CHECK_THROWS_AS(vn_game(8, 0), std::invalid_argument);
  CHECK_THROWS_AS(vn_game(8, 7), std::invalid_argument);
}

TEST_CASE("a(n) choices") {
  CHECK(a_for_d1(8) == 6);
  CHECK(a_for_d1(14) == 11);
  CHECK(a_for_d1(10) == 8);
  CHECK(a_for_d1(11) == 8);
  CHECK(a_for_dinf(8) == 4);
  CHECK(a_for_dinf(9) == 5);
  CHECK_THROWS_AS(a_for_d1(7), std::invalid_argument);
}

TEST_CASE("d1 closed forms against brute force") {
  CHECK(family_d1_deviation(8).d1 == q(1, 15));
  CHECK(family_d1_deviation(15).d1 == q(1, 29));
  // n = 14, k = 2: the per-type entries sum to twice 2(28k-3)/((14k-1)k(56k-11))
  CHECK(family_d1_deviation(14).d1 == 2 * q(2 * 53, 27 * 2 * 101));
  for (int n = 8; n <= 28; ++n) {
    CAPTURE(n);
    const auto target = family_target(n);
    const auto& beta = target.values();
    const int a = a_for_d1(n);
    const PowerVector b = pbi(swings(vn_game(n, a)));
    const auto f = family_d1_deviation(n);
    CHECK(f.weight3 == beta[0] - b[0]);
    CHECK(f.weight2 == beta[a] - b[a]);
    CHECK(f.weight1 == beta[n - 1] - b[n - 1]);
    CHECK(f.d1 == distance(Metric::d1(), b, beta));
  }
  const double t = to_double(family_d1_deviation(70).d1);
  CHECK(std::abs(70 * t - 0.5) < 0.05);
  CHECK(std::abs(to_double(family_heuristic_distance(70, MetricKind::kD1)) / t - 2) < 0.1);
}

TEST_CASE("dinf bound against brute force") {
  CHECK(b_bound(8) == q(4, 255));
  CHECK(b_bound(9) == q(63, 4437));
  for (int n = 8; n <= 24; ++n) {
    CAPTURE(n);
    const PowerVector b = pbi(swings(vn_game(n, a_for_dinf(n))));
    CHECK(distance(Metric::dinf(), b, family_target(n).values()) == b_bound(n));
  }
  const double nn = 300;
  CHECK(std::abs(to_double(b_bound(300)) * nn * nn - 1) < 0.01);
}
