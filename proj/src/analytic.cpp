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


#include "invbzf/analytic.hpp"

#include <stdexcept>
#include <string>

namespace invbzf {

namespace {

void check_n(int n, int min) {
  if (n < min) throw std::invalid_argument("the family needs n >= " + std::to_string(min));
}

}  // namespace

TargetVector family_target(int n) {
  check_n(n, 2);
  std::vector<Rational> b(n, Rational(2, 2 * n - 1));
  b[n - 1] = Rational(1, 2 * n - 1);
  return TargetVector(b);
}

std::pair<Rational, Rational> family_interval(int n, FamilyInterval kind, int j) {
  check_n(n, 2);
  const Rational d = 2 * n - 1;
  if (kind == FamilyInterval::kFirst) {
    if (j < 1 || j > n - 1) throw std::invalid_argument("first-kind interval index must be in [1, n-1]");
    return {(2 * j - 1) / d, 2 * j / d};
  }
  if (j < 0 || j > n - 1) throw std::invalid_argument("second-kind interval index must be in [0, n-1]");
  return {2 * j / d, (2 * j + 1) / d};
}

PowerVector family_pbi(int n, FamilyInterval kind, int j) {
  family_interval(n, kind, j);  // validates
  if (kind == FamilyInterval::kSecond) return PowerVector(n, Rational(1, n));
  PowerVector b(n, Rational(1, n - 1));
  b[n - 1] = 0;
  return b;
}

Rational family_heuristic_distance(int n, MetricKind metric) {
  const PowerVector b = family_pbi(n, FamilyInterval::kSecond, (n - 1) / 2);
  const Metric m = metric == MetricKind::kDInf ? Metric::dinf() : Metric::d1();
  if (metric == MetricKind::kD1Weighted) throw std::invalid_argument("family distances use d1 or dinf");
  return distance(m, b, family_target(n).values());
}

WeightedGame vn_game(int n, int a) {
  check_n(n, 3);
  if (a < 1 || a > n - 2) throw std::invalid_argument("a must be in [1, n-2]");
  std::vector<std::int64_t> w(n, 2);
  for (int i = 0; i < a; ++i) w[i] = 3;
  w[n - 1] = 1;
  return WeightedGame(2 * n + a - 4, std::move(w));
}

SwingProfile vn_swings(int n, int a) {
  vn_game(n, a);  // validates
  SwingProfile s;
  s.per_player.assign(n, 2 * n - a - 4);
  for (int i = 0; i < a; ++i) s.per_player[i] = 2 * n - a - 2;
  s.per_player[n - 1] = a;
  for (auto x : s.per_player) s.total += x;
  return s;
}

int a_for_d1(int n) {
  check_n(n, 8);
  const int r = n % 7;
  return (r >= 1 && r <= 3) ? 6 * n / 7 : 6 * n / 7 - 1;
}

int a_for_dinf(int n) {
  check_n(n, 8);
  return (n + 1) / 3 + n / 3 - 1;
}

FamilyDeviation family_d1_deviation(int n) {
  check_n(n, 8);
  const long k = n / 7;
  FamilyDeviation f;
  auto q = [](long num, long den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
  };
  switch (n % 7) {
    case 0: {
      const long d = (14 * k - 1) * k * (56 * k - 11);
      // The row total is a (6k-1) |w3| + k |w2| + |w1| = 2k(28k-3)/d, so the k cancels.
      f = {q(-1, d), q(28 * k - 3, d), q(-(28 * k * k - 9 * k + 1), d), q(2 * (28 * k - 3), (14 * k - 1) * (56 * k - 11))};
      break;
    }
    case 1:
      f = {0, q(1, 2 * k * (14 * k + 1)), q(-1, 2 * (14 * k + 1)), q(1, 14 * k + 1)};
      break;
    case 2: {
      const long d = (14 * k + 3) * (56 * k * k + 19 * k + 2);
      f = {q(1, d), q(7 * (4 * k + 1), d), q(-(28 * k * k + 13 * k + 1), d), q(2 * (28 * k * k + 13 * k + 1), d)};
      break;
    }
    case 3: {
      const long d = (14 * k + 5) * (28 * k * k + 17 * k + 3);
      f = {q(1, d), q(2 * (7 * k + 3), d), q(-2 * (7 * k * k + 6 * k + 1), d), q(4 * (7 * k * k + 6 * k + 1), d)};
      break;
    }
    case 4: {
      const long d = (2 * k + 1) * (14 * k * k + 14 * k + 3);
      f = {q(-1, 7 * d), q(14 * k + 5, 14 * d), q(-(14 * k * k + 7 * k + 1), 14 * d), q(14 * k * k + 19 * k + 5, 7 * d)};
      break;
    }
    case 5: {
      const long d = (14 * k + 9) * (56 * k * k + 71 * k + 21);
      f = {q(-3, d), q(28 * k + 15, d), q(-(28 * k * k + 25 * k + 6), d), q(2 * (28 * k * k + 43 * k + 15), d)};
      break;
    }
    default: {
      const long d = (14 * k + 11) * (28 * k * k + 43 * k + 16);
      f = {q(-1, d), q(2 * (7 * k + 5), d), q(-2 * (7 * k * k + 9 * k + 3), d), q(4 * (7 * k * k + 12 * k + 5), d)};
      break;
    }
  }
  return f;
}

Rational b_bound(int n) {
  check_n(n, 8);
  const long m = n;
  Rational b;
  switch (n % 3) {
    case 0: b = Rational(8 * m - 9, m * (4 * m - 7) * (2 * m - 1)); break;
    case 1: b = Rational(8 * m - 23, (4 * m * m - 5 * m - 8) * (2 * m - 1)); break;
    default: b = Rational(4, 4 * m * m - 1); break;
  }
  b.canonicalize();
  return b;
}

}  // namespace invbzf
