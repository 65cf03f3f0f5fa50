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
#include <set>

#include "invbzf/game.hpp"
#include "invbzf/lp.hpp"

using namespace invbzf;

namespace {

std::set<Mask> winning_set(const SimpleGame& v) {
  std::set<Mask> out;
  for (Mask s = 0; s < v.coalition_count(); ++s)
    if (v.winning(s)) out.insert(s);
  return out;
}

// Plain definition, one coalition at a time.
std::vector<std::int64_t> brute_swings(const SimpleGame& v) {
  const int n = v.players();
  std::vector<std::int64_t> s(n, 0);
  for (Mask c = 0; c < v.coalition_count(); ++c)
    for (int i = 0; i < n; ++i)
      if (!((c >> i) & 1u) && !v.winning(c) && v.winning(c | (Mask{1} << i))) ++s[i];
  return s;
}

Coalition one_based(std::initializer_list<int> players) {
  Mask m = 0;
  for (int p : players) m |= Mask{1} << (p - 1);
  return Coalition(m);
}

WeightedGame random_weighted(std::mt19937_64& rng, int n, int max_w) {
  std::uniform_int_distribution<int> wd(0, max_w);
  std::vector<std::int64_t> w(n);
  std::int64_t sum = 0;
  while (sum == 0) {
    sum = 0;
    for (auto& x : w) sum += (x = wd(rng));
  }
  std::uniform_int_distribution<std::int64_t> qd(1, sum);
  return WeightedGame(qd(rng), w);
}

SimpleGame footnote_game() {
  std::vector<Coalition> mwc = {one_based({2, 4, 5, 6}), one_based({2, 3, 4, 5}), one_based({1, 3, 5, 6}),
                                one_based({1, 3, 4, 5}), one_based({1, 2, 4, 6}), one_based({1, 2, 3, 5})};
  return SimpleGame::from_minimal_winning(6, mwc);
}

}  // namespace

TEST_CASE("coalition subsets are enumerated exactly once") {
  Coalition c = Coalition::of({0, 3, 5});
  std::set<Mask> seen;
  for_each_subset(c, [&](Coalition s) {
    CHECK(s.subset_of(c));
    seen.insert(s.bits());
  });
  CHECK(seen.size() == 8);
  CHECK(c.size() == 3);
  CHECK(c.members() == std::vector<int>{0, 3, 5});
}

TEST_CASE("from_minimal_winning builds the upward closure") {
  std::vector<Coalition> mwc = {one_based({1}), one_based({2, 3})};
  SimpleGame v = SimpleGame::from_minimal_winning(3, mwc);
  std::set<Mask> expected = {0b001, 0b011, 0b101, 0b111, 0b110};
  CHECK(winning_set(v) == expected);

  SimpleGame d = SimpleGame::from_minimal_winning(1, std::vector<Coalition>{one_based({1})});
  CHECK(winning_set(d) == std::set<Mask>{1});

  SimpleGame f = footnote_game();
  CHECK(f.minimal_winning().size() == 6);
}

TEST_CASE("from_minimal_winning rejects bad input") {
  CHECK_THROWS(SimpleGame::from_minimal_winning(3, std::vector<Coalition>{}));
  CHECK_THROWS(SimpleGame::from_minimal_winning(3, std::vector<Coalition>{one_based({1}), one_based({1, 2})}));
  CHECK_THROWS(SimpleGame::from_minimal_winning(2, std::vector<Coalition>{one_based({3})}));
}

TEST_CASE("from_table validates simple-game invariants") {
  CHECK_THROWS(SimpleGame::from_table(2, {0b0000}));      // v(N)=0
  CHECK_THROWS(SimpleGame::from_table(2, {0b1001}));      // v(empty)=1
  CHECK_THROWS(SimpleGame::from_table(2, {0b0110}));      // {1},{2} win, N loses
  CHECK_NOTHROW(SimpleGame::from_table(2, {0b1000}));
}

TEST_CASE("realize and swings on small weighted games") {
  SimpleGame v = realize(WeightedGame(2, {2, 1, 1}));
  CHECK(winning_set(v) == std::set<Mask>{0b001, 0b011, 0b101, 0b110, 0b111});
  SwingProfile s = swings(v);
  CHECK(s.per_player == std::vector<std::int64_t>{3, 1, 1});
  CHECK(s.total == 5);
  CHECK(pbi(v) == PowerVector{Rational(3, 5), Rational(1, 5), Rational(1, 5)});

  SimpleGame dict = realize(WeightedGame(1, {1, 0, 0}));
  CHECK(winning_set(dict) == std::set<Mask>{0b001, 0b011, 0b101, 0b111});
  CHECK(swings(dict).per_player == std::vector<std::int64_t>{4, 0, 0});

  SimpleGame maj = realize(WeightedGame(2, {1, 1, 1}));
  CHECK(swings(maj).per_player == std::vector<std::int64_t>{2, 2, 2});
  CHECK(pbi(maj) == PowerVector{Rational(1, 3), Rational(1, 3), Rational(1, 3)});

  // Quota 3 lets every weight-3 player win alone.
  SimpleGame low = realize(WeightedGame(3, {3, 3, 3, 2, 1}));
  CHECK(brute_swings(low) == std::vector<std::int64_t>{3, 3, 3, 1, 1});
  CHECK(swings(low).per_player == std::vector<std::int64_t>{3, 3, 3, 1, 1});
  // The (5,5,5,3,3) profile belongs to quota 4 and to its dual, quota 9.
  for (std::int64_t q : {4, 9}) {
    SimpleGame five = realize(WeightedGame(q, {3, 3, 3, 2, 1}));
    CHECK(brute_swings(five) == std::vector<std::int64_t>{5, 5, 5, 3, 3});
    CHECK(swings(five).per_player == std::vector<std::int64_t>{5, 5, 5, 3, 3});
  }
}

TEST_CASE("six-player game with six minimal winning coalitions of size four") {
  // Counted by hand-independent brute force: (7,7,7,7,9,5) swings.
  CHECK(brute_swings(footnote_game()) == std::vector<std::int64_t>{7, 7, 7, 7, 9, 5});
  PowerVector b = pbi(footnote_game());
  CHECK(b == PowerVector{Rational(1, 6), Rational(1, 6), Rational(1, 6), Rational(1, 6), Rational(3, 14),
                         Rational(5, 42)});
}

TEST_CASE("absolute PBI") {
  SwingProfile s = swings(realize(WeightedGame(2, {2, 1, 1})));
  CHECK(absolute_pbi(s) == PowerVector{Rational(3, 4), Rational(1, 4), Rational(1, 4)});
}

TEST_CASE("weighted swing recursion agrees with the truth table") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + trial % 10;
    WeightedGame g = random_weighted(rng, n, 9);
    SimpleGame v = realize(g);
    CHECK(swings(g) == swings(v));
    CHECK(swings(v).per_player == brute_swings(v));
  }
}

TEST_CASE("dual preserves swings and is an involution") {
  SimpleGame dict = realize(WeightedGame(1, {1, 0, 0}));
  CHECK(dual(dict) == dict);
  SimpleGame v = realize(WeightedGame(2, {2, 1, 1}));
  CHECK(swings(dual(v)).per_player == std::vector<std::int64_t>{3, 1, 1});

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    SimpleGame g = realize(random_weighted(rng, 5, 6));
    CHECK(dual(dual(g)) == g);
    CHECK(swings(dual(g)) == swings(g));
  }
}

TEST_CASE("desirability and completeness") {
  SimpleGame v = realize(WeightedGame(2, {2, 1, 1}));
  CHECK(desirability(v, 0, 1) == Desirability::kMore);
  CHECK(desirability(v, 1, 0) == Desirability::kLess);
  CHECK(desirability(v, 1, 2) == Desirability::kEqual);
  CHECK(is_complete(v));

  // {1,2} or {3,4}: players 1 and 3 are incomparable
  SimpleGame nc = SimpleGame::from_minimal_winning(4, std::vector<Coalition>{one_based({1, 2}), one_based({3, 4})});
  CHECK(desirability(nc, 0, 2) == Desirability::kIncomparable);
  CHECK_FALSE(is_complete(nc));

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) CHECK(is_complete(realize(random_weighted(rng, 1 + trial % 7, 8))));
}

TEST_CASE("realized weighted games are monotone") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 500; ++trial) {
    WeightedGame g = random_weighted(rng, 1 + trial % 12, 20);
    SimpleGame v = realize(g);
    CHECK(is_monotone_table(v.players(), v.table()));
  }
}

TEST_CASE("swing totals respect the n <= s < n 2^n bound and PBI sums to one") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + trial % 9;
    SimpleGame v = realize(random_weighted(rng, n, 10));
    SwingProfile s = swings(v);
    CHECK(s.total >= n);
    Rational sum = 0;
    for (const auto& b : pbi(s)) {
      CHECK(b >= 0);
      CHECK(b <= 1);
      sum += b;
    }
    CHECK(sum == 1);
    CHECK(s.total < static_cast<std::int64_t>(n) << n);
  }
}

TEST_CASE("null players carry zero power and do not disturb the others") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 6;
    WeightedGame g = random_weighted(rng, n, 7);
    std::vector<std::int64_t> w = g.weights();
    w.push_back(0);
    WeightedGame h(g.quota(), w);
    PowerVector a = pbi(realize(g));
    PowerVector b = pbi(realize(h));
    CHECK(b.back() == 0);
    b.pop_back();
    CHECK(a == b);
  }
}

TEST_CASE("relabel moves players") {
  SimpleGame v = realize(WeightedGame(2, {2, 1, 1}));
  std::vector<int> perm = {1, 0, 2};
  SimpleGame r = relabel(v, perm);
  CHECK(r == realize(WeightedGame(2, {1, 2, 1})));
}

TEST_CASE("canonical form identifies isomorphic games") {
  CHECK(canonical_form(realize(WeightedGame(2, {1, 2, 1}))) == canonical_form(realize(WeightedGame(2, {2, 1, 1}))));
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + trial % 5;
    SimpleGame v = realize(random_weighted(rng, n, 6));
    SimpleGame c = canonical_form(v);
    CHECK(canonical_form(c) == c);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(canonical_form(relabel(v, perm)) == c);
  }
}

TEST_CASE("brute-force isomorphism classes of simple games") {
  // Every 2^(2^n) table filtered by the simple-game invariants.
  auto count = [](int n) {
    std::set<std::vector<std::uint64_t>> classes;
    const std::uint64_t tables = std::uint64_t{1} << (1u << n);
    for (std::uint64_t t = 0; t < tables; ++t) {
      auto v = SimpleGame::try_from_table(n, {t});
      if (v) classes.insert(canonical_form(*v).table());
    }
    return classes.size();
  };
  CHECK(count(1) == 1);
  CHECK(count(2) == 3);
  CHECK(count(3) == 8);
  CHECK(count(4) == 28);
}

TEST_CASE("exact LP feasibility") {
  // x + y <= 1, x - y >= 1/2  -> feasible
  std::vector<LinearRow> rows = {
      {{1, 1}, Relation::kLessEqual, 1},
      {{1, -1}, Relation::kGreaterEqual, Rational(1, 2)},
  };
  auto x = find_nonnegative_solution(2, rows);
  REQUIRE(x);
  CHECK((*x)[0] + (*x)[1] <= 1);
  CHECK((*x)[0] - (*x)[1] >= Rational(1, 2));
  // x + y >= 3, x <= 1, y <= 1 -> infeasible
  std::vector<LinearRow> bad = {
      {{1, 1}, Relation::kGreaterEqual, 3},
      {{1, 0}, Relation::kLessEqual, 1},
      {{0, 1}, Relation::kLessEqual, 1},
  };
  CHECK_FALSE(find_nonnegative_solution(2, bad));
  std::vector<LinearRow> eq = {{{2, 3}, Relation::kEqual, 7}};
  auto e = find_nonnegative_solution(2, eq);
  REQUIRE(e);
  CHECK(2 * (*e)[0] + 3 * (*e)[1] == 7);
}

TEST_CASE("weightedness certificates") {
  SimpleGame v = realize(WeightedGame(2, {2, 1, 1}));
  auto w = weighted_representation(v);
  REQUIRE(w);
  CHECK(realize(*w) == v);
  auto wo = weighted_representation_ordered(v);
  REQUIRE(wo);
  CHECK(realize(*wo) == v);

  SimpleGame nc = SimpleGame::from_minimal_winning(4, std::vector<Coalition>{one_based({1, 2}), one_based({3, 4})});
  CHECK_FALSE(weighted_representation(nc));

  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    SimpleGame g = realize(random_weighted(rng, 1 + trial % 8, 12));
    auto r = weighted_representation(g);
    REQUIRE(r);
    CHECK(realize(*r) == g);
  }
}
