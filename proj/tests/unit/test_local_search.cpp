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
#include "invbzf/grid.hpp"
#include "invbzf/local_search.hpp"

using namespace invbzf;

TEST_CASE("exact hit in one restart") {
  const TargetVector t({Rational(1, 3), Rational(1, 3), Rational(1, 3)});
  SearchConfig c;
  c.restarts = 1;
  const auto r = hill_climb(t, Metric::d1(), c);
  CHECK(r.distance == 0);
  CHECK(r.status == SolveStatus::kHeuristicOnly);
}

TEST_CASE("never below the optimum on n = 5 grid points") {
  const Grid g(5, 100);
  std::mt19937_64 rng(21);
  SearchConfig c;
  c.restarts = 20;
  int equal = 0, total = 0;
  for (int i = 0; i < 200; ++i) {
    const TargetVector t = g.target(g.unrank(rng() % g.size()));
    for (const Metric& m : {Metric::d1(), Metric::dinf()}) {
      const auto h = hill_climb(t, m, c);
      const auto e = solve_by_enumeration(t, GameClass::kW, m);
      CHECK(h.distance >= e.distance);
      CHECK(distance(m, pbi(h.best_game), t.values()) == h.distance);
      CHECK(realize(*h.witness_weights) == h.best_game);
      equal += h.distance == e.distance;
      ++total;
    }
  }
  MESSAGE("hill climbing matched the optimum on " << equal << " of " << total);
}

TEST_CASE("never below bisection") {
  const Grid g(4, 100);
  std::mt19937_64 rng(4);
  for (int i = 0; i < 20; ++i) {
    const TargetVector t = g.target(g.unrank(rng() % g.size()));
    for (auto cls : {GameClass::kS, GameClass::kW}) {
      const auto b = bisection_solve(t, cls, Metric::d1());
      REQUIRE(b.status == SolveStatus::kProvedOptimal);
      CHECK(hill_climb(t, Metric::d1()).distance >= b.distance);
    }
  }
}

TEST_CASE("family target, n = 10") {
  const auto r = hill_climb(family_target(10), Metric::d1());
  CHECK(r.distance <= parse_rational("0.061042"));
}

TEST_CASE("climbs strictly improve and are reproducible") {
  const TargetVector t({Rational(37, 100), Rational(21, 100), Rational(17, 100), Rational(13, 100),
                        Rational(7, 100), Rational(5, 100)});
  SearchConfig c;
  c.restarts = 5;
  c.seed = 99;
  std::vector<std::vector<Rational>> traces;
  const auto a = hill_climb(t, Metric::d1(), c, &traces);
  CHECK(traces.size() == 5);
  for (const auto& tr : traces)
    for (std::size_t i = 1; i < tr.size(); ++i) CHECK(tr[i] < tr[i - 1]);
  const auto b = hill_climb(t, Metric::d1(), c);
  CHECK(a.distance == b.distance);
  CHECK(a.best_game == b.best_game);
  CHECK(a.witness_weights == b.witness_weights);
  CHECK(a.nodes == b.nodes);

  c.stop_at = Rational(1, 2);
  traces.clear();
  const auto early = hill_climb(t, Metric::d1(), c, &traces);
  CHECK(early.distance <= Rational(1, 2));
  CHECK(traces.size() == 1);
}

TEST_CASE("termination quantiles") {
  const auto q4 = termination_quantiles(4, MetricKind::kD1);
  CHECK(q4.median == parse_rational("0.16"));
  CHECK(q4.average == parse_rational("0.1622"));
  CHECK_FALSE(q4.sampled);
  const auto q11 = termination_quantiles(11, MetricKind::kD1);
  CHECK(q11.median == parse_rational("0.0064"));
  CHECK(q11.q01 == parse_rational("0.0031"));
  CHECK(q11.sampled);
  CHECK(termination_quantiles(2, MetricKind::kD1).q01 == 0);
  CHECK(termination_quantiles(5, MetricKind::kDInf).q05 == parse_rational("0.02"));
  CHECK_THROWS_AS(termination_quantiles(21, MetricKind::kD1), std::out_of_range);
  CHECK_THROWS_AS(termination_quantiles(5, MetricKind::kD1Weighted), std::out_of_range);
}
