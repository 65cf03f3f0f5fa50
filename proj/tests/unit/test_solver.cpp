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
#include <set>
#include <sstream>

#include "invbzf/grid.hpp"
#include "invbzf/heuristics.hpp"
#include "invbzf/solver.hpp"

using namespace invbzf;

namespace {

TargetVector tv(std::initializer_list<const char*> xs) {
  std::vector<Rational> v;
  for (const char* x : xs) v.push_back(parse_rational(x));
  return TargetVector(v);
}

int count_lines_starting(const std::string& text, const std::string& prefix) {
  std::istringstream in(text);
  std::string line;
  int c = 0;
  while (std::getline(in, line))
    if (line.rfind(prefix, 0) == 0) ++c;
  return c;
}

}  // namespace

TEST_CASE("epsilon floor") {
  CHECK(epsilon_floor(3) == Rational(1, 576));
  CHECK(epsilon_floor(1) == Rational(1, 4));
  CHECK_THROWS(epsilon_floor(0));
}

TEST_CASE("distinct 4-player PBI vectors are at least epsilon apart") {
  std::set<PowerVector> vectors;
  std::vector<int> perm(4);
  for (const auto& e : class_catalog(4, GameClass::kS)) {
    std::iota(perm.begin(), perm.end(), 0);
    do vectors.insert(pbi(relabel(e.game, perm)));
    while (std::next_permutation(perm.begin(), perm.end()));
  }
  const Rational eps = epsilon_floor(4);
  Rational min1 = 10, mininf = 10;
  for (auto a = vectors.begin(); a != vectors.end(); ++a)
    for (auto b = std::next(a); b != vectors.end(); ++b) {
      min1 = std::min(min1, distance(Metric::d1(), *a, *b));
      mininf = std::min(mininf, distance(Metric::dinf(), *a, *b));
    }
  CHECK(min1 >= eps);
  CHECK(mininf >= eps);
}

TEST_CASE("enumeration solve examples") {
  auto r = solve_by_enumeration(tv({"3/5", "1/5", "1/5"}), GameClass::kW, Metric::d1());
  CHECK(r.distance == 0);
  CHECK(r.status == SolveStatus::kProvedOptimal);
  REQUIRE(r.witness_weights);
  CHECK(realize(*r.witness_weights) == r.best_game);
  // [2;2,1,1] and its dual [3;2,1,1] both hit the target
  CHECK(pbi(r.best_game) == tv({"3/5", "1/5", "1/5"}).values());
  CHECK(pbi(realize(WeightedGame(2, {2, 1, 1}))) == pbi(r.best_game));

  for (GameClass c : {GameClass::kS, GameClass::kC, GameClass::kW})
    CHECK(solve_by_enumeration(tv({"3/4", "1/4"}), c, Metric::d1()).distance == Rational(1, 2));

  auto six = solve_by_enumeration(tv({"2/11", "2/11", "2/11", "2/11", "2/11", "1/11"}), GameClass::kS, Metric::d1());
  CHECK(six.distance == 0);
}

TEST_CASE("reported distance is the exact distance of the reported game") {
  const Grid g(4, 10);
  for (std::uint64_t i = 0; i < g.size(); i += 37) {
    const TargetVector b = g.target(g.unrank(i));
    for (GameClass c : {GameClass::kS, GameClass::kC, GameClass::kW})
      for (const Metric& m : {Metric::d1(), Metric::dinf()}) {
        const auto r = solve_by_enumeration(b, c, m);
        CHECK(r.distance == distance(m, pbi(r.best_game), b.values()));
        if (c != GameClass::kS) CHECK(is_complete(r.best_game));
        if (c == GameClass::kW) {
          REQUIRE(r.witness_weights);
          CHECK(realize(*r.witness_weights) == r.best_game);
        }
      }
  }
}

TEST_CASE("feasibility examples") {
  FeasibilityProblem p{tv({"1/3", "1/3", "1/3"}), GameClass::kS, Metric::d1(), 0};
  auto f = feasible(p);
  CHECK(f.status == Feasibility::kFeasible);
  REQUIRE(f.game);
  CHECK(*f.game == realize(WeightedGame(2, {1, 1, 1})));

  FeasibilityProblem q{tv({"3/4", "1/4"}), GameClass::kS, Metric::d1(), Rational(2, 5)};
  CHECK(feasible(q).status == Feasibility::kInfeasible);
  q.alpha = Rational(1, 2);
  CHECK(feasible(q).status == Feasibility::kFeasible);
  q.strict = true;
  CHECK(feasible(q).status == Feasibility::kInfeasible);
}

TEST_CASE("zero node budget gives unknown") {
  // feasible (uniform target, [3;1,1,1,1,1]) but needs a full root-to-leaf path
  FeasibilityProblem p{tv({"1/5", "1/5", "1/5", "1/5", "1/5"}), GameClass::kS, Metric::d1(), 0};
  SearchLimits lim;
  lim.max_nodes = 3;
  CHECK(feasible(p, lim).status == Feasibility::kUnknown);
  auto r = bisection_solve(tv({"2/5", "1/5", "1/5", "1/10", "1/10"}), GameClass::kS, Metric::d1(), lim);
  CHECK(r.status == SolveStatus::kBracketed);
  CHECK(r.lower <= r.distance);
  CHECK(r.distance <= r.upper);
}

TEST_CASE("feasible at every heuristic distance") {
  const Grid g(4, 10);
  const Metric metrics[] = {Metric::d1(), Metric::dinf()};
  for (std::uint64_t i = 0; i < g.size(); i += 19) {
    const TargetVector b = g.target(g.unrank(i));
    for (QuotaRule rule : {QuotaRule::kHalf, QuotaRule::kQStar, QuotaRule::kQBar}) {
      const auto h = evaluate_heuristic(b, rule, metrics, true);
      for (int k = 0; k < 2; ++k)
        for (GameClass c : {GameClass::kS, GameClass::kC, GameClass::kW}) {
          auto f = feasible({b, c, metrics[k], h.distances[k]});
          CHECK(f.status == Feasibility::kFeasible);
          CHECK(f.distance <= h.distances[k]);
        }
    }
  }
}

TEST_CASE("bisection equals enumeration") {
  for (int n = 2; n <= 4; ++n) {
    const Grid g(n, n == 4 ? 20 : 50);
    const auto idx = g.sample_indices(15, 7 + n);
    for (auto i : idx) {
      const TargetVector b = g.target(g.unrank(i));
      for (GameClass c : {GameClass::kS, GameClass::kC, GameClass::kW})
        for (const Metric& m : {Metric::d1(), Metric::dinf()}) {
          const auto e = solve_by_enumeration(b, c, m);
          const auto r = bisection_solve(b, c, m);
          CHECK(r.status == SolveStatus::kProvedOptimal);
          CHECK(r.distance == e.distance);
          CHECK(r.distance == distance(m, pbi(r.best_game), b.values()));
          if (c != GameClass::kS) CHECK(is_complete(r.best_game));
          if (c == GameClass::kW) {
            REQUIRE(r.witness_weights);
            CHECK(realize(*r.witness_weights) == r.best_game);
          }
        }
    }
  }
}

TEST_CASE("weighted metric: bisection equals enumeration") {
  PopulationVector p{{"a", "b", "c", "d"}, {9, 4, 4, 1}};
  const Metric m = Metric::d1_weighted(p, 30);
  const Grid g(4, 10);
  for (auto i : g.sample_indices(6, 3)) {
    const TargetVector b = g.target(g.unrank(i));
    for (GameClass c : {GameClass::kS, GameClass::kC, GameClass::kW})
      CHECK(bisection_solve(b, c, m).distance == solve_by_enumeration(b, c, m).distance);
  }
}

TEST_CASE("bisection on exact hits") {
  auto r = bisection_solve(tv({"1/3", "1/3", "1/3"}), GameClass::kW, Metric::d1());
  CHECK(r.distance == 0);
  CHECK(r.status == SolveStatus::kProvedOptimal);
}

TEST_CASE("LP export structure") {
  std::ostringstream out;
  export_ilp({tv({"1/2", "3/10", "1/5"}), GameClass::kS, Metric::d1(), Rational(1, 10)}, out);
  const std::string lp = out.str();
  std::istringstream in(lp);
  std::string line, section;
  int x = 0, y = 0;
  while (std::getline(in, line)) {
    if (line == "Binaries" || line == "Bounds" || line == "Subject To" || line == "End") section = line;
    else if (section == "Binaries") (line.rfind(" x_", 0) == 0 ? x : y) += 1;
  }
  CHECK(x == 8);
  CHECK(y == 12);
  CHECK(count_lines_starting(lp, " alpha:") == 1);
  CHECK(lp.find("Bounds\n x_0 = 0\n x_7 = 1\n") != std::string::npos);
  CHECK(count_lines_starting(lp, " lose_") == 0);
  // 10 (a_den) times the deviations against 1 * D = 10 swings
  CHECK(lp.find(" alpha: 10 d_1 + 10 d_2 + 10 d_3 - 10 s <= 0") != std::string::npos);

  std::ostringstream w;
  export_ilp({tv({"1/2", "3/10", "1/5"}), GameClass::kW, Metric::dinf(), Rational(1, 10)}, w);
  CHECK(count_lines_starting(w.str(), " lose_") == 8);
  CHECK(count_lines_starting(w.str(), " win_") == 8);
  CHECK(count_lines_starting(w.str(), " alpha:") == 1);
  CHECK(count_lines_starting(w.str(), " desir_") == 2 * 2);

  CHECK_THROWS(export_ilp({tv({"1/2", "1/2"}), GameClass::kS,
                           Metric::d1_weighted(PopulationVector{{"a", "b"}, {1, 1}}), 0},
                          out));
}

TEST_CASE("two strong players and null targets") {
  for (int n = 3; n <= 8; ++n) {
    std::vector<Rational> b(n, 0);
    b[0] = Rational(3, 4);
    b[1] = Rational(1, 4);
    const TargetVector t(b);
    auto f = feasible({t, GameClass::kS, Metric::d1(), Rational(14, 37), true});
    CHECK(f.status == Feasibility::kInfeasible);
    if (n <= 6) {
      // the bound is tight here: the optimum 15/38 (2/5 below n = 5) is found
      const Rational opt = n <= 4 ? Rational(2, 5) : Rational(15, 38);
      CHECK(solve_by_enumeration(t, GameClass::kS, Metric::d1()).distance == opt);
      CHECK(feasible({t, GameClass::kS, Metric::d1(), opt, true}).status == Feasibility::kInfeasible);
      auto g = feasible({t, GameClass::kS, Metric::d1(), opt});
      CHECK(g.status == Feasibility::kFeasible);
      CHECK(g.distance == opt);
      CHECK(bisection_solve(t, GameClass::kS, Metric::d1()).distance == opt);
    }
  }
}
