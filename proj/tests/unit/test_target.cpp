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

#include <cmath>
#include <functional>
#include <map>
#include <random>

#include "invbzf/grid.hpp"
#include "invbzf/target.hpp"

using namespace invbzf;

namespace {

std::vector<Rational> rv(std::initializer_list<Rational> xs) { return std::vector<Rational>(xs); }

// Independent counter: nested loops over non-increasing numerators.
std::uint64_t brute_grid_count(int n, int d) {
  std::function<std::uint64_t(int, int, int)> rec = [&](int pos, int rest, int cap) -> std::uint64_t {
    if (pos == n - 1) return rest <= cap ? 1 : 0;
    std::uint64_t c = 0;
    for (int a = 0; a <= std::min(cap, rest); ++a) c += rec(pos + 1, rest - a, a);
    return c;
  };
  return rec(0, d, d);
}

std::vector<Rational> random_simplex_point(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> d(0, 30);
  std::vector<int> k(n);
  int sum = 0;
  while (sum == 0) {
    sum = 0;
    for (auto& x : k) sum += (x = d(rng));
  }
  std::vector<Rational> out;
  for (int x : k) out.emplace_back(x, sum);
  for (auto& r : out) r.canonicalize();
  return out;
}

}  // namespace

TEST_CASE("target vector validation") {
  CHECK_NOTHROW(TargetVector(rv({Rational(1, 2), Rational(1, 2)})));
  CHECK_THROWS(TargetVector(rv({Rational(1, 2), Rational(1, 3)})));
  CHECK_THROWS(TargetVector(rv({Rational(3, 2), Rational(-1, 2)})));
  CHECK_THROWS(TargetVector(std::vector<Rational>{}));
  CHECK_FALSE(TargetVector::unnormalized(rv({Rational(3, 4), Rational(1, 4), Rational(1, 4)})).normalized());
}

TEST_CASE("distances") {
  Metric d1 = Metric::d1();
  CHECK(distance(d1, rv({1, 0}), rv({0, 1})) == 2);
  CHECK(distance(d1, rv({Rational(3, 5), Rational(1, 5), Rational(1, 5)}),
                 rv({Rational(1, 3), Rational(1, 3), Rational(1, 3)})) == Rational(8, 15));
  CHECK(distance(Metric::dinf(), rv({Rational(3, 5), Rational(1, 5), Rational(1, 5)}),
                 rv({Rational(1, 3), Rational(1, 3), Rational(1, 3)})) == Rational(4, 15));
  CHECK_THROWS(distance(d1, rv({1, 0}), rv({1})));

  // uniform populations: d1w = d1 / sqrt(n)
  for (int n : {2, 3, 4, 7}) {
    PopulationVector p;
    for (int i = 0; i < n; ++i) {
      p.names.push_back("c" + std::to_string(i));
      p.populations.push_back(1000);
    }
    Metric w = Metric::d1_weighted(p);
    std::mt19937_64 rng(n);
    auto x = random_simplex_point(rng, n);
    auto y = random_simplex_point(rng, n);
    Rational dw = distance(w, x, y);
    Rational plain = distance(d1, x, y);
    // dw <= d1/sqrt(n) < dw + err * d1
    const double expect = to_double(plain) / std::sqrt(static_cast<double>(n));
    CHECK(std::abs(to_double(dw) - expect) < 1e-14);
    Real exact = to_real(plain) / boost::multiprecision::sqrt(Real(n));
    CHECK(to_real(dw) <= exact);
    CHECK(exact < to_real(dw + w.weight_error() * plain));
  }
}

TEST_CASE("metric axioms on random triples") {
  std::mt19937_64 rng(99);
  PopulationVector pop{{"a", "b", "c", "d", "e"}, {5, 17, 2, 300, 41}};
  std::vector<Metric> metrics = {Metric::d1(), Metric::dinf(), Metric::d1_weighted(pop)};
  for (int trial = 0; trial < 300; ++trial) {
    auto x = random_simplex_point(rng, 5);
    auto y = random_simplex_point(rng, 5);
    auto z = random_simplex_point(rng, 5);
    for (const auto& m : metrics) {
      CHECK(distance(m, x, y) == distance(m, y, x));
      CHECK(distance(m, x, x) == 0);
      CHECK((x == y) == (distance(m, x, y) == 0));
      CHECK(distance(m, x, z) <= distance(m, x, y) + distance(m, y, z));
    }
    Rational a = distance(metrics[1], x, y), b = distance(metrics[0], x, y);
    CHECK(a <= b);
    CHECK(b <= 5 * a);
  }
}

TEST_CASE("square-root rule targets") {
  PopulationVector p{{"A", "B"}, {4, 1}};
  TargetVector t = sqrt_rule_target(p);
  CHECK(t.values() == rv({Rational(2, 3), Rational(1, 3)}));
  CHECK(t.error_bound() == 0);

  PopulationVector eq{{"A", "B", "C"}, {7, 7, 7}};
  CHECK(sqrt_rule_target(eq).values() == rv({Rational(1, 3), Rational(1, 3), Rational(1, 3)}));

  PopulationVector two{{"A", "B"}, {2, 1}};
  TargetVector s = sqrt_rule_target(two, 50);
  Real r2 = boost::multiprecision::sqrt(Real(2));
  Real e0 = r2 / (1 + r2), e1 = 1 / (1 + r2);
  CHECK(abs(to_real(s[0]) - e0) <= to_real(s.error_bound()));
  CHECK(abs(to_real(s[1]) - e1) <= to_real(s.error_bound()));
  CHECK(abs(to_double(s[0]) - 0.585786) < 1e-6);
  CHECK(abs(to_double(s[1]) - 0.414214) < 1e-6);
  CHECK(s[0] + s[1] == 1);
}

TEST_CASE("population CSV parsing") {
  PopulationVector p = parse_population_csv("name,population\nA,4\nB,1\n");
  CHECK(p.names == std::vector<std::string>{"A", "B"});
  CHECK(p.populations == std::vector<std::int64_t>{4, 1});
  CHECK_THROWS(parse_population_csv("name,population\n"));
  CHECK_THROWS(parse_population_csv(""));
  CHECK_THROWS(parse_population_csv("name,population\nA,0\n"));
  CHECK_THROWS(parse_population_csv("name,population\nA,-3\n"));
  CHECK_THROWS(parse_population_csv("name,population\nA,3\nA,4\n"));
  CHECK_THROWS(parse_population_csv("name,population\nA,3,4\n"));
  CHECK_THROWS(parse_population_csv("country,pop\nA,3\n"));
  CHECK_THROWS(load_population_csv("/nonexistent/file.csv"));
}

TEST_CASE("grid cardinalities") {
  const std::uint64_t expected[] = {0, 0, 51, 884, 8037, 46262, 189509, 596763};
  for (int n = 2; n <= 7; ++n) CHECK(Grid(n, 100).size() == expected[n]);
  for (int n = 1; n <= 4; ++n)
    for (int d : {1, 4, 10, 37, 100}) CHECK(Grid(n, d).size() == brute_grid_count(n, d));
}

TEST_CASE("the quarter-step grid for three players") {
  Grid g(3, 4);
  REQUIRE(g.size() == 4);
  CHECK(g.unrank(0) == std::vector<int>{2, 1, 1});
  CHECK(g.unrank(1) == std::vector<int>{2, 2, 0});
  CHECK(g.unrank(2) == std::vector<int>{3, 1, 0});
  CHECK(g.unrank(3) == std::vector<int>{4, 0, 0});
  CHECK(g.target(g.unrank(0)).values() == rv({Rational(1, 2), Rational(1, 4), Rational(1, 4)}));
  CHECK(Grid::from_step(3, Rational(1, 4)).size() == 4);
  CHECK_THROWS(Grid::from_step(3, Rational(2, 7)));
}

TEST_CASE("grid stream is ordered, valid, and consistent with rank/unrank") {
  for (int n = 2; n <= 5; ++n) {
    Grid g(n, 100);
    std::vector<int> prev;
    std::uint64_t seen = 0;
    g.for_each(0, g.size(), [&](std::uint64_t i, const std::vector<int>& p) {
      ++seen;
      int sum = 0;
      for (int j = 0; j < n; ++j) {
        sum += p[j];
        if (j > 0) CHECK(p[j] <= p[j - 1]);
        CHECK(p[j] >= 0);
      }
      CHECK(sum == 100);
      if (!prev.empty()) CHECK(prev < p);
      if (i % 997 == 0) {
        CHECK(g.unrank(i) == p);
        CHECK(g.rank(p) == i);
      }
      prev = p;
    });
    CHECK(seen == g.size());
  }
}

TEST_CASE("grid sampling") {
  Grid g2(2, 100);
  auto a = g2.sample_indices(510, 42);
  CHECK(a == g2.sample_indices(510, 42));
  std::map<std::uint64_t, int> freq;
  for (auto i : a) ++freq[i];
  // chi-square with 50 degrees of freedom; 99.9% quantile is about 86.7
  double chi = 0;
  for (std::uint64_t i = 0; i < g2.size(); ++i) {
    const double o = freq.count(i) ? freq[i] : 0;
    chi += (o - 10.0) * (o - 10.0) / 10.0;
  }
  CHECK(chi < 86.7);

  Grid g15(15, 100);
  for (auto i : g15.sample_indices(10000, 7)) {
    TargetVector t = g15.target(g15.unrank(i));
    for (int j = 1; j < 15; ++j) CHECK(t[j] <= t[j - 1]);
  }
}

TEST_CASE("sampled grid sizes for larger n") {
  const std::uint64_t expected[] = {1527675, 3314203, 6292069, 10718685, 16713148, 24234058, 33097743,
                                    43018955, 53662038, 64684584, 75772412, 86658411, 97132873};
  for (int n = 8; n <= 20; ++n) CHECK(Grid(n, 100).size() == expected[n - 8]);
}
