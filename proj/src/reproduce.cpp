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


#include "invbzf/reproduce.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <sstream>
#include <stdexcept>

#include "invbzf/analytic.hpp"
#include "invbzf/grid.hpp"
#include "invbzf/heuristics.hpp"
#include "invbzf/reference.hpp"
#include "invbzf/solver.hpp"
#include "invbzf/stats.hpp"

namespace invbzf {

namespace {

int decimals(const std::string& printed) {
  const auto dot = printed.find('.');
  return dot == std::string::npos ? 0 : static_cast<int>(printed.size() - dot - 1);
}

std::string format(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

Cell compare(const std::string& table, int n, const std::string& column, const std::string& expected,
             double actual, double tolerance) {
  Cell c{table, n, column, expected, format(actual, decimals(expected) + 2), tolerance, CellStatus::kPass, ""};
  if (!(std::abs(actual - std::stod(expected)) <= tolerance + 1e-12)) c.status = CellStatus::kFail;
  return c;
}

Cell compare_count(const std::string& table, int n, const std::string& column, std::uint64_t expected,
                   std::uint64_t actual) {
  return {table, n, column, std::to_string(expected), std::to_string(actual), 0,
          expected == actual ? CellStatus::kPass : CellStatus::kFail, ""};
}

Cell skipped(const std::string& table, int n, const std::string& column, const std::string& expected,
             const std::string& why) {
  return {table, n, column, expected, "", 0, CellStatus::kSkipped, why};
}

const char* kStatNames[5] = {"median", "average", "q10", "q05", "q01"};

void counts_table(const ReproduceOptions& o, std::vector<Cell>& out) {
  for (const auto& row : reference::class_counts()) {
    const std::pair<GameClass, std::uint64_t> cols[] = {
        {GameClass::kS, row.simple}, {GameClass::kC, row.complete}, {GameClass::kW, row.weighted}};
    for (const auto& [cls, expected] : cols) {
      const std::string col = "#" + to_string(cls);
      if (expected == 0) continue;
      if (row.n > enumeration_limit(cls) || row.n > o.max_count_n) {
        out.push_back(skipped("1", row.n, col, std::to_string(expected), "beyond the enumeration budget"));
        continue;
      }
      out.push_back(compare_count("1", row.n, col, expected, class_catalog(row.n, cls).size()));
    }
  }
}

void stats_table(const std::string& id, GridRule rule, const ReproduceOptions& o, std::vector<Cell>& out) {
  for (const auto& row : reference::grid_stats(rule)) {
    if (row.grid_points != 0)
      out.push_back(compare_count(id, row.n, "grid_points", row.grid_points, Grid(row.n, 100).size()));
    const bool optimal = rule == GridRule::kOptimal;
    const char* why = row.sampled                                               ? "sampled row"
                      : row.n > o.max_stats_n                                   ? "above --max-n"
                      : optimal && row.n > enumeration_limit(GameClass::kW) ? "beyond the enumeration budget"
                                                                                : nullptr;
    for (MetricKind m : {MetricKind::kD1, MetricKind::kDInf}) {
      const auto& printed = m == MetricKind::kD1 ? row.d1 : row.dinf;
      const std::string prefix = m == MetricKind::kD1 ? "d1." : "dinf.";
      if (why) {
        for (int c = 0; c < 5; ++c) out.push_back(skipped(id, row.n, prefix + kStatNames[c], printed[c], why));
        continue;
      }
      GridStatsRequest req;
      req.n = row.n;
      req.rule = rule;
      req.metric = m;
      req.threads = o.threads;
      const Summary s = grid_statistics(req);
      const Rational got[5] = {s.median, s.average, s.q10, s.q05, s.q01};
      for (int c = 0; c < 5; ++c)
        out.push_back(compare(id, row.n, prefix + kStatNames[c], printed[c], to_double(got[c]),
                              reference::kStatsTolerance));
    }
  }
}

void family_table(const std::string& id, MetricKind kind, std::vector<Cell>& out) {
  const Metric metric = kind == MetricKind::kD1 ? Metric::d1() : Metric::dinf();
  for (const auto& row : reference::family_table(kind)) {
    const TargetVector beta = family_target(row.n);
    std::optional<Rational> complete;
    const std::pair<GameClass, const char*> cols[] = {
        {GameClass::kS, row.simple}, {GameClass::kC, row.complete}, {GameClass::kW, row.weighted}};
    for (const auto& [cls, printed] : cols) {
      if (*printed == '\0') continue;
      const std::string col = to_string(cls);
      if (row.n > enumeration_limit(cls)) {
        out.push_back(skipped(id, row.n, col, printed, "beyond the enumeration budget"));
        continue;
      }
      const Rational d = solve_by_enumeration(beta, cls, metric).distance;
      if (cls == GameClass::kC) complete = d;
      out.push_back(compare(id, row.n, col, printed, to_double(d), reference::cell_tolerance(printed)));
    }
    const Rational h = family_heuristic_distance(row.n, kind);
    out.push_back(
        compare(id, row.n, "heuristic", row.heuristic, to_double(h), reference::cell_tolerance(row.heuristic)));
    if (!complete) {
      out.push_back(skipped(id, row.n, "C-error", row.c_error, "needs the C optimum"));
    } else {
      const Rational err = *complete == 0 ? Rational(0) : Rational((h - *complete) / *complete);
      out.push_back(compare(id, row.n, "C-error", row.c_error, to_double(err), reference::cell_tolerance(row.c_error)));
    }
  }
}

const std::pair<int, const char*> kCouncilYears[] = {{6, "1958"},  {9, "1973"},  {10, "1981"}, {12, "1986"},
                                                     {15, "1995"}, {25, "2004"}, {27, "2007"}};

void council_table(const ReproduceOptions& o, std::vector<Cell>& out) {
  for (const auto& row : reference::council_d1()) {
    std::string file;
    for (const auto& [n, year] : kCouncilYears)
      if (n == row.n) file = std::string("eu") + year + ".csv";
    const std::pair<const char*, const char*> cols[] = {{"S", row.simple}, {"C", row.complete},
                                                        {"W", row.weighted}, {"half", row.half},
                                                        {"qstar", row.qstar}, {"qbar", row.qbar}};
    const std::filesystem::path path = std::filesystem::path(o.data_dir) / file;
    if (o.data_dir.empty() || !std::filesystem::exists(path)) {
      for (const auto& [col, printed] : cols)
        out.push_back(skipped("2", row.n, col, printed, "population file " + file + " not present"));
      continue;
    }
    const PopulationVector pop = load_population_csv(path.string());
    if (pop.size() != row.n) throw std::invalid_argument(file + " does not have " + std::to_string(row.n) + " rows");
    const TargetVector beta = sqrt_rule_target(pop);
    const Metric d1 = Metric::d1();
    // the target is within error_bound of the real one per entry
    const double slack = to_double(beta.error_bound()) * 2 * row.n;
    for (const auto& [col, printed] : cols) {
      const double tol = reference::cell_tolerance(printed) + slack;
      const std::string c = col;
      if (c == "S" || c == "C" || c == "W") {
        const GameClass cls = parse_game_class(c);
        if (row.n > enumeration_limit(cls)) {
          out.push_back(skipped("2", row.n, c, printed, "beyond the enumeration budget"));
          continue;
        }
        out.push_back(compare("2", row.n, c, printed, to_double(solve_by_enumeration(beta, cls, d1).distance), tol));
      } else {
        const std::vector<Metric> ms{d1};
        const auto h = evaluate_heuristic(beta, parse_quota_rule(c), ms, true);
        out.push_back(compare("2", row.n, c, printed, to_double(h.distances[0]), tol));
      }
    }
  }
}

}  // namespace

std::string to_string(CellStatus s) {
  switch (s) {
    case CellStatus::kPass: return "pass";
    case CellStatus::kFail: return "FAIL";
    case CellStatus::kSkipped: return "skipped";
  }
  return "?";
}

const std::vector<std::string>& reproducible_tables() {
  static const std::vector<std::string> ids{"1", "2", "3", "4", "5", "6", "7", "opt"};
  return ids;
}

std::vector<Cell> reproduce_table(const std::string& table, const ReproduceOptions& options) {
  std::vector<Cell> out;
  if (table == "1") counts_table(options, out);
  else if (table == "2") council_table(options, out);
  else if (table == "3") stats_table(table, GridRule::kHalf, options, out);
  else if (table == "4") stats_table(table, GridRule::kQStar, options, out);
  else if (table == "5") stats_table(table, GridRule::kQBar, options, out);
  else if (table == "opt") stats_table(table, GridRule::kOptimal, options, out);
  else if (table == "6") family_table(table, MetricKind::kD1, out);
  else if (table == "7") family_table(table, MetricKind::kDInf, out);
  else throw std::invalid_argument("unknown table '" + table + "' (use 1-7 or opt)");
  return out;
}

std::string cells_to_csv(const std::vector<Cell>& cells) {
  std::ostringstream s;
  s << "table,n,column,expected,actual,tolerance,status,note\n";
  for (const auto& c : cells)
    s << c.table << ',' << c.n << ',' << c.column << ',' << c.expected << ',' << c.actual << ','
      << (c.status == CellStatus::kSkipped ? std::string() : format(c.tolerance, 7)) << ',' << to_string(c.status)
      << ',' << c.note << '\n';
  return s.str();
}

bool any_failed(const std::vector<Cell>& cells) {
  for (const auto& c : cells)
    if (c.status == CellStatus::kFail) return true;
  return false;
}

}  // namespace invbzf
