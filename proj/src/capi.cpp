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


#include "invbzf/invbzf.h"

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <json.hpp>
#include <new>
#include <sstream>
#include <stdexcept>
#include <string>

#include "invbzf/analytic.hpp"
#include "invbzf/bounds.hpp"
#include "invbzf/enumerate.hpp"
#include "invbzf/grid.hpp"
#include "invbzf/heuristics.hpp"
#include "invbzf/io.hpp"
#include "invbzf/local_search.hpp"
#include "invbzf/reproduce.hpp"
#include "invbzf/solver.hpp"
#include "invbzf/stats.hpp"

struct invbzf_target {
  invbzf::TargetVector beta;
  std::optional<invbzf::PopulationVector> population;
};

namespace {

using namespace invbzf;

thread_local std::string last_error;

class StatusError : public std::runtime_error {
 public:
  StatusError(invbzf_status s, const std::string& what) : std::runtime_error(what), status(s) {}
  invbzf_status status;
};

template <class F>
invbzf_status guarded(F&& f) noexcept {
  try {
    last_error.clear();
    return f();
  } catch (const StatusError& e) {
    last_error = e.what();
    return e.status;
  } catch (const ResourceLimit& e) {
    last_error = e.what();
    return INVBZF_RESOURCE;
  } catch (const nlohmann::json::exception& e) {
    last_error = e.what();
    return INVBZF_INVALID;
  } catch (const std::invalid_argument& e) {
    last_error = e.what();
    return INVBZF_INVALID;
  } catch (const std::out_of_range& e) {
    last_error = e.what();
    return INVBZF_INVALID;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return INVBZF_RESOURCE;
  } catch (const std::exception& e) {
    last_error = e.what();
    return INVBZF_INTERNAL;
  } catch (...) {
    last_error = "unknown exception";
    return INVBZF_INTERNAL;
  }
}

void require(bool ok, const std::string& what) {
  if (!ok) throw StatusError(INVBZF_INVALID, what);
}

void give(const std::string& s, char** out) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  *out = p;
}

std::string str(const char* s, const char* fallback) { return s && *s ? s : fallback; }

Metric metric_for(const invbzf_target& t, const std::string& name) {
  if (name == "d1") return Metric::d1();
  if (name == "dinf") return Metric::dinf();
  if (name == "d1w") {
    require(t.population.has_value(), "metric d1w needs a target built from a population file");
    return Metric::d1_weighted(*t.population);
  }
  throw std::invalid_argument("unknown metric '" + name + "' (use d1, dinf or d1w)");
}

MetricKind plain_metric(const std::string& name) {
  if (name == "d1") return MetricKind::kD1;
  if (name == "dinf") return MetricKind::kDInf;
  throw std::invalid_argument("metric must be d1 or dinf, got '" + name + "'");
}

std::string decimal(const Rational& r, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, to_double(r));
  return buf;
}

}  // namespace

extern "C" {

const char* invbzf_version(void) { return INVBZF_VERSION; }

const char* invbzf_last_error(void) { return last_error.c_str(); }

const char* invbzf_status_name(invbzf_status s) {
  switch (s) {
    case INVBZF_OK: return "ok";
    case INVBZF_INVALID: return "invalid input";
    case INVBZF_BUDGET: return "budget exhausted";
    case INVBZF_RESOURCE: return "resource limit";
    case INVBZF_IO: return "i/o error";
    case INVBZF_MISMATCH: return "mismatch";
    case INVBZF_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void invbzf_string_free(char* s) { std::free(s); }

invbzf_status invbzf_target_parse(const char* text, invbzf_target** out) {
  return guarded([&] {
    require(text && out, "null argument");
    *out = new invbzf_target{parse_target(text), std::nullopt};
    return INVBZF_OK;
  });
}

invbzf_status invbzf_target_from_population(const char* csv_path, invbzf_target** out) {
  return guarded([&] {
    require(csv_path && out, "null argument");
    PopulationVector p;
    try {
      p = load_population_csv(csv_path);
    } catch (const std::invalid_argument&) {
      throw;
    } catch (const std::runtime_error& e) {
      throw StatusError(INVBZF_IO, e.what());
    }
    *out = new invbzf_target{sqrt_rule_target(p), p};
    return INVBZF_OK;
  });
}

void invbzf_target_free(invbzf_target* t) { delete t; }

int invbzf_target_size(const invbzf_target* t) { return t ? t->beta.size() : 0; }

invbzf_status invbzf_target_json(const invbzf_target* t, char** json) {
  return guarded([&] {
    require(t && json, "null argument");
    give(target_to_json(t->beta), json);
    return INVBZF_OK;
  });
}

void invbzf_solve_options_init(invbzf_solve_options* o) {
  *o = invbzf_solve_options{"W", "d1", "enum", 0, 1, 0};
}

invbzf_status invbzf_solve(const invbzf_target* t, const invbzf_solve_options* o, char** json) {
  return guarded([&] {
    require(t && o && json, "null argument");
    const GameClass cls = parse_game_class(str(o->game_class, "W"));
    const Metric metric = metric_for(*t, str(o->metric, "d1"));
    const std::string method = str(o->method, "enum");
    const SolveResult r = [&] {
      if (method == "enum") return solve_by_enumeration(t->beta, cls, metric);
      if (method == "bisect") {
        SearchLimits limits;
        if (o->budget) limits.max_nodes = o->budget;
        return bisection_solve(t->beta, cls, metric, limits);
      }
      if (method == "hill") {
        require(cls == GameClass::kW, "hill climbing searches weighted games; use class W");
        SearchConfig config;
        config.seed = o->seed;
        if (o->restarts > 0) config.restarts = o->restarts;
        if (o->budget) config.max_steps = o->budget;
        return hill_climb(t->beta, metric, config);
      }
      throw std::invalid_argument("unknown method '" + method + "' (use enum, bisect or hill)");
    }();
    give(solve_result_to_json(r, t->beta, cls, metric, method), json);
    return r.status == SolveStatus::kBracketed ? INVBZF_BUDGET : INVBZF_OK;
  });
}

invbzf_status invbzf_heuristics(const invbzf_target* t, char** csv) {
  return guarded([&] {
    require(t && csv, "null argument");
    std::vector<Metric> metrics{Metric::d1(), Metric::dinf()};
    if (t->population) metrics.push_back(Metric::d1_weighted(*t->population));
    std::ostringstream s;
    s << "rule,quota,integer_quota,weights,d1,dinf" << (t->population ? ",d1w" : "") << ",ambiguous\n";
    for (QuotaRule rule : {QuotaRule::kHalf, QuotaRule::kQStar, QuotaRule::kQBar}) {
      const HeuristicResult h = evaluate_heuristic(t->beta, rule, metrics, true);
      s << to_string(rule) << ',' << h.quota_value.str(12, std::ios_base::fixed) << ',';
      if (h.integer_game) {
        s << h.integer_game->quota() << ',';
        const auto& w = h.integer_game->weights();
        for (std::size_t i = 0; i < w.size(); ++i) s << (i ? " " : "") << w[i];
      } else {
        s << ',';
      }
      for (const Rational& d : h.distances) s << ',' << to_string(d);
      s << ',' << (h.ambiguous ? "yes" : "no") << '\n';
    }
    give(s.str(), csv);
    return INVBZF_OK;
  });
}

void invbzf_grid_options_init(invbzf_grid_options* o) {
  *o = invbzf_grid_options{4, "qstar", "d1", "W", 0, 1, 0, 0};
}

invbzf_status invbzf_grid_stats(const invbzf_grid_options* o, char** csv) {
  return guarded([&] {
    require(o && csv, "null argument");
    GridStatsRequest req;
    req.n = o->n;
    req.rule = parse_grid_rule(str(o->rule, "qstar"));
    req.metric = plain_metric(str(o->metric, "d1"));
    req.cls = parse_game_class(str(o->game_class, "W"));
    if (o->sample) req.sample = o->sample;
    req.seed = o->seed;
    req.threads = o->threads;
    require(o->n >= 2, "n must be at least 2");
    if (!o->allow_large) {
      if (!o->sample && o->n > 7)
        throw StatusError(INVBZF_RESOURCE, "the full grid is limited to n <= 7; pass a sample size");
      if (req.rule == GridRule::kOptimal && o->n > 5)
        throw StatusError(INVBZF_RESOURCE, "rule optimal is limited to n <= 5 without allow_large");
    }
    const Summary sum = grid_statistics(req);
    std::ostringstream s;
    s << "n,rule,metric,median,average,q10,q05,q01\n"
      << o->n << ',' << to_string(req.rule) << ',' << str(o->metric, "d1");
    for (const Rational* r : {&sum.median, &sum.average, &sum.q10, &sum.q05, &sum.q01}) s << ',' << decimal(*r);
    s << '\n';
    give(s.str(), csv);
    return INVBZF_OK;
  });
}

invbzf_status invbzf_grid_size(int n, int denominator, uint64_t* size) {
  return guarded([&] {
    require(size != nullptr, "null argument");
    *size = Grid(n, denominator).size();
    return INVBZF_OK;
  });
}

invbzf_status invbzf_enumerate_count(int n, const char* game_class, uint64_t* count) {
  return guarded([&] {
    require(count != nullptr, "null argument");
    require(n >= 1, "n must be positive");
    *count = class_catalog(n, parse_game_class(str(game_class, "W"))).size();
    return INVBZF_OK;
  });
}

invbzf_status invbzf_bounds(const invbzf_target* t, int k, const char* epsilon, int steps, char** csv) {
  return guarded([&] {
    require(t && csv, "null argument");
    std::vector<BoundRow> rows;
    if (epsilon && *epsilon)
      rows.push_back(lower_bound(t->beta, {k, parse_rational(epsilon)}));
    else
      rows = bound_sweep(t->beta, k, steps > 0 ? steps : 8);
    std::ostringstream s;
    s << "k,epsilon,l1,l2,bound\n";
    for (const auto& r : rows)
      s << r.k << ',' << to_string(r.epsilon) << ',' << to_string(r.l1) << ',' << to_string(r.l2) << ','
        << to_string(r.bound) << '\n';
    give(s.str(), csv);
    return INVBZF_OK;
  });
}

invbzf_status invbzf_analytic_table(const char* metric, int n_from, int n_to, int exact_max_n, char** csv) {
  return guarded([&] {
    require(csv != nullptr, "null argument");
    require(2 <= n_from && n_from <= n_to, "need 2 <= n_from <= n_to");
    const MetricKind kind = plain_metric(str(metric, "d1"));
    const Metric m = kind == MetricKind::kD1 ? Metric::d1() : Metric::dinf();
    std::ostringstream s;
    s << "n,S,C,W,heuristic,heuristic_exact,closed_form,closed_form_exact,C_error\n";
    for (int n = n_from; n <= n_to; ++n) {
      const TargetVector beta = family_target(n);
      std::optional<Rational> complete;
      s << n;
      for (GameClass cls : {GameClass::kS, GameClass::kC, GameClass::kW}) {
        s << ',';
        if (n > exact_max_n || n > enumeration_limit(cls)) continue;
        const Rational d = solve_by_enumeration(beta, cls, m).distance;
        if (cls == GameClass::kC) complete = d;
        s << decimal(d);
      }
      const Rational h = family_heuristic_distance(n, kind);
      s << ',' << decimal(h) << ',' << to_string(h) << ',';
      // weighted upper bound from the (3,2,...,2,1) games
      if (n >= 8) {
        const Rational c = kind == MetricKind::kD1 ? family_d1_deviation(n).d1 : b_bound(n);
        s << decimal(c) << ',' << to_string(c);
      } else {
        s << ',';
      }
      s << ',';
      if (complete) s << decimal(*complete == 0 ? Rational(0) : Rational((h - *complete) / *complete));
      s << '\n';
    }
    give(s.str(), csv);
    return INVBZF_OK;
  });
}

invbzf_status invbzf_game_power(const char* game_json, char** json) {
  return guarded([&] {
    require(game_json && json, "null argument");
    const ParsedGame g = parse_game(game_json);
    const SwingProfile sw = swings(g.game);
    nlohmann::ordered_json j;
    j["n"] = g.game.players();
    j["swings"] = sw.per_player;
    j["total_swings"] = sw.total;
    auto& p = j["pbi"] = nlohmann::ordered_json::array();
    for (const Rational& r : pbi(sw)) p.push_back(to_string(r));
    j["complete"] = is_complete(g.game);
    j["weighted"] = g.weights.has_value() || weighted_representation(g.game).has_value();
    give(j.dump(2) + "\n", json);
    return INVBZF_OK;
  });
}

invbzf_status invbzf_export_lp(const invbzf_target* t, const char* game_class, const char* metric,
                               const char* alpha, int strict, char** lp) {
  return guarded([&] {
    require(t && alpha && lp, "null argument");
    FeasibilityProblem p{t->beta, parse_game_class(str(game_class, "S")), metric_for(*t, str(metric, "d1")),
                         parse_rational(alpha), strict != 0};
    std::ostringstream s;
    export_ilp(p, s);
    give(s.str(), lp);
    return INVBZF_OK;
  });
}

void invbzf_reproduce_options_init(invbzf_reproduce_options* o) {
  const ReproduceOptions d;
  *o = invbzf_reproduce_options{d.max_stats_n, d.max_count_n, nullptr, 0};
}

invbzf_status invbzf_reproduce(const char* table, const invbzf_reproduce_options* o, char** csv) {
  return guarded([&] {
    require(table && o && csv, "null argument");
    ReproduceOptions opts;
    opts.max_stats_n = o->max_stats_n;
    opts.max_count_n = o->max_count_n;
    opts.data_dir = str(o->data_dir, "");
    opts.threads = o->threads;
    const auto cells = reproduce_table(table, opts);
    give(cells_to_csv(cells), csv);
    return any_failed(cells) ? INVBZF_MISMATCH : INVBZF_OK;
  });
}

}  // extern "C"
