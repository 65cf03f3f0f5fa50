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


// invbzf command-line front end. Talks to the library only through invbzf.h.

#include <openssl/evp.h>

#include <CLI11.hpp>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "invbzf/invbzf.h"

namespace {

using Json = nlohmann::ordered_json;

enum Exit : int {
  kOk = 0,
  kInternal = 1,
  kInvalid = 2,
  kBudget = 3,
  kResource = 4,
  kMismatch = 5,
  kIo = 6,
};

int exit_code(invbzf_status s) {
  switch (s) {
    case INVBZF_OK: return kOk;
    case INVBZF_INVALID: return kInvalid;
    case INVBZF_BUDGET: return kBudget;
    case INVBZF_RESOURCE: return kResource;
    case INVBZF_IO: return kIo;
    case INVBZF_MISMATCH: return kMismatch;
    case INVBZF_INTERNAL: return kInternal;
  }
  return kInternal;
}

struct Failure {
  int code;
  std::string message;
};

struct CString {
  char* p = nullptr;
  ~CString() { invbzf_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

struct TargetDeleter {
  void operator()(invbzf_target* t) const { invbzf_target_free(t); }
};
using Target = std::unique_ptr<invbzf_target, TargetDeleter>;

// Statuses that still come with an output (budget, mismatch) are returned;
// everything else throws.
invbzf_status check(invbzf_status s) {
  if (s == INVBZF_OK || s == INVBZF_BUDGET || s == INVBZF_MISMATCH) return s;
  throw Failure{exit_code(s), invbzf_last_error()};
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Failure{kIo, "cannot open '" + path + "'"};
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f || !f.write(bytes.data(), static_cast<std::streamsize>(bytes.size())))
    throw Failure{kIo, "cannot write '" + path + "'"};
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (!EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr))
    throw Failure{kInternal, "sha256 failed"};
  std::string hex;
  char buf[3];
  for (unsigned i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", md[i]);
    hex += buf;
  }
  return hex;
}

struct TargetInput {
  std::string beta, beta_file, population;

  void add_to(CLI::App* cmd) {
    auto* b = cmd->add_option("--beta", beta, "target as a list, e.g. \"1/2,1/4,1/4\"");
    auto* f = cmd->add_option("--beta-file", beta_file, "target JSON file {\"beta\": [...]}");
    auto* p = cmd->add_option("--population", population, "name,population CSV; square-root rule target");
    b->excludes(f)->excludes(p);
    f->excludes(p);
  }

  Target load() const {
    invbzf_target* t = nullptr;
    if (!population.empty())
      check(invbzf_target_from_population(population.c_str(), &t));
    else if (!beta_file.empty())
      check(invbzf_target_parse(read_file(beta_file).c_str(), &t));
    else if (!beta.empty())
      check(invbzf_target_parse(beta.c_str(), &t));
    else
      throw Failure{kInvalid, "give one of --beta, --beta-file or --population"};
    return Target(t);
  }
};

struct Outcome {
  int code = kOk;
  std::string bytes;
};

Json option_values(const CLI::App* cmd) {
  Json p = Json::object();
  for (const CLI::Option* o : cmd->get_options()) {
    if (o->get_lnames().empty() || o->get_lnames()[0] == "help") continue;
    const std::string key = o->get_lnames()[0];
    if (o->count() == 0) {
      if (!o->get_default_str().empty()) p[key] = o->get_default_str();
    } else if (o->get_expected_max() == 0) {
      p[key] = true;
    } else {
      p[key] = o->as<std::string>();
    }
  }
  return p;
}

class Tool {
 public:
  Tool() : app_("Inverse Banzhaf power index solver", "invbzf") {
    app_.set_version_flag("--version", std::string(invbzf_version()));
    app_.require_subcommand(1);
    app_.add_option("-o,--output", output_, "write the result here and a manifest to <output>.manifest.json");

    auto* solve = app_.add_subcommand("solve", "closest game to a target power vector");
    solve_target_.add_to(solve);
    solve->add_option("--class", solve_.cls, "S, C or W")->capture_default_str();
    solve->add_option("--metric", solve_.metric, "d1, dinf or d1w")->capture_default_str();
    solve->add_option("--method", solve_.method, "enum, bisect or hill")->capture_default_str();
    solve->add_option("--budget", solve_.budget, "bisect: nodes per feasibility call; hill: steps per restart");
    solve->add_option("--seed", seed_, "hill climbing seed")->capture_default_str();
    solve->add_option("--restarts", solve_.restarts, "hill climbing restarts");
    solve->callback([this, solve] { run_ = [this, solve] { return do_solve(solve); }; });

    auto* heur = app_.add_subcommand("heuristic", "the half, q* and q-bar quota heuristics");
    heur_target_.add_to(heur);
    heur->callback([this] { run_ = [this] { return do_heuristic(); }; });

    auto* grid = app_.add_subcommand("grid-stats", "deviation statistics over the 1/100 grid");
    grid->add_option("--n", grid_.n, "players")->required();
    grid->add_option("--rule", grid_.rule, "half, qstar, qbar or optimal")->capture_default_str();
    grid->add_option("--metric", grid_.metric, "d1 or dinf")->capture_default_str();
    grid->add_option("--class", grid_.cls, "game class for rule optimal")->capture_default_str();
    grid->add_option("--sample", grid_.sample, "uniform sample size instead of the full grid");
    grid->add_option("--seed", seed_, "sampling seed")->capture_default_str();
    grid->add_option("--threads", threads_, "worker threads (default INVBZF_THREADS or all cores)");
    grid->add_flag("--allow-large", grid_.allow_large, "lift the full-grid and optimal size limits");
    grid->callback([this] { run_ = [this] { return do_grid(); }; });

    auto* en = app_.add_subcommand("enumerate", "number of distinct games per class");
    en->add_option("--n", enum_.n, "players")->required();
    en->add_option("--from", enum_.from, "first n (default: --n)");
    en->add_option("--class", enum_.classes, "S, C, W (repeatable; default all)");
    en->callback([this] { run_ = [this] { return do_enumerate(); }; });

    auto* bounds = app_.add_subcommand("bounds", "lower bounds from concentrating power on k players");
    bounds_target_.add_to(bounds);
    bounds->add_option("--k", bounds_.k, "number of major players")->capture_default_str();
    bounds->add_option("--epsilon", bounds_.epsilon, "single epsilon; default is a sweep");
    bounds->add_option("--steps", bounds_.steps, "sweep length")->capture_default_str();
    bounds->callback([this] { run_ = [this] { return do_bounds(); }; });

    auto* an = app_.add_subcommand("analytic", "the (2,...,2,1) family tables");
    an->add_option("--metric", analytic_.metric, "d1 or dinf")->capture_default_str();
    an->add_option("--from", analytic_.from, "first n")->capture_default_str();
    an->add_option("--to", analytic_.to, "last n")->capture_default_str();
    an->add_option("--exact-max-n", analytic_.exact_max_n, "fill exact columns up to this n")->capture_default_str();
    an->callback([this] { run_ = [this] { return do_analytic(); }; });

    auto* power = app_.add_subcommand("power", "swings and PBI of a game");
    auto* g = power->add_option("--game", power_.game, "game JSON");
    auto* gf = power->add_option("--game-file", power_.game_file, "game JSON file");
    g->excludes(gf);
    power->callback([this] { run_ = [this] { return do_power(); }; });

    auto* lp = app_.add_subcommand("export-lp", "feasibility model in LP format");
    lp_target_.add_to(lp);
    lp->add_option("--class", lp_.cls, "S, C or W")->capture_default_str();
    lp->add_option("--metric", lp_.metric, "d1, dinf or d1w")->capture_default_str();
    lp->add_option("--alpha", lp_.alpha, "distance threshold")->required();
    lp->add_flag("--strict", lp_.strict, "distance < alpha instead of <=");
    lp->callback([this] { run_ = [this] { return do_export_lp(); }; });

    auto* rep = app_.add_subcommand("reproduce", "compare with the reference tables");
    rep->add_option("--table", rep_.table, "1-7 or opt")->required();
    rep->add_option("--max-n", rep_.max_stats_n, "grid statistics rows up to this n")->capture_default_str();
    rep->add_option("--max-count-n", rep_.max_count_n, "class counts up to this n")->capture_default_str();
    rep->add_option("--data-dir", rep_.data_dir, "directory with eu<year>.csv population files");
    rep->add_option("--threads", threads_, "worker threads");
    rep->callback([this] { run_ = [this] { return do_reproduce(); }; });

    auto* replay = app_.add_subcommand("replay", "re-run a manifest and compare output bytes");
    replay->add_option("manifest", replay_manifest_, "manifest JSON")->required();
    replay->callback([this] { run_ = [this] { return do_replay(); }; });
  }

  // Parses and runs; `write` false keeps results in memory (replay).
  Outcome execute(const std::vector<std::string>& args, bool write) {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app_.parse(reversed);
    } catch (const CLI::ParseError& e) {
      const int rc = app_.exit(e);
      return {rc == 0 ? kOk : kInvalid, ""};
    }
    CLI::App* cmd = app_.get_subcommands().front();
    const auto start = std::chrono::steady_clock::now();
    Outcome out = run_();
    const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!write) return out;
    if (cmd->get_name() == "replay") {
      std::cout << out.bytes << std::flush;
      return out;
    }
    if (output_.empty()) {
      std::cout << out.bytes << std::flush;
      return out;
    }
    write_file(output_, out.bytes);
    Json m;
    m["tool"] = "invbzf";
    m["version"] = invbzf_version();
    m["command"] = cmd->get_name();
    m["argv"] = args;
    m["parameters"] = option_values(cmd);
    m["seed"] = cmd->get_option_no_throw("--seed") ? Json(seed_) : Json(nullptr);
    m["threads_env"] = std::getenv("INVBZF_THREADS") ? Json(std::getenv("INVBZF_THREADS")) : Json(nullptr);
    m["exit_code"] = out.code;
    m["wall_time_seconds"] = wall;
    m["outputs"] = Json::array({Json{{"path", output_}, {"bytes", out.bytes.size()}, {"sha256", sha256_hex(out.bytes)}}});
    write_file(output_ + ".manifest.json", m.dump(2) + "\n");
    return out;
  }

 private:
  Outcome do_solve(CLI::App*) {
    const Target t = solve_target_.load();
    invbzf_solve_options o;
    invbzf_solve_options_init(&o);
    o.game_class = solve_.cls.c_str();
    o.metric = solve_.metric.c_str();
    o.method = solve_.method.c_str();
    o.budget = solve_.budget;
    o.seed = seed_;
    o.restarts = solve_.restarts;
    CString json;
    const invbzf_status s = check(invbzf_solve(t.get(), &o, &json.p));
    if (s == INVBZF_BUDGET) std::cerr << "invbzf: node budget exhausted; result is bracketed\n";
    return {exit_code(s), json.str()};
  }

  Outcome do_heuristic() {
    const Target t = heur_target_.load();
    CString csv;
    return {exit_code(check(invbzf_heuristics(t.get(), &csv.p))), csv.str()};
  }

  Outcome do_grid() {
    invbzf_grid_options o;
    invbzf_grid_options_init(&o);
    o.n = grid_.n;
    o.rule = grid_.rule.c_str();
    o.metric = grid_.metric.c_str();
    o.game_class = grid_.cls.c_str();
    o.sample = grid_.sample;
    o.seed = seed_;
    o.threads = threads_;
    o.allow_large = grid_.allow_large;
    CString csv;
    return {exit_code(check(invbzf_grid_stats(&o, &csv.p))), csv.str()};
  }

  Outcome do_enumerate() {
    const std::vector<std::string> classes = enum_.classes.empty() ? std::vector<std::string>{"S", "C", "W"}
                                                                   : enum_.classes;
    std::ostringstream s;
    s << "n,class,count\n";
    for (int n = enum_.from > 0 ? enum_.from : enum_.n; n <= enum_.n; ++n)
      for (const auto& c : classes) {
        std::uint64_t count = 0;
        check(invbzf_enumerate_count(n, c.c_str(), &count));
        s << n << ',' << c << ',' << count << '\n';
      }
    return {kOk, s.str()};
  }

  Outcome do_bounds() {
    const Target t = bounds_target_.load();
    CString csv;
    return {exit_code(check(invbzf_bounds(t.get(), bounds_.k, bounds_.epsilon.c_str(), bounds_.steps, &csv.p))),
            csv.str()};
  }

  Outcome do_analytic() {
    CString csv;
    check(invbzf_analytic_table(analytic_.metric.c_str(), analytic_.from, analytic_.to, analytic_.exact_max_n,
                                &csv.p));
    return {kOk, csv.str()};
  }

  Outcome do_power() {
    std::string text = power_.game;
    if (!power_.game_file.empty()) text = read_file(power_.game_file);
    if (text.empty()) throw Failure{kInvalid, "give --game or --game-file"};
    CString json;
    check(invbzf_game_power(text.c_str(), &json.p));
    return {kOk, json.str()};
  }

  Outcome do_export_lp() {
    const Target t = lp_target_.load();
    CString lp;
    check(invbzf_export_lp(t.get(), lp_.cls.c_str(), lp_.metric.c_str(), lp_.alpha.c_str(), lp_.strict, &lp.p));
    return {kOk, lp.str()};
  }

  Outcome do_reproduce() {
    invbzf_reproduce_options o;
    invbzf_reproduce_options_init(&o);
    o.max_stats_n = rep_.max_stats_n;
    o.max_count_n = rep_.max_count_n;
    o.data_dir = rep_.data_dir.c_str();
    o.threads = threads_;
    CString csv;
    const invbzf_status s = check(invbzf_reproduce(rep_.table.c_str(), &o, &csv.p));
    int pass = 0, fail = 0, skip = 0;
    std::istringstream lines(csv.str());
    std::string line;
    std::getline(lines, line);
    while (std::getline(lines, line)) {
      if (line.find(",pass,") != std::string::npos) ++pass;
      else if (line.find(",FAIL,") != std::string::npos) ++fail;
      else ++skip;
    }
    std::cerr << "table " << rep_.table << ": " << pass << " pass, " << fail << " fail, " << skip << " skipped\n";
    return {exit_code(s), csv.str()};
  }

  Outcome do_replay() {
    Json m;
    try {
      m = Json::parse(read_file(replay_manifest_));
    } catch (const Json::exception& e) {
      throw Failure{kInvalid, std::string("bad manifest: ") + e.what()};
    }
    const auto args = m.at("argv").get<std::vector<std::string>>();
    const auto& recorded = m.at("outputs").at(0);
    Tool fresh;
    const Outcome again = fresh.execute(args, false);
    const std::string digest = sha256_hex(again.bytes);
    std::ostringstream s;
    s << "command: " << m.at("command").get<std::string>() << "\n"
      << "recorded sha256: " << recorded.at("sha256").get<std::string>() << "\n"
      << "replayed sha256: " << digest << "\n";
    const bool same = digest == recorded.at("sha256").get<std::string>() &&
                      again.code == m.value("exit_code", again.code);
    s << (same ? "identical\n" : "DIFFERENT\n");
    return {same ? kOk : kMismatch, s.str()};
  }

  CLI::App app_;
  std::string output_;
  std::function<Outcome()> run_;
  std::uint64_t seed_ = 1;
  int threads_ = 0;
  TargetInput solve_target_, heur_target_, bounds_target_, lp_target_;
  struct {
    std::string cls = "W", metric = "d1", method = "enum";
    std::uint64_t budget = 0;
    int restarts = 0;
  } solve_;
  struct {
    int n = 4;
    std::string rule = "qstar", metric = "d1", cls = "W";
    std::uint64_t sample = 0;
    bool allow_large = false;
  } grid_;
  struct {
    int n = 0, from = 0;
    std::vector<std::string> classes;
  } enum_;
  struct {
    int k = 2;
    std::string epsilon;
    int steps = 8;
  } bounds_;
  struct {
    std::string metric = "d1";
    int from = 2, to = 20, exact_max_n = 7;
  } analytic_;
  struct {
    std::string game, game_file;
  } power_;
  struct {
    std::string cls = "S", metric = "d1", alpha;
    bool strict = false;
  } lp_;
  struct {
    std::string table, data_dir;
    int max_stats_n = 5, max_count_n = 7;
  } rep_;
  std::string replay_manifest_;
};

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    Tool tool;
    return tool.execute(args, true).code;
  } catch (const Failure& f) {
    std::cerr << "invbzf: " << f.message << "\n";
    return f.code;
  }
}
