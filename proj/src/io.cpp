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


#include "invbzf/io.hpp"

#include <cctype>
#include <json.hpp>
#include <stdexcept>

namespace invbzf {

using Json = nlohmann::ordered_json;

namespace {

Rational entry(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_number()) throw std::invalid_argument("write non-integer target entries as strings, e.g. \"0.25\" or \"1/4\"");
  throw std::invalid_argument("target entries must be strings or integers");
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
}

Json weights_json(const WeightedGame& w) {
  return Json{{"n", w.players()}, {"quota", w.quota()}, {"weights", w.weights()}};
}

Json game_json(const SimpleGame& v) {
  Json mwc = Json::array();
  for (Coalition c : v.minimal_winning()) {
    Json members = Json::array();
    for (int i : c.members()) members.push_back(i + 1);
    mwc.push_back(members);
  }
  return Json{{"n", v.players()}, {"minimal_winning", mwc}};
}

Json rationals(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

}  // namespace

TargetVector parse_target(std::string_view text) {
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) throw std::invalid_argument("empty target");
  std::vector<Rational> beta;
  if (text[first] == '{' || text[first] == '[') {
    Json j = parse_json(text);
    if (j.is_object()) {
      if (!j.contains("beta")) throw std::invalid_argument("target JSON needs a \"beta\" array");
      j = j["beta"];
    }
    if (!j.is_array()) throw std::invalid_argument("\"beta\" must be an array");
    for (const auto& e : j) beta.push_back(entry(e));
  } else {
    std::string token;
    auto flush = [&] {
      if (!token.empty()) beta.push_back(parse_rational(token));
      token.clear();
    };
    for (char c : text) {
      if (c == ',' || std::isspace(static_cast<unsigned char>(c))) flush();
      else token += c;
    }
    flush();
  }
  return TargetVector(std::move(beta));
}

std::string target_to_json(const TargetVector& t) { return Json{{"beta", rationals(t.values())}}.dump(); }

ParsedGame parse_game(std::string_view text) {
  const Json j = parse_json(text);
  if (!j.is_object() || !j.contains("n")) throw std::invalid_argument("game JSON needs \"n\"");
  const int n = j["n"].get<int>();
  SimpleGame::check_players(n);
  if (j.contains("weights")) {
    if (!j.contains("quota")) throw std::invalid_argument("weighted game JSON needs \"quota\"");
    auto w = j["weights"].get<std::vector<std::int64_t>>();
    if (static_cast<int>(w.size()) != n) throw std::invalid_argument("\"weights\" must have n entries");
    WeightedGame wg(j["quota"].get<std::int64_t>(), std::move(w));
    return {realize(wg), wg};
  }
  if (!j.contains("minimal_winning")) throw std::invalid_argument("game JSON needs \"weights\" or \"minimal_winning\"");
  std::vector<Coalition> mwc;
  for (const auto& c : j["minimal_winning"]) {
    Mask m = 0;
    for (const auto& p : c) {
      const int i = p.get<int>();
      if (i < 1 || i > n) throw std::invalid_argument("player labels run from 1 to n");
      m |= Mask{1} << (i - 1);
    }
    mwc.push_back(Coalition(m));
  }
  return {SimpleGame::from_minimal_winning(n, mwc), std::nullopt};
}

std::string game_to_json(const SimpleGame& v, const std::optional<WeightedGame>& w) {
  Json j = game_json(v);
  if (w) {
    j["quota"] = w->quota();
    j["weights"] = w->weights();
  }
  return j.dump();
}

std::string solve_result_to_json(const SolveResult& r, const TargetVector& beta, GameClass cls,
                                 const Metric& metric, const std::string& method) {
  const SwingProfile s = swings(r.best_game);
  Json j{{"n", beta.size()},
         {"class", to_string(cls)},
         {"metric", metric.name()},
         {"method", method},
         {"status", to_string(r.status)},
         {"distance", to_string(r.distance)},
         {"distance_decimal", to_double(r.distance)},
         {"lower", to_string(r.lower)},
         {"upper", to_string(r.upper)},
         {"iterations", r.iterations},
         {"nodes", r.nodes},
         {"target", rationals(beta.values())},
         {"swings", s.per_player},
         {"pbi", rationals(pbi(s))},
         {"game", game_json(r.best_game)},
         {"weights", r.witness_weights ? weights_json(*r.witness_weights) : Json(nullptr)}};
  return j.dump(2) + "\n";
}

}  // namespace invbzf
