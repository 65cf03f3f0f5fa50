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

#include "invbzf/target.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace invbzf {

TargetVector::TargetVector(std::vector<Rational> beta, Rational error_bound)
    : beta_(std::move(beta)), error_bound_(std::move(error_bound)) {
  if (beta_.empty()) throw std::invalid_argument("target vector is empty");
  Rational sum = 0;
  for (auto& b : beta_) {
    b.canonicalize();
    if (b < 0) throw std::invalid_argument("target entries must be non-negative");
    sum += b;
  }
  if (sum != 1) throw std::invalid_argument("target entries must sum to 1, got " + to_string(sum));
  if (error_bound_ < 0) throw std::invalid_argument("negative error bound");
}

TargetVector TargetVector::unnormalized(std::vector<Rational> beta) {
  if (beta.empty()) throw std::invalid_argument("target vector is empty");
  for (auto& b : beta) {
    b.canonicalize();
    if (b < 0) throw std::invalid_argument("target entries must be non-negative");
  }
  TargetVector t;
  t.beta_ = std::move(beta);
  t.error_bound_ = 0;
  t.normalized_ = false;
  return t;
}

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

}  // namespace

PopulationVector parse_population_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  bool header_seen = false;
  PopulationVector out;
  std::set<std::string> names;
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(line);
    if (line.empty()) continue;
    if (!header_seen) {
      if (line != "name,population")
        throw std::invalid_argument("population CSV must start with the header 'name,population'");
      header_seen = true;
      continue;
    }
    const auto comma = line.find(',');
    if (comma == std::string::npos || line.find(',', comma + 1) != std::string::npos)
      throw std::invalid_argument("line " + std::to_string(line_no) + ": expected 'name,population'");
    std::string name = trim(line.substr(0, comma));
    std::string pop = trim(line.substr(comma + 1));
    if (name.empty()) throw std::invalid_argument("line " + std::to_string(line_no) + ": empty name");
    if (pop.empty() || pop.size() > 18)
      throw std::invalid_argument("line " + std::to_string(line_no) + ": bad population '" + pop + "'");
    for (char c : pop)
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw std::invalid_argument("line " + std::to_string(line_no) + ": bad population '" + pop + "'");
    const std::int64_t p = std::stoll(pop);
    if (p < 1) throw std::invalid_argument("line " + std::to_string(line_no) + ": population must be positive");
    if (!names.insert(name).second)
      throw std::invalid_argument("line " + std::to_string(line_no) + ": duplicate name '" + name + "'");
    out.names.push_back(std::move(name));
    out.populations.push_back(p);
  }
  if (!header_seen) throw std::invalid_argument("population CSV is empty");
  if (out.populations.empty()) throw std::invalid_argument("population CSV has no data rows");
  return out;
}

PopulationVector load_population_csv(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open population file '" + path + "'");
  std::stringstream buf;
  buf << f.rdbuf();
  return parse_population_csv(buf.str());
}

TargetVector sqrt_rule_target(const PopulationVector& p, int digits) {
  const int n = p.size();
  if (n < 1) throw std::invalid_argument("empty population vector");
  if (digits < 1) throw std::invalid_argument("digits must be positive");
  std::vector<Rational> roots;
  Rational total = 0;
  for (std::int64_t v : p.populations) {
    if (v < 1) throw std::invalid_argument("population must be positive");
    roots.push_back(sqrt_lower(from_int64(v), 1, digits));
    total += roots.back();
  }
  // Each root is at least 1 and at most 10^-digits below the true value, so
  // every ratio moves by less than (n+1) 10^-digits.
  std::vector<Rational> beta;
  for (auto& r : roots) beta.push_back(r / total);
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  Rational bound(n + 1, scale);
  bound.canonicalize();
  bool exact = true;
  for (std::int64_t v : p.populations) {
    BigInt r = isqrt(from_int64(v));
    if (r * r != from_int64(v)) exact = false;
  }
  return TargetVector(std::move(beta), exact ? Rational(0) : bound);
}

Metric Metric::d1() { return Metric(MetricKind::kD1); }
Metric Metric::dinf() { return Metric(MetricKind::kDInf); }

Metric Metric::d1_weighted(const PopulationVector& p, int digits) {
  if (p.size() < 1) throw std::invalid_argument("empty population vector");
  Metric m(MetricKind::kD1Weighted);
  BigInt total = 0;
  for (std::int64_t v : p.populations) {
    if (v < 1) throw std::invalid_argument("population must be positive");
    total += from_int64(v);
  }
  for (std::int64_t v : p.populations) m.weights_.push_back(sqrt_lower(from_int64(v), total, digits));
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  m.weight_error_ = Rational(1, scale);
  m.weight_error_.canonicalize();
  m.population_ = p;
  return m;
}

std::string Metric::name() const {
  switch (kind_) {
    case MetricKind::kD1: return "d1";
    case MetricKind::kDInf: return "dinf";
    case MetricKind::kD1Weighted: return "d1w";
  }
  return "?";
}

Rational distance(const Metric& m, std::span<const Rational> x, std::span<const Rational> y) {
  if (x.size() != y.size()) throw std::invalid_argument("distance: vectors differ in length");
  Rational out = 0;
  switch (m.kind()) {
    case MetricKind::kD1:
      for (std::size_t i = 0; i < x.size(); ++i) out += abs(x[i] - y[i]);
      break;
    case MetricKind::kDInf:
      for (std::size_t i = 0; i < x.size(); ++i) {
        Rational d = abs(x[i] - y[i]);
        if (d > out) out = d;
      }
      break;
    case MetricKind::kD1Weighted:
      if (m.weights().size() != x.size())
        throw std::invalid_argument("distance: population length differs from vector length");
      for (std::size_t i = 0; i < x.size(); ++i) out += m.weights()[i] * abs(x[i] - y[i]);
      break;
  }
  return out;
}

}  // namespace invbzf
