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

#include "invbzf/heuristics.hpp"

#include <boost/math/constants/constants.hpp>
#include <cmath>
#include <numeric>

namespace invbzf {

std::string to_string(QuotaRule r) {
  switch (r) {
    case QuotaRule::kHalf: return "half";
    case QuotaRule::kQStar: return "qstar";
    case QuotaRule::kQBar: return "qbar";
  }
  return "?";
}

QuotaRule parse_quota_rule(const std::string& s) {
  if (s == "half") return QuotaRule::kHalf;
  if (s == "qstar") return QuotaRule::kQStar;
  if (s == "qbar") return QuotaRule::kQBar;
  throw std::invalid_argument("unknown quota rule '" + s + "' (expected half, qstar or qbar)");
}

Real qbar_value(int n) {
  if (n < 1) throw std::invalid_argument("qbar needs n >= 1");
  const Real pi = boost::math::constants::pi<Real>();
  return Real(1) / 2 + 1 / boost::multiprecision::sqrt(pi * n);
}

Real quota_value(const TargetVector& beta, QuotaRule rule) {
  switch (rule) {
    case QuotaRule::kHalf: return Real(1) / 2;
    case QuotaRule::kQStar: {
      Rational sq = 0;
      for (const auto& b : beta.values()) sq += b * b;
      return (1 + boost::multiprecision::sqrt(to_real(sq))) / 2;
    }
    case QuotaRule::kQBar: return qbar_value(beta.size());
  }
  return 0;
}

namespace {

BigInt floor_to_bigint(const Real& x) {
  BigInt z;
  mpfr_get_z(z.get_mpz_t(), x.backend().data(), MPFR_RNDD);
  return z;
}

// Smallest integer coalition weight that wins.
BigInt threshold(const std::vector<BigInt>& k, const BigInt& den, QuotaRule rule, bool* ambiguous) {
  if (k.size() == 1) return den;  // a lone player is a dictator under every rule
  switch (rule) {
    case QuotaRule::kHalf: return (den + 1) / 2;
    case QuotaRule::kQStar: {
      // K/D >= (1 + sqrt(sum k^2)/D)/2  <=>  2K - D >= sqrt(sum k^2)
      BigInt sq = 0;
      for (const auto& v : k) sq += v * v;
      const BigInt c = ceil_isqrt(sq);
      return (den + c + 1) / 2;
    }
    case QuotaRule::kQBar: {
      const Real x = to_real(Rational(den)) * qbar_value(static_cast<int>(k.size()));
      BigInt fl = floor_to_bigint(x);
      const Real frac = x - to_real(Rational(fl));
      // undecidable if some integer weight K is within D 10^-40 of D qbar
      const Real tol = to_real(Rational(den)) * Real("1e-40");
      if (ambiguous && (frac < tol || 1 - frac < tol)) *ambiguous = true;
      return frac == 0 ? fl : BigInt(fl + 1);
    }
  }
  return den;
}

std::int64_t to_small(const BigInt& v, bool* ok) {
  if (!mpz_fits_slong_p(v.get_mpz_t())) {
    *ok = false;
    return 0;
  }
  return mpz_get_si(v.get_mpz_t());
}

}  // namespace

std::int64_t integer_threshold(std::span<const std::int64_t> parts, std::int64_t den, QuotaRule rule,
                               bool* ambiguous) {
  std::vector<BigInt> k;
  for (auto p : parts) k.push_back(from_int64(p));
  return to_int64(threshold(k, from_int64(den), rule, ambiguous));
}

HeuristicResult heuristic_game(const TargetVector& beta, QuotaRule rule, bool allow_ambiguous) {
  if (!beta.normalized()) throw std::invalid_argument("heuristics need a normalized target");
  const int n = beta.size();
  const BigInt den = common_denominator(beta.values());
  std::vector<BigInt> k;
  for (const auto& b : beta.values()) {
    Rational s = b * den;
    k.push_back(s.get_num());
  }
  HeuristicResult out;
  out.rule = rule;
  out.quota_value = quota_value(beta, rule);
  const BigInt t = threshold(k, den, rule, &out.ambiguous);
  if (out.ambiguous && !allow_ambiguous)
    throw AmbiguousAtPrecision("a coalition weight lies within 1e-40 of the q-bar quota");

  bool small = n <= kMaxWeightedPlayers;
  std::vector<std::int64_t> w;
  for (const auto& v : k) w.push_back(to_small(v, &small));
  const std::int64_t ti = to_small(t, &small);
  to_small(den, &small);

  if (small) {
    out.integer_game = WeightedGame(ti, w);
    out.swings = swings(*out.integer_game);
    if (n <= kMaxTablePlayers) out.game = realize(*out.integer_game);
  } else {
    if (n > kMaxTablePlayers)
      throw std::invalid_argument("targets with huge denominators are supported only for n <= 24");
    // Screen with doubles, settle near-ties exactly.
    std::vector<double> wd;
    for (const auto& b : beta.values()) wd.push_back(to_double(b));
    const double td = to_double(Rational(t, den));
    const double margin = 1e-9;
    out.game = SimpleGame::from_predicate(n, [&](Coalition s) {
      double sum = 0;
      for (Mask m = s.bits(); m; m &= m - 1) sum += wd[std::countr_zero(m)];
      if (sum > td + margin) return true;
      if (sum < td - margin) return false;
      BigInt exact = 0;
      for (Mask m = s.bits(); m; m &= m - 1) exact += k[std::countr_zero(m)];
      return exact >= t;
    });
    out.swings = swings(*out.game);
  }
  out.pbi = pbi(out.swings);
  return out;
}

HeuristicResult evaluate_heuristic(const TargetVector& beta, QuotaRule rule, std::span<const Metric> metrics,
                                   bool allow_ambiguous) {
  HeuristicResult r = heuristic_game(beta, rule, allow_ambiguous);
  for (const auto& m : metrics) r.distances.push_back(distance(m, r.pbi, beta.values()));
  return r;
}

}  // namespace invbzf
