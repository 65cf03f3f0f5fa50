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

#include "invbzf/rational.hpp"

#include <mpfr.h>

#include <cctype>
#include <stdexcept>

namespace invbzf {

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

BigInt parse_integer(std::string_view s) {
  bool neg = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s))
    throw std::invalid_argument("malformed integer '" + std::string(s) + "'");
  BigInt v(std::string(s), 10);
  return neg ? BigInt(-v) : v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("empty rational");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_integer(text.substr(0, slash));
    std::string_view den_text = text.substr(slash + 1);
    if (!all_digits(den_text))
      throw std::invalid_argument("malformed denominator in '" +
                                  std::string(text) + "'");
    BigInt den(std::string(den_text), 10);
    if (den == 0) throw std::invalid_argument("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
  }

  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    bool neg = !int_part.empty() && int_part.front() == '-';
    if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+'))
      int_part.remove_prefix(1);
    if (int_part.empty() && frac.empty())
      throw std::invalid_argument("malformed decimal '" + std::string(text) + "'");
    if (!int_part.empty() && !all_digits(int_part))
      throw std::invalid_argument("malformed decimal '" + std::string(text) + "'");
    if (!frac.empty() && !all_digits(frac))
      throw std::invalid_argument("malformed decimal '" + std::string(text) + "'");
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    BigInt whole = int_part.empty() ? BigInt(0) : BigInt(std::string(int_part), 10);
    BigInt f = frac.empty() ? BigInt(0) : BigInt(std::string(frac), 10);
    Rational r(whole * scale + f, scale);
    r.canonicalize();
    return neg ? Rational(-r) : r;
  }

  return Rational(parse_integer(text));
}

// rounded to nearest; get_d truncates
double to_double(const Rational& r) {
  mpfr_t x;
  mpfr_init2(x, 53);
  mpfr_set_q(x, r.get_mpq_t(), MPFR_RNDN);
  const double d = mpfr_get_d(x, MPFR_RNDN);
  mpfr_clear(x);
  return d;
}

Real to_real(const Rational& r) {
  Real num(r.get_num().get_str());
  Real den(r.get_den().get_str());
  return num / den;
}

static_assert(sizeof(long) == sizeof(std::int64_t), "LP64 platform expected");

BigInt from_int64(std::int64_t v) { return BigInt(static_cast<long>(v)); }

std::int64_t to_int64(const BigInt& v) {
  if (!mpz_fits_slong_p(v.get_mpz_t())) throw std::overflow_error("integer exceeds 64 bits");
  return mpz_get_si(v.get_mpz_t());
}

BigInt isqrt(const BigInt& v) {
  if (v < 0) throw std::domain_error("isqrt of negative value");
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
  return r;
}

BigInt ceil_isqrt(const BigInt& v) {
  BigInt r = isqrt(v);
  if (r * r < v) ++r;
  return r;
}

Rational sqrt_lower(const BigInt& a, const BigInt& b, int digits) {
  if (a < 0 || b <= 0) throw std::domain_error("sqrt_lower: bad operands");
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  // sqrt(a/b) = sqrt(a*b)/b
  BigInt root = isqrt(a * b * scale * scale);
  Rational r(root, b * scale);
  r.canonicalize();
  return r;
}

BigInt common_denominator(const std::vector<Rational>& values) {
  BigInt d = 1;
  for (const auto& v : values) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), v.get_den_mpz_t());
  return d;
}

Rational dyadic_between(const Rational& lo, const Rational& hi) {
  if (!(lo < hi)) throw std::invalid_argument("dyadic_between: empty interval");
  Rational mid = (lo + hi) / 2;
  Rational slack = (hi - lo) / 4;
  BigInt den = 1;
  for (;;) {
    // nearest multiple of 1/den to mid
    BigInt twice = 2 * mid.get_num() * den + mid.get_den();
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), twice.get_mpz_t(), BigInt(2 * mid.get_den()).get_mpz_t());
    Rational cand(q, den);
    cand.canonicalize();
    if (abs(cand - mid) <= slack) return cand;
    den *= 2;
  }
}

}  // namespace invbzf
