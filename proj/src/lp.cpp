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

#include "invbzf/lp.hpp"

#include <stdexcept>

namespace invbzf {
namespace {

struct Overflow {};

// __int128 with overflow traps; enough for every tableau the weightedness
// checks produce up to n = 9.
struct Checked {
  __int128 v = 0;

  static Checked from(const BigInt& b) {
    if (!mpz_fits_slong_p(b.get_mpz_t())) throw Overflow{};
    return Checked{mpz_get_si(b.get_mpz_t())};
  }
  BigInt to_big() const {
    // |v| stays far below 2^126 whenever this is called
    const bool neg = v < 0;
    unsigned __int128 mag = neg ? -static_cast<unsigned __int128>(v) : v;
    BigInt hi(static_cast<unsigned long>(mag >> 64));
    BigInt lo(static_cast<unsigned long>(mag));
    BigInt out = (hi << 64) + lo;
    return neg ? BigInt(-out) : out;
  }
  friend Checked operator*(Checked a, Checked b) {
    Checked r;
    if (__builtin_mul_overflow(a.v, b.v, &r.v)) throw Overflow{};
    return r;
  }
  friend Checked operator-(Checked a, Checked b) {
    Checked r;
    if (__builtin_sub_overflow(a.v, b.v, &r.v)) throw Overflow{};
    return r;
  }
  friend Checked operator+(Checked a, Checked b) {
    Checked r;
    if (__builtin_add_overflow(a.v, b.v, &r.v)) throw Overflow{};
    return r;
  }
  friend Checked operator/(Checked a, Checked b) { return Checked{a.v / b.v}; }
  friend bool operator<(Checked a, Checked b) { return a.v < b.v; }
  friend bool operator>(Checked a, Checked b) { return a.v > b.v; }
  friend bool operator==(Checked a, Checked b) { return a.v == b.v; }
  bool negative() const { return v < 0; }
  bool positive() const { return v > 0; }
  bool zero() const { return v == 0; }
};

struct Big {
  BigInt v;
  static Big from(const BigInt& b) { return Big{b}; }
  BigInt to_big() const { return v; }
  friend Big operator*(const Big& a, const Big& b) { return Big{a.v * b.v}; }
  friend Big operator-(const Big& a, const Big& b) { return Big{a.v - b.v}; }
  friend Big operator+(const Big& a, const Big& b) { return Big{a.v + b.v}; }
  friend Big operator/(const Big& a, const Big& b) {
    Big r;
    mpz_divexact(r.v.get_mpz_t(), a.v.get_mpz_t(), b.v.get_mpz_t());
    return r;
  }
  friend bool operator<(const Big& a, const Big& b) { return a.v < b.v; }
  friend bool operator>(const Big& a, const Big& b) { return a.v > b.v; }
  friend bool operator==(const Big& a, const Big& b) { return a.v == b.v; }
  bool negative() const { return sgn(v) < 0; }
  bool positive() const { return sgn(v) > 0; }
  bool zero() const { return sgn(v) == 0; }
};

// Integer rows A x (rel) b with b >= 0 already arranged.
struct IntegerSystem {
  std::size_t num_vars = 0;
  std::vector<std::vector<BigInt>> a;
  std::vector<BigInt> b;
  std::vector<Relation> rel;
};

template <class T>
std::optional<std::vector<Rational>> phase_one(const IntegerSystem& sys) {
  const std::size_t m = sys.a.size();
  const std::size_t nv = sys.num_vars;

  // Column layout: structural | slack/surplus (one per non-equality row) |
  // artificial (one per >= or = row) | rhs.
  std::vector<int> slack_col(m, -1), art_col(m, -1);
  std::size_t cols = nv;
  for (std::size_t i = 0; i < m; ++i)
    if (sys.rel[i] != Relation::kEqual) slack_col[i] = static_cast<int>(cols++);
  const std::size_t first_art = cols;
  for (std::size_t i = 0; i < m; ++i)
    if (sys.rel[i] != Relation::kLessEqual) art_col[i] = static_cast<int>(cols++);
  const std::size_t rhs = cols;
  const std::size_t width = cols + 1;

  std::vector<std::vector<T>> t(m + 1, std::vector<T>(width, T::from(0)));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < nv; ++j) t[i][j] = T::from(sys.a[i][j]);
    t[i][rhs] = T::from(sys.b[i]);
    if (slack_col[i] >= 0)
      t[i][slack_col[i]] = T::from(sys.rel[i] == Relation::kLessEqual ? 1 : -1);
    if (art_col[i] >= 0) {
      t[i][art_col[i]] = T::from(1);
      basis[i] = art_col[i];
    } else {
      basis[i] = slack_col[i];
    }
  }
  // Reduced costs of the phase-one objective (sum of artificials).
  auto& obj = t[m];
  for (std::size_t i = 0; i < m; ++i) {
    if (art_col[i] < 0) continue;
    for (std::size_t j = 0; j < width; ++j)
      if (j < first_art || j == rhs) obj[j] = obj[j] - t[i][j];
  }

  T d = T::from(1);
  for (;;) {
    std::size_t enter = width;
    for (std::size_t j = 0; j < rhs; ++j)
      if (obj[j].negative()) {
        enter = j;
        break;
      }
    if (enter == width) break;

    std::size_t leave = m;
    for (std::size_t i = 0; i < m; ++i) {
      if (!t[i][enter].positive()) continue;
      if (leave == m) {
        leave = i;
        continue;
      }
      // t[i][rhs]/t[i][enter] vs t[leave][rhs]/t[leave][enter]
      T lhs = t[i][rhs] * t[leave][enter];
      T rhs_v = t[leave][rhs] * t[i][enter];
      if (lhs < rhs_v || (lhs == rhs_v && basis[i] < basis[leave])) leave = i;
    }
    if (leave == m) return std::nullopt;  // unbounded cannot happen in phase one

    const T p = t[leave][enter];
    for (std::size_t i = 0; i <= m; ++i) {
      if (i == leave) continue;
      const T f = t[i][enter];
      for (std::size_t j = 0; j < width; ++j) t[i][j] = (p * t[i][j] - f * t[leave][j]) / d;
    }
    d = p;
    basis[leave] = enter;
  }

  if (!obj[rhs].zero()) return std::nullopt;
  std::vector<Rational> x(nv, Rational(0));
  const BigInt den = d.to_big();
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < nv) {
      x[basis[i]] = Rational(t[i][rhs].to_big(), den);
      x[basis[i]].canonicalize();
    }
  return x;
}

}  // namespace

std::optional<std::vector<Rational>> find_nonnegative_solution(
    std::size_t num_vars, std::span<const LinearRow> rows) {
  IntegerSystem sys;
  sys.num_vars = num_vars;
  for (const auto& row : rows) {
    if (row.coeffs.size() != num_vars)
      throw std::invalid_argument("LP row has the wrong number of coefficients");
    std::vector<Rational> all = row.coeffs;
    all.push_back(row.rhs);
    const BigInt scale = common_denominator(all);
    std::vector<BigInt> a(num_vars);
    for (std::size_t j = 0; j < num_vars; ++j) {
      Rational s = row.coeffs[j] * scale;
      a[j] = s.get_num();
    }
    Rational b = row.rhs * scale;
    BigInt bi = b.get_num();
    Relation rel = row.relation;
    if (bi < 0) {
      for (auto& v : a) v = -v;
      bi = -bi;
      if (rel == Relation::kLessEqual)
        rel = Relation::kGreaterEqual;
      else if (rel == Relation::kGreaterEqual)
        rel = Relation::kLessEqual;
    }
    sys.a.push_back(std::move(a));
    sys.b.push_back(std::move(bi));
    sys.rel.push_back(rel);
  }
  try {
    return phase_one<Checked>(sys);
  } catch (const Overflow&) {
    return phase_one<Big>(sys);
  }
}

}  // namespace invbzf
