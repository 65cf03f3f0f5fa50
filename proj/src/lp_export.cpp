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

// CPLEX LP writer for the feasibility model. Variable x_<m> is coalition
// mask m (bit i is player i + 1), y_<i>_<m> the swing of player i at m,
// s_<i> and s the swing counts, d_<i> (or d) the deviations scaled by the
// target's common denominator D.

#include <algorithm>
#include <numeric>
#include <sstream>

#include "invbzf/solver.hpp"

namespace invbzf {

namespace {

constexpr int kMaxExportPlayers = 12;

// Accumulates "+ c name" terms, skipping zero coefficients.
class Expr {
 public:
  Expr& add(const BigInt& c, const std::string& name) {
    if (c == 0) return *this;
    s_ << (c < 0 ? " - " : " + ");
    const BigInt a = abs(c);
    if (a != 1) s_ << a.get_str() << ' ';
    s_ << name;
    return *this;
  }
  Expr& add(long c, const std::string& name) { return add(BigInt(c), name); }
  std::string str() const {
    std::string t = s_.str();
    if (t.rfind(" + ", 0) == 0) t = t.substr(3);
    else if (t.rfind(" - ", 0) == 0) t = "-" + t.substr(3);
    return t.empty() ? "0 x_0" : t;
  }

 private:
  std::ostringstream s_;
};

std::string x(Mask m) { return "x_" + std::to_string(m); }
std::string y(int i, Mask m) { return "y_" + std::to_string(i + 1) + "_" + std::to_string(m); }
std::string si(int i) { return "s_" + std::to_string(i + 1); }
std::string di(int i) { return "d_" + std::to_string(i + 1); }
std::string wi(int i) { return "w_" + std::to_string(i + 1); }

// Integer weights of some minimal representation are at most
// (n + 1)^((n + 1) / 2) / 2^n.
BigInt weight_bound(int n) {
  BigInt p = 1;
  for (int i = 0; i <= n; ++i) p *= n + 1;
  const BigInt root = ceil_isqrt(p);
  const BigInt den = BigInt(1) << n;
  return (root + den - 1) / den;
}

}  // namespace

void export_ilp(const FeasibilityProblem& problem, std::ostream& out) {
  const int n = problem.beta.size();
  if (n > kMaxExportPlayers) throw ResourceLimit("LP export is limited to n <= 12");
  if (problem.metric.kind() == MetricKind::kD1Weighted)
    throw std::invalid_argument("LP export supports the d1 and dinf metrics");
  if (problem.alpha < 0) throw std::invalid_argument("alpha must be non-negative");
  const bool dinf = problem.metric.kind() == MetricKind::kDInf;
  const Mask total = Mask{1} << n;
  const Mask full = total - 1;

  const BigInt den = common_denominator(problem.beta.values());
  std::vector<BigInt> k;
  for (const auto& b : problem.beta.values()) k.push_back(Rational(b * den).get_num());
  // players ordered by non-increasing target, for the desirability chain
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return problem.beta[a] > problem.beta[b]; });

  out << "\\ inverse Banzhaf feasibility: class " << to_string(problem.cls) << ", metric "
      << problem.metric.name() << ", alpha " << to_string(problem.alpha) << (problem.strict ? " (strict)" : "")
      << "\n\\ deviations are scaled by D = " << den.get_str() << "\n";
  if (problem.strict) out << "\\ strict alpha is not expressible; the model uses <= alpha\n";
  out << "Minimize\n obj: 0 x_0\nSubject To\n";

  for (Mask m = 0; m < total; ++m)
    for (int i = 0; i < n; ++i)
      if (!((m >> i) & 1u))
        out << " mono_" << i + 1 << "_" << m << ": " << Expr().add(1, x(m)).add(-1, x(m | (Mask{1} << i))).str()
            << " <= 0\n";

  if (problem.cls != GameClass::kS) {
    // player order[r] is at least as desirable as order[r + 1]
    for (int r = 0; r + 1 < n; ++r) {
      const int a = order[r], b = order[r + 1];
      for (Mask m = 0; m < total; ++m) {
        if ((m >> a) & 1u || (m >> b) & 1u) continue;
        out << " desir_" << a + 1 << "_" << b + 1 << "_" << m << ": "
            << Expr().add(1, x(m | (Mask{1} << b))).add(-1, x(m | (Mask{1} << a))).str() << " <= 0\n";
      }
    }
  }

  for (int i = 0; i < n; ++i)
    for (Mask m = 0; m < total; ++m)
      if (!((m >> i) & 1u))
        out << " swing_" << i + 1 << "_" << m << ": "
            << Expr().add(1, y(i, m)).add(-1, x(m | (Mask{1} << i))).add(1, x(m)).str() << " = 0\n";

  for (int i = 0; i < n; ++i) {
    Expr e;
    e.add(1, si(i));
    for (Mask m = 0; m < total; ++m)
      if (!((m >> i) & 1u)) e.add(-1, y(i, m));
    out << " count_" << i + 1 << ": " << e.str() << " = 0\n";
  }
  {
    Expr e;
    e.add(1, "s");
    for (int i = 0; i < n; ++i) e.add(-1, si(i));
    out << " total: " << e.str() << " = 0\n";
  }

  for (int i = 0; i < n; ++i) {
    const std::string d = dinf ? "d" : di(i);
    out << " abs1_" << i + 1 << ": " << Expr().add(1, d).add(-den, si(i)).add(k[i], "s").str() << " >= 0\n";
    out << " abs2_" << i + 1 << ": " << Expr().add(1, d).add(den, si(i)).add(-k[i], "s").str() << " >= 0\n";
  }
  {
    const BigInt an = problem.alpha.get_num(), ad = problem.alpha.get_den();
    Expr e;
    if (dinf) e.add(ad, "d");
    else
      for (int i = 0; i < n; ++i) e.add(ad, di(i));
    e.add(-an * den, "s");
    out << " alpha: " << e.str() << " <= 0\n";
  }

  BigInt big_m;
  if (problem.cls == GameClass::kW) {
    const BigInt wmax = weight_bound(n);
    big_m = wmax * n + 1;
    for (Mask m = 0; m < total; ++m) {
      Expr e;
      for (int i = 0; i < n; ++i)
        if ((m >> i) & 1u) e.add(1, wi(i));
      e.add(-1, "q").add(-big_m, x(m));
      const std::string lhs = e.str();
      out << " lose_" << m << ": " << lhs << " <= -1\n";
      out << " win_" << m << ": " << lhs << " >= -" << big_m.get_str() << "\n";
    }
    out << "Bounds\n";
    for (int i = 0; i < n; ++i) out << " 0 <= " << wi(i) << " <= " << wmax.get_str() << "\n";
    out << " 1 <= q <= " << BigInt(wmax * n).get_str() << "\n";
  } else {
    out << "Bounds\n";
  }
  out << " " << x(0) << " = 0\n " << x(full) << " = 1\n";
  out << "Binaries\n";
  for (Mask m = 0; m < total; ++m) out << " " << x(m) << "\n";
  for (int i = 0; i < n; ++i)
    for (Mask m = 0; m < total; ++m)
      if (!((m >> i) & 1u)) out << " " << y(i, m) << "\n";
  out << "End\n";
}

}  // namespace invbzf
