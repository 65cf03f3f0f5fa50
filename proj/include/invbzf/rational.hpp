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

#ifndef INVBZF_RATIONAL_HPP_
#define INVBZF_RATIONAL_HPP_

#include <gmpxx.h>

#include <boost/multiprecision/mpfr.hpp>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace invbzf {

using Rational = mpq_class;
using BigInt = mpz_class;

// 100 significant decimal digits; comfortably above the 40-digit decision
// threshold used for irrational quotas.
using Real = boost::multiprecision::mpfr_float_100;

// "num/den", or just "num" when the denominator is 1.
std::string to_string(const Rational& r);

// Accepts "p/q", integers and finite decimals ("0.75", "-1.5e-2" is not
// accepted). Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

double to_double(const Rational& r);
Real to_real(const Rational& r);

BigInt from_int64(std::int64_t v);
std::int64_t to_int64(const BigInt& v);  // throws std::overflow_error

// Floor of the square root of a non-negative integer.
BigInt isqrt(const BigInt& v);
// Ceiling of the square root of a non-negative integer.
BigInt ceil_isqrt(const BigInt& v);

// Rational approximation r of sqrt(a/b) with r <= sqrt(a/b) < r + 10^-digits.
// Exact when a/b is the square of a rational with denominator dividing
// 10^digits * b.
Rational sqrt_lower(const BigInt& a, const BigInt& b, int digits);

// Smallest common denominator of the given rationals.
BigInt common_denominator(const std::vector<Rational>& values);

// The rational with the smallest power-of-two denominator lying within a
// quarter of the interval width from the midpoint of (lo, hi); lo < hi.
Rational dyadic_between(const Rational& lo, const Rational& hi);

}  // namespace invbzf

#endif  // INVBZF_RATIONAL_HPP_
