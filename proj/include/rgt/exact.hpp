// Copyright 2026 The rgt Authors
//
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

#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace rgt {

/// Arbitrary-precision integer used by every closed-form evaluation.
using Integer = boost::multiprecision::cpp_int;
/// Exact rational (always kept in lowest terms, positive denominator).
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integral(const Rational& q) { return denominator(q) == 1; }

/// Binomial coefficient C(a, b); zero when b < 0 or a < b.
Integer binom(const Integer& a, std::int64_t b);

/// Integer power with non-negative exponent.
Integer ipow(const Integer& base, std::uint64_t exp);
Rational rpow(const Rational& base, std::uint64_t exp);

std::string to_string(const Integer& z);
/// "p/q", or just "p" when q == 1.
std::string to_string(const Rational& q);

/// Nearest double; exact for small values.
double to_double(const Rational& q);

/// Throws rgt::FormulaViolation if q is not an integer.
Integer require_integer(const Rational& q, const std::string& what);

}  // namespace rgt
