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

#include "rgt/exact.hpp"

#include "rgt/errors.hpp"

namespace rgt {

Integer binom(const Integer& a, std::int64_t b) {
  if (b < 0 || a < b) return 0;
  Integer r = 1;
  for (std::int64_t i = 0; i < b; ++i) {
    r *= a - i;
    r /= i + 1;
  }
  return r;
}

Integer ipow(const Integer& base, std::uint64_t exp) {
  Integer r = 1, b = base;
  while (exp) {
    if (exp & 1) r *= b;
    exp >>= 1;
    if (exp) b *= b;
  }
  return r;
}

Rational rpow(const Rational& base, std::uint64_t exp) {
  return Rational(ipow(numerator(base), exp), ipow(denominator(base), exp));
}

std::string to_string(const Integer& z) { return z.str(); }

std::string to_string(const Rational& q) {
  if (is_integral(q)) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

Integer require_integer(const Rational& q, const std::string& what) {
  if (!is_integral(q)) {
    throw FormulaViolation(what + ": expected an integer, got " + to_string(q));
  }
  return numerator(q);
}

}  // namespace rgt
