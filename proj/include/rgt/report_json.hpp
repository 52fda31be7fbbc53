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

#include "json.hpp"

#include "rgt/exact.hpp"
#include "rgt/random_models.hpp"
#include "rgt/recursive_models.hpp"
#include "rgt/wiener.hpp"

namespace rgt {

using json = nlohmann::ordered_json;

/// {"num": "<digits>", "den": "<digits>"}, lowest terms, den > 0.
json rational_to_json(const Rational& q);
/// Inverse of rational_to_json; throws ParseError on malformed input.
Rational rational_from_json(const json& j);

/// A JSON number when |z| < 2^53, otherwise a decimal string.
json integer_to_json(const Integer& z);

json to_json(const MetricsReport& r);
json to_json(const ExpectationReport& r);
json to_json(const BoundsTrajectory& b);
json to_json(const WienerPolynomial& p);

}  // namespace rgt
