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

#include <optional>
#include <vector>

#include "rgt/exact.hpp"
#include "rgt/graph.hpp"
#include "rgt/growth.hpp"

namespace rgt {

/// A deterministic growth model: `family` at order m applied t times to a seed
/// known only by its size and Wiener index.
struct ModelParams {
  Family family = Family::Subdivision;
  int m = 1;
  Integer seed_n = 2;
  Integer seed_W = 1;
  int t = 0;
  /// Max degree of the seed. When absent, saturation is the caller's duty.
  std::optional<int> seed_max_degree;

  static ModelParams from_seed(const Tree& seed, Family family, int m, int t);
};

/// Throws ParameterError / SaturationError / DomainError for inadmissible params.
void validate_model_params(const ModelParams& p);

/// Per-family constants of the unrolled mean-hitting-time sums:
///   sum = f^t W + s_g g S2 + s_h h S1 + s_l l S0,
/// with S2 = sum_i f^i n_{t-1-i}^2, S1 = sum_i f^i n_{t-1-i}, S0 = sum_i f^i.
struct FamilyCoefficients {
  Rational f, g, h, l;
  int sign_g = 1, sign_h = 1, sign_l = 1;
};
FamilyCoefficients family_coefficients(Family family, int m);

/// Vertex count at generation t from the closed-form size law.
/// TypeIII at m = 2 uses n_t = n + 2t; TypeIII with m < 2 throws ParameterError.
Integer model_size(const ModelParams& p);

/// Sizes n_0..n_t by iterating the one-step count law.
std::vector<Integer> model_size_sequence(const ModelParams& p);

/// Wiener indices W_0..W_t by iterating the one-step formula.
std::vector<Integer> model_wiener_sequence(const ModelParams& p);
Integer model_wiener(const ModelParams& p);

/// Unrolled-sum route alone: (2 / n_t) * {f^t W + ...} with closed-form sizes.
Rational model_mht_unrolled(const ModelParams& p);

/// Mean hitting time at generation t. Computes the unrolled sum and
/// 2 * model_wiener / model_size; throws FormulaViolation if they differ.
Rational model_mht(const ModelParams& p);

struct BoundsRow {
  int generation = 0;
  Integer n;
  Integer wiener;
  Integer lower;
  Integer upper;
  bool within = false;
  bool lower_tight = false;
  bool upper_tight = false;
};

struct BoundsTrajectory {
  std::vector<BoundsRow> rows;
  bool all_within() const {
    for (const auto& r : rows) {
      if (!r.within) return false;
    }
    return true;
  }
};

/// (n_s - 1)^2 <= W_s <= C(n_s + 1, 3) for s = 0..t.
BoundsTrajectory check_bounds_trajectory(const ModelParams& p);

/// Explicitly builds generation t from a seed tree.
/// Throws SizeLimitError before building anything when the result would be too large.
Tree construct_model(const Tree& seed, Family family, int m, int t);

}  // namespace rgt
