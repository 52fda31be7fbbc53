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

#include <cmath>
#include <cstdint>
#include <vector>
#include <limits>
#include <random>

#include "rgt/graph.hpp"
#include "rgt/hitting_time.hpp"

namespace rgt::detail {

inline constexpr std::uint64_t kWalkCapped = std::numeric_limits<std::uint64_t>::max();

/// Steps of one simple random walk from source to its first visit of target,
/// or kWalkCapped once `cap` steps pass without arriving.
inline std::uint64_t walk_once(const Graph& g, Vertex source, Vertex target, std::uint64_t seed,
                               std::uint64_t cap) {
  std::mt19937_64 rng(seed);
  Vertex at = source;
  std::uint64_t steps = 0;
  while (at != target) {
    if (steps == cap) return kWalkCapped;
    auto nb = g.neighbors(at);
    std::uniform_int_distribution<std::size_t> pick(0, nb.size() - 1);
    at = nb[pick(rng)];
    ++steps;
  }
  return steps;
}

__extension__ using UInt128 = unsigned __int128;

/// Running first and second moments of integer samples; exact, order-free.
struct StepMoments {
  std::uint64_t count = 0;
  UInt128 sum = 0;
  UInt128 sum_sq = 0;

  void add(std::uint64_t x) {
    ++count;
    sum += x;
    sum_sq += static_cast<UInt128>(x) * x;
  }
  double mean() const { return static_cast<double>(sum) / static_cast<double>(count); }
  /// Unbiased sample variance; 0 for fewer than two samples.
  double variance() const {
    if (count < 2) return 0.0;
    const long double n = static_cast<long double>(count);
    const long double s = static_cast<long double>(sum);
    const long double ss = static_cast<long double>(sum_sq);
    const long double v = (ss - s * s / n) / (n - 1);
    return v > 0 ? static_cast<double>(v) : 0.0;
  }
};

/// Mean over pairs of per-pair sample means. The standard error uses the
/// per-pair sample variances; with one walk per pair it falls back to the
/// spread of the pair means.
inline WalkEstimate combine_pairs(const std::vector<StepMoments>& pairs) {
  WalkEstimate e;
  const double p = static_cast<double>(pairs.size());
  double mean_sum = 0, var_sum = 0;
  bool single = false;
  for (const StepMoments& m : pairs) {
    mean_sum += m.mean();
    var_sum += m.variance() / static_cast<double>(m.count);
    e.walks += m.count;
    single = single || m.count < 2;
  }
  e.mean = mean_sum / p;
  if (!single) {
    e.std_error = std::sqrt(var_sum) / p;
  } else if (pairs.size() > 1) {
    double spread = 0;
    for (const StepMoments& m : pairs) spread += (m.mean() - e.mean) * (m.mean() - e.mean);
    e.std_error = std::sqrt(spread / (p - 1) / p);
  }
  return e;
}

inline std::uint64_t default_step_cap(const Graph& g, const WalkConfig& cfg) {
  const std::uint64_t n = g.num_vertices();
  return cfg.max_steps ? cfg.max_steps : 100 * n * n;
}

}  // namespace rgt::detail
