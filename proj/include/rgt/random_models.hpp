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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rgt/exact.hpp"
#include "rgt/graph.hpp"

namespace rgt {

enum class RandomModelKind { BA, Uniform };

std::string_view kind_name(RandomModelKind k);
/// "ba" or "uniform"; throws ParameterError otherwise.
RandomModelKind parse_kind(std::string_view name);

/// Grows a tree from the edge {0, 1}: step s = 1..t adds vertex s + 1.
struct RandomModelSpec {
  RandomModelKind kind = RandomModelKind::Uniform;
  int t = 0;
  std::uint64_t rng_seed = 0;
};

/// Preferential attachment: target v with probability k_v / sum_w k_w.
Tree generate_ba_tree(const RandomModelSpec& spec);
/// Uniform attachment: every existing vertex equally likely.
Tree generate_uniform_tree(const RandomModelSpec& spec);
Tree generate_random_tree(const RandomModelSpec& spec);

/// Largest t accepted by expected_wiener_enumeration.
inline constexpr int kMaxEnumerationT = 8;

/// Exact E[W] over every attachment history, weighted by its probability.
/// Throws SizeLimitError for t > kMaxEnumerationT.
Rational expected_wiener_enumeration(RandomModelKind kind, int t);

/// Wiener index of `trials` independent trees; tree i uses a seed derived from
/// (rng_seed, i), so the result is independent of the thread count.
std::vector<std::uint64_t> sample_wiener_values(RandomModelKind kind, int t, std::uint64_t trials,
                                                std::uint64_t rng_seed);

struct MonteCarloEstimate {
  double mean = 0;
  double std_error = 0;
  std::uint64_t trials = 0;
};
/// Throws ParameterError for trials < 2.
MonteCarloEstimate expected_wiener_monte_carlo(RandomModelKind kind, int t, std::uint64_t trials,
                                               std::uint64_t rng_seed);

/// W(0) = 1; W(t) = (1 + 1/(t+1))^2 W(t-1) + t + 1 + t/(t+1).
Rational uniform_wiener_recurrence(int t);

/// Closed-form mean shortest path of the uniform growth tree, evaluated as printed
/// (empty products 1, empty sums 0).
double uniform_mean_path_closed_form(int t);

/// Closed-form mean shortest path of the BA tree. Throws DomainError for t < 1.
double ba_mean_path_closed_form(int t);

struct ExpectationReport {
  RandomModelKind kind = RandomModelKind::Uniform;
  int t = 0;
  std::uint64_t rng_seed = 0;
  /// Mean shortest path by the closed form; absent when undefined (BA at t = 0).
  std::optional<double> closed_form;
  /// closed_form * C(t + 2, 2), i.e. in Wiener-index units.
  std::optional<double> closed_form_wiener;
  /// Uniform model only.
  std::optional<Rational> recurrence;
  std::optional<Rational> enumeration;
  std::optional<MonteCarloEstimate> monte_carlo;
  std::vector<std::string> notes;
};

/// trials == 0 skips Monte Carlo; enumeration runs whenever t <= kMaxEnumerationT.
ExpectationReport build_expectation_report(RandomModelKind kind, int t, std::uint64_t trials,
                                           std::uint64_t rng_seed);

namespace detail {
/// Substream tag for Monte Carlo tree sampling.
inline constexpr std::uint64_t kTreeStream = 0x7472656573ULL;
}  // namespace detail

}  // namespace rgt
