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
#include <vector>

#include "rgt/exact.hpp"
#include "rgt/graph.hpp"

namespace rgt {

/// Largest graph accepted by the dense spectral route.
inline constexpr std::size_t kMaxSpectralVertices = 2000;

/// Exact mean hitting time of a tree, 2W / n.
Rational mean_hitting_time_tree(const Tree& t);

/// Laplacian eigenvalues, ascending.
struct Spectrum {
  std::vector<double> eigenvalues;

  double largest() const { return eigenvalues.empty() ? 0.0 : eigenvalues.back(); }
  /// max(1, lambda_max) * 1e-8
  double zero_tolerance() const;
  std::size_t near_zero_count() const;
};

/// All n eigenvalues of L = D - A from a dense symmetric solver.
/// Throws SizeLimitError above kMaxSpectralVertices, NumericError if the solver fails.
Spectrum laplacian_spectrum(const Graph& g);

/// (2|E| / (n - 1)) * sum over the n - 1 nonzero eigenvalues of 1 / lambda.
/// Throws DisconnectedGraphError when a second eigenvalue is (numerically) zero.
double mean_hitting_time_spectral(const Graph& g);
double mean_hitting_time_spectral(const Spectrum& s, std::size_t num_edges);

struct WalkConfig {
  std::uint64_t trials = 100'000;
  std::uint64_t rng_seed = 0;
  /// Per-walk step cap; 0 means 100 * n^2.
  std::uint64_t max_steps = 0;
};

/// Sample mean of first-passage times with its standard error.
struct WalkEstimate {
  double mean = 0;
  double std_error = 0;
  std::uint64_t walks = 0;
};

/// Walks from source until target, cfg.trials times (OpenMP over trials).
/// Every walk draws from its own stream derived from (rng_seed, pair, trial),
/// so the estimate does not depend on the thread count.
WalkEstimate simulate_hitting_time(const Graph& g, Vertex source, Vertex target, const WalkConfig& cfg);

/// Mean over all ordered pairs u != v of the simulated H(u -> v). cfg.trials
/// is the total walk budget, split evenly (at least one walk per pair).
WalkEstimate simulate_mean_hitting_time(const Graph& g, const WalkConfig& cfg);

namespace detail {
/// splitmix64 finalizer, used to derive independent per-walk seeds.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}
constexpr std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
  return mix64(mix64(mix64(seed) ^ a) ^ b);
}
}  // namespace detail

}  // namespace rgt
