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

#include "rgt/hitting_time.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>
#include <omp.h>

#include "rgt/errors.hpp"
#include "rgt/wiener.hpp"
#include "walk.hpp"

namespace rgt {

Rational mean_hitting_time_tree(const Tree& t) {
  return Rational(2 * wiener_index(t), Integer(t.num_vertices()));
}

double Spectrum::zero_tolerance() const { return 1e-8 * std::max(1.0, largest()); }

std::size_t Spectrum::near_zero_count() const {
  const double tol = zero_tolerance();
  return static_cast<std::size_t>(std::count_if(eigenvalues.begin(), eigenvalues.end(),
                                                [tol](double x) { return std::abs(x) < tol; }));
}

Spectrum laplacian_spectrum(const Graph& g) {
  const std::size_t n = g.num_vertices();
  if (n == 0) throw DomainError("Laplacian spectrum of an empty graph");
  if (n > kMaxSpectralVertices) {
    throw SizeLimitError("spectral route limited to n <= " + std::to_string(kMaxSpectralVertices) +
                         " (got " + std::to_string(n) + "); use the tree formula 2W/n instead");
  }
  Eigen::MatrixXd L = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (Vertex u = 0; u < static_cast<Vertex>(n); ++u) {
    L(u, u) = g.degree(u);
    for (Vertex w : g.neighbors(u)) L(u, w) = -1.0;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(L, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw NumericError("symmetric eigensolver did not converge");
  Spectrum s;
  s.eigenvalues.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
  std::sort(s.eigenvalues.begin(), s.eigenvalues.end());
  return s;
}

double mean_hitting_time_spectral(const Spectrum& s, std::size_t num_edges) {
  const std::size_t n = s.eigenvalues.size();
  if (n < 2) throw DomainError("spectral mean hitting time needs n >= 2");
  if (s.eigenvalues[1] < s.zero_tolerance()) {
    throw DisconnectedGraphError("second Laplacian eigenvalue is zero: graph is disconnected");
  }
  double inv_sum = 0;
  for (std::size_t i = 1; i < n; ++i) inv_sum += 1.0 / s.eigenvalues[i];
  return 2.0 * static_cast<double>(num_edges) / static_cast<double>(n - 1) * inv_sum;
}

double mean_hitting_time_spectral(const Graph& g) {
  return mean_hitting_time_spectral(laplacian_spectrum(g), g.num_edges());
}

namespace {

void check_walk_inputs(const Graph& g, const WalkConfig& cfg) {
  if (cfg.trials < 1) throw ParameterError("walk trials must be >= 1");
  if (g.num_vertices() < 2) throw DomainError("random walks need n >= 2");
  if (!is_connected(g)) throw DisconnectedGraphError("graph is disconnected");
}

[[noreturn]] void throw_capped(std::uint64_t cap) {
  throw WalkCapError("a walk exceeded max_steps = " + std::to_string(cap) +
                     "; raise the cap for this graph size");
}

}  // namespace

WalkEstimate simulate_hitting_time(const Graph& g, Vertex source, Vertex target, const WalkConfig& cfg) {
  check_walk_inputs(g, cfg);
  const auto n = static_cast<Vertex>(g.num_vertices());
  if (source < 0 || target < 0 || source >= n || target >= n) throw ParameterError("vertex out of range");
  if (source == target) throw ParameterError("source and target must differ");
  const std::uint64_t cap = detail::default_step_cap(g, cfg);
  const std::uint64_t pair = static_cast<std::uint64_t>(source) * static_cast<std::uint64_t>(n) +
                             static_cast<std::uint64_t>(target);

  std::vector<std::uint64_t> steps(cfg.trials);
  bool capped = false;
#pragma omp parallel for schedule(static) reduction(|| : capped)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(cfg.trials); ++i) {
    steps[i] = detail::walk_once(g, source, target,
                                 detail::substream_seed(cfg.rng_seed, pair, static_cast<std::uint64_t>(i)), cap);
    if (steps[i] == detail::kWalkCapped) capped = true;
  }
  if (capped) throw_capped(cap);

  detail::StepMoments mom;
  for (std::uint64_t s : steps) mom.add(s);
  return detail::combine_pairs({mom});
}

WalkEstimate simulate_mean_hitting_time(const Graph& g, const WalkConfig& cfg) {
  check_walk_inputs(g, cfg);
  const std::uint64_t n = g.num_vertices();
  const std::uint64_t pairs = n * (n - 1);
  const std::uint64_t per_pair = std::max<std::uint64_t>(1, cfg.trials / pairs);
  const std::uint64_t cap = detail::default_step_cap(g, cfg);

  std::vector<detail::StepMoments> moments(pairs);
  bool capped = false;
#pragma omp parallel for schedule(dynamic, 1) reduction(|| : capped)
  for (std::int64_t p = 0; p < static_cast<std::int64_t>(pairs); ++p) {
    // p enumerates ordered pairs (u, v), u != v
    const auto u = static_cast<Vertex>(static_cast<std::uint64_t>(p) / (n - 1));
    auto v = static_cast<Vertex>(static_cast<std::uint64_t>(p) % (n - 1));
    if (v >= u) ++v;
    const std::uint64_t pair_id = static_cast<std::uint64_t>(u) * n + static_cast<std::uint64_t>(v);
    detail::StepMoments& mom = moments[p];
    for (std::uint64_t k = 0; k < per_pair && !capped; ++k) {
      const std::uint64_t s = detail::walk_once(g, u, v, detail::substream_seed(cfg.rng_seed, pair_id, k), cap);
      if (s == detail::kWalkCapped) {
        capped = true;
        break;
      }
      mom.add(s);
    }
  }
  if (capped) throw_capped(cap);
  return detail::combine_pairs(moments);
}

}  // namespace rgt
