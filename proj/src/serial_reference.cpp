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

#include "rgt/serial.hpp"

#include "bfs.hpp"
#include "rgt/errors.hpp"
#include "rgt/wiener.hpp"
#include "walk.hpp"

namespace rgt::serial {

DistanceMatrix all_pairs_distances(const Graph& g) {
  const std::size_t n = g.num_vertices();
  DistanceMatrix d(n);
  std::vector<Vertex> queue(n);
  for (std::size_t s = 0; s < n; ++s) {
    if (detail::bfs(g, static_cast<Vertex>(s), d.row(static_cast<Vertex>(s)), queue).reached != n) {
      throw DisconnectedGraphError("graph is disconnected: some distances are infinite");
    }
  }
  return d;
}

std::vector<std::uint64_t> distance_sums(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<std::uint64_t> sums(n);
  std::vector<std::int32_t> dist(n);
  std::vector<Vertex> queue(n);
  for (std::size_t s = 0; s < n; ++s) {
    auto r = detail::bfs(g, static_cast<Vertex>(s), dist, queue);
    if (r.reached != n) throw DisconnectedGraphError("graph is disconnected: some distances are infinite");
    sums[s] = r.distance_sum;
  }
  return sums;
}

WalkEstimate simulate_hitting_time(const Graph& g, Vertex source, Vertex target, const WalkConfig& cfg) {
  if (cfg.trials < 1) throw ParameterError("walk trials must be >= 1");
  if (source == target) throw ParameterError("source and target must differ");
  const std::uint64_t n = g.num_vertices();
  const std::uint64_t cap = detail::default_step_cap(g, cfg);
  const std::uint64_t pair = static_cast<std::uint64_t>(source) * n + static_cast<std::uint64_t>(target);
  detail::StepMoments mom;
  for (std::uint64_t i = 0; i < cfg.trials; ++i) {
    const std::uint64_t s = detail::walk_once(g, source, target, detail::substream_seed(cfg.rng_seed, pair, i), cap);
    if (s == detail::kWalkCapped) throw WalkCapError("a walk exceeded max_steps");
    mom.add(s);
  }
  return detail::combine_pairs({mom});
}

WalkEstimate simulate_mean_hitting_time(const Graph& g, const WalkConfig& cfg) {
  if (cfg.trials < 1) throw ParameterError("walk trials must be >= 1");
  const std::uint64_t n = g.num_vertices();
  const std::uint64_t pairs = n * (n - 1);
  const std::uint64_t per_pair = std::max<std::uint64_t>(1, cfg.trials / pairs);
  const std::uint64_t cap = detail::default_step_cap(g, cfg);
  std::vector<detail::StepMoments> moments;
  moments.reserve(pairs);
  for (std::uint64_t u = 0; u < n; ++u) {
    for (std::uint64_t v = 0; v < n; ++v) {
      if (u == v) continue;
      detail::StepMoments mom;
      for (std::uint64_t k = 0; k < per_pair; ++k) {
        const std::uint64_t s = detail::walk_once(g, static_cast<Vertex>(u), static_cast<Vertex>(v),
                                                  detail::substream_seed(cfg.rng_seed, u * n + v, k), cap);
        if (s == detail::kWalkCapped) throw WalkCapError("a walk exceeded max_steps");
        mom.add(s);
      }
      moments.push_back(mom);
    }
  }
  return detail::combine_pairs(moments);
}

std::vector<std::uint64_t> sample_wiener_values(RandomModelKind kind, int t, std::uint64_t trials,
                                                std::uint64_t rng_seed) {
  std::vector<std::uint64_t> values;
  values.reserve(trials);
  for (std::uint64_t i = 0; i < trials; ++i) {
    const Tree tree = generate_random_tree({kind, t, detail::substream_seed(rng_seed, detail::kTreeStream, i)});
    values.push_back(wiener_index_edge_cut(tree).convert_to<std::uint64_t>());
  }
  return values;
}

}  // namespace rgt::serial
