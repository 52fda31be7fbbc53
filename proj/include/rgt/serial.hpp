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

// Single-threaded reference versions of the OpenMP kernels. They share the
// per-item work with the parallel versions and differ only in the loop, so
// tests can require bit-identical output.

#include <cstdint>
#include <vector>

#include "rgt/graph.hpp"
#include "rgt/hitting_time.hpp"
#include "rgt/random_models.hpp"

namespace rgt::serial {

DistanceMatrix all_pairs_distances(const Graph& g);
std::vector<std::uint64_t> distance_sums(const Graph& g);

WalkEstimate simulate_hitting_time(const Graph& g, Vertex source, Vertex target, const WalkConfig& cfg);
WalkEstimate simulate_mean_hitting_time(const Graph& g, const WalkConfig& cfg);

std::vector<std::uint64_t> sample_wiener_values(RandomModelKind kind, int t, std::uint64_t trials,
                                                std::uint64_t rng_seed);

}  // namespace rgt::serial
