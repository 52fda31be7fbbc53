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
#include <span>
#include <vector>

#include "rgt/graph.hpp"

namespace rgt::detail {

struct BfsResult {
  std::size_t reached = 0;
  std::uint64_t distance_sum = 0;
};

/// BFS from `source`, writing hop distances into `dist` (-1 = unreached).
/// `queue` must have room for n vertices.
inline BfsResult bfs(const Graph& g, Vertex source, std::span<std::int32_t> dist,
                     std::span<Vertex> queue) {
  std::fill(dist.begin(), dist.end(), -1);
  BfsResult r;
  std::size_t head = 0, tail = 0;
  dist[source] = 0;
  queue[tail++] = source;
  while (head < tail) {
    const Vertex u = queue[head++];
    const std::int32_t du = dist[u];
    r.distance_sum += static_cast<std::uint64_t>(du);
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] < 0) {
        dist[w] = du + 1;
        queue[tail++] = w;
      }
    }
  }
  r.reached = tail;
  return r;
}

}  // namespace rgt::detail
