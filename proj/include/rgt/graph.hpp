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

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rgt {

using Vertex = std::int32_t;

/// Undirected edge stored canonically with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Largest vertex count any explicit construction may produce.
inline constexpr std::size_t kMaxExplicitVertices = 500'000;

/// Simple undirected graph in compressed adjacency form.
///
/// Vertex ids are dense in [0, n). Neighbor lists are sorted; the graph is
/// symmetric with no loops or parallel edges. Immutable once built.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from an edge list. Edge orientation is irrelevant.
  /// Throws InvalidGraphError on self-loops, duplicates or out-of-range ids.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t num_vertices() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t num_edges() const noexcept { return targets_.size() / 2; }

  std::span<const Vertex> neighbors(Vertex u) const {
    return {targets_.data() + offsets_[u], targets_.data() + offsets_[u + 1]};
  }
  int degree(Vertex u) const { return static_cast<int>(offsets_[u + 1] - offsets_[u]); }
  int max_degree() const;

  /// All edges, lexicographic in (min, max).
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> targets_;
};

/// A Graph known to be a tree with at least one edge.
class Tree {
 public:
  const Graph& graph() const noexcept { return graph_; }
  std::size_t num_vertices() const noexcept { return graph_.num_vertices(); }
  std::size_t num_edges() const noexcept { return graph_.num_edges(); }
  int degree(Vertex u) const { return graph_.degree(u); }
  int max_degree() const { return graph_.max_degree(); }

  friend bool operator==(const Tree&, const Tree&) = default;

 private:
  explicit Tree(Graph g) : graph_(std::move(g)) {}
  friend Tree validate_tree(Graph g);

  Graph graph_;
};

/// Hop distances, row-major n x n.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(std::size_t n) : n_(n), d_(n * n, 0) {}

  std::size_t size() const noexcept { return n_; }
  std::int32_t at(Vertex u, Vertex v) const { return d_[static_cast<std::size_t>(u) * n_ + v]; }
  std::span<std::int32_t> row(Vertex u) { return {d_.data() + static_cast<std::size_t>(u) * n_, n_}; }
  std::span<const std::int32_t> row(Vertex u) const {
    return {d_.data() + static_cast<std::size_t>(u) * n_, n_};
  }

  friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::int32_t> d_;
};

/// Connected and |E| = n - 1, with n >= 2. Throws NotATreeError otherwise.
Tree validate_tree(Graph g);
bool is_tree(const Graph& g);
bool is_connected(const Graph& g);

/// Path 0-1-...-(n-1). Throws InvalidSeedError for n < 2.
Tree build_path(int n);
/// Star with center 0. Throws InvalidSeedError for n < 2.
Tree build_star(int n);

/// Uniform random attachment: vertex i joins a uniformly chosen vertex in [0, i).
/// Deterministic in `seed`. Throws InvalidSeedError for n < 2.
Tree random_attachment_tree(int n, std::uint64_t seed);

/// Parses "u v" lines; '#' starts a comment line. Every id below the largest
/// one must appear in some edge.
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);
std::string to_dot(const Graph& g, std::string_view name = "G");

/// Exact hop distances by one BFS per source (OpenMP over sources).
/// Throws DisconnectedGraphError if some pair is unreachable.
DistanceMatrix all_pairs_distances(const Graph& g);

/// Sum of BFS distances from each source; same kernel without the n^2 store.
std::vector<std::uint64_t> distance_sums(const Graph& g);

/// Vertices are the edges of t in lexicographic order; adjacent iff they share an endpoint.
Graph line_graph(const Tree& t);

std::vector<int> degree_sequence(const Graph& g);

/// Re-checks sortedness, symmetry, simplicity and id range from scratch.
bool satisfies_graph_invariants(const Graph& g);

}  // namespace rgt
