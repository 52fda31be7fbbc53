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

#include "rgt/graph.hpp"

#include <algorithm>
#include <charconv>
#include <random>
#include <sstream>

#include <omp.h>

#include "bfs.hpp"
#include "rgt/errors.hpp"

namespace rgt {

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  if (n > static_cast<std::size_t>(INT32_MAX)) throw InvalidGraphError("vertex count too large");
  std::vector<std::size_t> deg(n, 0);
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v < 0 || static_cast<std::size_t>(e.u) >= n ||
        static_cast<std::size_t>(e.v) >= n) {
      throw InvalidGraphError("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                              " out of range for n = " + std::to_string(n));
    }
    if (e.u == e.v) throw InvalidGraphError("self-loop at vertex " + std::to_string(e.u));
    ++deg[e.u];
    ++deg[e.v];
  }

  Graph g;
  g.offsets_.assign(n + 1, 0);
  for (std::size_t u = 0; u < n; ++u) g.offsets_[u + 1] = g.offsets_[u] + deg[u];
  g.targets_.resize(g.offsets_[n]);
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const Edge& e : edges) {
    g.targets_[cursor[e.u]++] = e.v;
    g.targets_[cursor[e.v]++] = e.u;
  }
  for (std::size_t u = 0; u < n; ++u) {
    auto first = g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[u]);
    auto last = g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[u + 1]);
    std::sort(first, last);
    if (auto dup = std::adjacent_find(first, last); dup != last) {
      throw InvalidGraphError("duplicate edge " + std::to_string(std::min<Vertex>(u, *dup)) +
                              "-" + std::to_string(std::max<Vertex>(u, *dup)));
    }
  }
  return g;
}

int Graph::max_degree() const {
  int k = 0;
  for (std::size_t u = 0; u + 1 < offsets_.size(); ++u) {
    k = std::max(k, static_cast<int>(offsets_[u + 1] - offsets_[u]));
  }
  return k;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges());
  const auto n = static_cast<Vertex>(num_vertices());
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

bool is_connected(const Graph& g) {
  const std::size_t n = g.num_vertices();
  if (n == 0) return true;
  std::vector<std::int32_t> dist(n);
  std::vector<Vertex> queue(n);
  return detail::bfs(g, 0, dist, queue).reached == n;
}

Tree validate_tree(Graph g) {
  const std::size_t n = g.num_vertices();
  if (n < 2) {
    throw NotATreeError(NotATreeError::Reason::TooSmall,
                        "not a tree: need at least 2 vertices, got " + std::to_string(n));
  }
  const bool connected = is_connected(g);
  if (!connected) {
    throw NotATreeError(NotATreeError::Reason::Disconnected, "not a tree: graph is disconnected");
  }
  if (g.num_edges() != n - 1) {
    // connected with |E| > n - 1
    throw NotATreeError(NotATreeError::Reason::Cyclic,
                        "not a tree: graph contains a cycle (" + std::to_string(g.num_edges()) +
                            " edges on " + std::to_string(n) + " vertices)");
  }
  return Tree(std::move(g));
}

bool is_tree(const Graph& g) {
  return g.num_vertices() >= 2 && g.num_edges() + 1 == g.num_vertices() && is_connected(g);
}

Tree build_path(int n) {
  if (n < 2) throw InvalidSeedError("path needs n >= 2, got " + std::to_string(n));
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return validate_tree(Graph::from_edges(static_cast<std::size_t>(n), edges));
}

Tree build_star(int n) {
  if (n < 2) throw InvalidSeedError("star needs n >= 2, got " + std::to_string(n));
  std::vector<Edge> edges;
  for (Vertex i = 1; i < n; ++i) edges.push_back({0, i});
  return validate_tree(Graph::from_edges(static_cast<std::size_t>(n), edges));
}

Tree random_attachment_tree(int n, std::uint64_t seed) {
  if (n < 2) throw InvalidSeedError("random tree needs n >= 2, got " + std::to_string(n));
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (Vertex i = 1; i < n; ++i) {
    std::uniform_int_distribution<Vertex> pick(0, i - 1);
    edges.push_back({pick(rng), i});
  }
  return validate_tree(Graph::from_edges(static_cast<std::size_t>(n), edges));
}

namespace {

bool is_blank(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_blank(line[i])) ++i;
    std::size_t j = i;
    while (j < line.size() && !is_blank(line[j])) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

Vertex parse_id(std::string_view tok, std::size_t line) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || value < 0 || value > INT32_MAX - 1) {
    throw ParseError(line, "expected a nonnegative integer vertex id, got '" + std::string(tok) + "'");
  }
  return static_cast<Vertex>(value);
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::vector<Edge> edges;
  std::vector<std::size_t> edge_line;
  Vertex max_id = -1;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;

    auto tokens = split_tokens(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;
    if (tokens.size() != 2) {
      throw ParseError(line_no, "expected exactly two vertex ids, got " + std::to_string(tokens.size()) +
                                    " tokens");
    }
    Vertex u = parse_id(tokens[0], line_no);
    Vertex v = parse_id(tokens[1], line_no);
    if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
    edges.push_back({std::min(u, v), std::max(u, v)});
    edge_line.push_back(line_no);
    max_id = std::max({max_id, u, v});
  }

  const std::size_t n = static_cast<std::size_t>(max_id + 1);
  std::vector<bool> seen(n, false);
  for (const Edge& e : edges) seen[e.u] = seen[e.v] = true;
  for (std::size_t u = 0; u < n; ++u) {
    if (!seen[u]) {
      throw ParseError(0, "missing vertex " + std::to_string(u) + " (ids must be dense in [0, " +
                              std::to_string(n) + "))");
    }
  }

  std::vector<std::size_t> order(edges.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return edges[a] < edges[b]; });
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (edges[order[i]] == edges[order[i - 1]]) {
      const Edge& e = edges[order[i]];
      throw ParseError(edge_line[order[i]], "duplicate edge " + std::to_string(e.u) + " " +
                                                std::to_string(e.v) + " (first on line " +
                                                std::to_string(edge_line[order[i - 1]]) + ")");
    }
  }
  return Graph::from_edges(n, edges);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  os << "# n=" << g.num_vertices() << " m=" << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) os << e.u << ' ' << e.v << '\n';
  return os.str();
}

std::string to_dot(const Graph& g, std::string_view name) {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  const auto n = static_cast<Vertex>(g.num_vertices());
  for (Vertex u = 0; u < n; ++u) {
    if (g.degree(u) == 0) os << "  " << u << ";\n";
  }
  for (const Edge& e : g.edges()) os << "  " << e.u << " -- " << e.v << ";\n";
  os << "}\n";
  return os.str();
}

DistanceMatrix all_pairs_distances(const Graph& g) {
  const std::size_t n = g.num_vertices();
  DistanceMatrix d(n);
  bool disconnected = false;

#pragma omp parallel
  {
    std::vector<Vertex> queue(n);
#pragma omp for schedule(dynamic, 16) reduction(|| : disconnected)
    for (std::int64_t s = 0; s < static_cast<std::int64_t>(n); ++s) {
      auto r = detail::bfs(g, static_cast<Vertex>(s), d.row(static_cast<Vertex>(s)), queue);
      if (r.reached != n) disconnected = true;
    }
  }
  if (disconnected) throw DisconnectedGraphError("graph is disconnected: some distances are infinite");
  return d;
}

std::vector<std::uint64_t> distance_sums(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<std::uint64_t> sums(n, 0);
  bool disconnected = false;

#pragma omp parallel
  {
    std::vector<std::int32_t> dist(n);
    std::vector<Vertex> queue(n);
#pragma omp for schedule(dynamic, 16) reduction(|| : disconnected)
    for (std::int64_t s = 0; s < static_cast<std::int64_t>(n); ++s) {
      auto r = detail::bfs(g, static_cast<Vertex>(s), dist, queue);
      if (r.reached != n) disconnected = true;
      sums[s] = r.distance_sum;
    }
  }
  if (disconnected) throw DisconnectedGraphError("graph is disconnected: some distances are infinite");
  return sums;
}

Graph line_graph(const Tree& t) {
  const Graph& g = t.graph();
  const std::vector<Edge> tree_edges = g.edges();
  const auto n = static_cast<Vertex>(g.num_vertices());

  // incident[u] = line-graph ids of edges touching u; ids are indexes into tree_edges
  std::vector<std::vector<Vertex>> incident(n);
  for (std::size_t i = 0; i < tree_edges.size(); ++i) {
    incident[tree_edges[i].u].push_back(static_cast<Vertex>(i));
    incident[tree_edges[i].v].push_back(static_cast<Vertex>(i));
  }
  std::vector<Edge> out;
  for (Vertex u = 0; u < n; ++u) {
    const auto& inc = incident[u];
    for (std::size_t a = 0; a < inc.size(); ++a) {
      for (std::size_t b = a + 1; b < inc.size(); ++b) {
        out.push_back({std::min(inc[a], inc[b]), std::max(inc[a], inc[b])});
      }
    }
  }
  // two tree edges share at most one endpoint, so no duplicates arise
  return Graph::from_edges(tree_edges.size(), out);
}

std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> k(g.num_vertices());
  for (std::size_t u = 0; u < k.size(); ++u) k[u] = g.degree(static_cast<Vertex>(u));
  return k;
}

bool satisfies_graph_invariants(const Graph& g) {
  const auto n = static_cast<Vertex>(g.num_vertices());
  std::size_t half_edges = 0;
  for (Vertex u = 0; u < n; ++u) {
    auto nb = g.neighbors(u);
    half_edges += nb.size();
    for (std::size_t i = 0; i < nb.size(); ++i) {
      const Vertex w = nb[i];
      if (w < 0 || w >= n || w == u) return false;
      if (i > 0 && nb[i - 1] >= w) return false;
      auto back = g.neighbors(w);
      if (!std::binary_search(back.begin(), back.end(), u)) return false;
    }
  }
  return half_edges == 2 * g.num_edges();
}

}  // namespace rgt
