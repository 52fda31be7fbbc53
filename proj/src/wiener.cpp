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

#include "rgt/wiener.hpp"

#include <numeric>

#include <omp.h>

#include "bfs.hpp"
#include "rgt/errors.hpp"

namespace rgt {

namespace {

/// Above this many vertices analyze_graph skips the O(n^2) BFS oracles on trees.
constexpr std::size_t kBfsOracleLimit = 20'000;

Integer sum_exact(const std::vector<std::uint64_t>& xs) {
  Integer total = 0;
  for (std::uint64_t x : xs) total += x;
  return total;
}

/// Per source u: D_u = sum_v d_uv and K_u = sum_v k_v d_uv.
struct WeightedSums {
  std::vector<std::uint64_t> plain;
  std::vector<std::uint64_t> degree_weighted;
};

WeightedSums weighted_distance_sums(const Graph& g) {
  const std::size_t n = g.num_vertices();
  WeightedSums out{std::vector<std::uint64_t>(n), std::vector<std::uint64_t>(n)};
  bool disconnected = false;
#pragma omp parallel
  {
    std::vector<std::int32_t> dist(n);
    std::vector<Vertex> queue(n);
#pragma omp for schedule(dynamic, 16) reduction(|| : disconnected)
    for (std::int64_t s = 0; s < static_cast<std::int64_t>(n); ++s) {
      auto r = detail::bfs(g, static_cast<Vertex>(s), dist, queue);
      if (r.reached != n) disconnected = true;
      std::uint64_t k = 0;
      for (std::size_t v = 0; v < n; ++v) {
        k += static_cast<std::uint64_t>(g.degree(static_cast<Vertex>(v))) *
             static_cast<std::uint64_t>(dist[v]);
      }
      out.plain[s] = r.distance_sum;
      out.degree_weighted[s] = k;
    }
  }
  if (disconnected) throw DisconnectedGraphError("graph is disconnected");
  return out;
}

}  // namespace

Integer wiener_index(const Graph& g) {
  // each unordered pair is counted from both ends
  return sum_exact(distance_sums(g)) / 2;
}

Integer wiener_index_edge_cut(const Tree& t) {
  const Graph& g = t.graph();
  const std::size_t n = g.num_vertices();
  // iterative DFS order from root 0, then subtree sizes bottom-up
  std::vector<Vertex> order;
  std::vector<Vertex> parent(n, -1);
  order.reserve(n);
  std::vector<Vertex> stack{0};
  parent[0] = 0;
  while (!stack.empty()) {
    const Vertex u = stack.back();
    stack.pop_back();
    order.push_back(u);
    for (Vertex w : g.neighbors(u)) {
      if (parent[w] < 0) {
        parent[w] = u;
        stack.push_back(w);
      }
    }
  }
  std::vector<std::uint64_t> subtree(n, 1);
  Integer total = 0;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Vertex u = *it;
    if (u == 0) continue;
    const std::uint64_t s = subtree[u];
    total += Integer(s) * (n - s);
    subtree[parent[u]] += s;
  }
  return total;
}

Rational mean_shortest_path(const Graph& g) {
  const std::size_t n = g.num_vertices();
  if (n < 2) throw DomainError("mean shortest path needs n >= 2");
  return Rational(2 * wiener_index(g), Integer(n) * (n - 1));
}

WienerPolynomial wiener_polynomial(Family family, int m_int) {
  if (m_int < 1) throw ParameterError("order m must be >= 1");
  const Rational m = m_int;
  WienerPolynomial p{family, m_int, 0, 0, 0, 0};
  switch (family) {
    case Family::Subdivision:
      p.c_W = (m + 1) * (m + 1) * (m + 1);
      p.c_n2 = -m * (m + 1) * (m + 1) / 2;
      p.c_n = m * (m + 1) * (2 * m + 1) / 3;
      p.c_1 = -m * (m * m - 1) / 6;
      break;
    case Family::TypeI:
      p.c_W = (m + 1) * (m + 1);
      p.c_n2 = m * (m + 1);
      p.c_n = -m;
      p.c_1 = 0;
      break;
    case Family::TFractal:
      p.c_W = 2 * (m + 2) * (m + 2);
      p.c_n2 = -(m + 2);
      p.c_n = -(m - 1) * (m + 2);
      p.c_1 = m * m + 2 * m;
      break;
    case Family::VFractal:
      p.c_W = 3 * (m + 1) * (m + 1);
      p.c_n2 = (m - 2) * (m + 1);
      p.c_n = m + 2;
      p.c_1 = 0;
      break;
    case Family::TypeII:
      p.c_W = (2 * m + 1) * (2 * m + 1);
      p.c_n2 = m * (2 * m + 1);
      p.c_n = -m * (5 * m + 3);
      p.c_1 = m * (3 * m + 2);
      break;
    case Family::TypeIII:
      p.c_W = (m - 1) * (m - 1);
      p.c_n2 = (m - 1) * (m - 1);
      p.c_n = 2 * (m - 1);
      p.c_1 = 1;
      break;
  }
  return p;
}

Rational wiener_one_step_expanded(Family family, int m_int, const Integer& W, const Integer& n) {
  const Integer m = m_int;
  const Rational mq = m_int;
  const Integer cn2 = binom(n, 2);
  const Integer cn12 = binom(n - 1, 2);
  switch (family) {
    case Family::Subdivision:
      return Rational((m + 1) * (m + 1) * (m + 1) * W - (n - 1) * (m + 1) * m * m -
                      2 * (m * cn12 + cn2) * binom(m + 1, 2) + (n - 1) * binom(m + 1, 3));
    case Family::TypeI:
      return Rational((m + 1) * (m + 1) * W + 2 * m * (m + 1) * cn2 + n * (m + 2 * binom(m, 2)));
    case Family::TFractal:
      return Rational(2 * (m + 2) * (m + 2) * W -
                      (n - 1) * (2 * m * m + 3 * m + 2 * n - 2 * binom(m, 2)) - 2 * m * cn12);
    case Family::VFractal:
      return Rational(3 * (m + 1) * (m + 1) * W + n * m * m +
                      2 * ((m - 1) * (m - 1) + m - 3) * cn2);
    case Family::TypeII: {
      const Rational nm1 = Rational(n - 1);
      return Rational((2 * m + 1) * (2 * m + 1) * W) - Rational((n - 1) * (2 * n - 1) * m * m) +
             Rational(8 * m * m, 3) * nm1 * nm1 - Rational(2 * m * (n - 1)) +
             Rational(4 * m, 3) * Rational(n * (n - 1)) - Rational(2 * m, 3) * Rational(cn2) +
             Rational(4 * m * m, 3) * Rational(cn2 + cn12);
    }
    case Family::TypeIII: {
      const Rational nm1 = Rational(n - 1);
      return Rational((m - 1) * (m - 1) * W) +
             Rational(n * (n - 1)) * (mq * mq - mq / 3 - Rational(4, 3)) + Rational(n * m * m) -
             Rational(2 * (n - 1) * (m - 1)) - Rational((n - 1) * (2 * n - 1)) +
             (Rational(8, 3) - 2 * mq) * nm1 * nm1 + Rational(2 * (m + 1), 3) * Rational(cn2) +
             Rational(4, 3) * Rational(cn2 + cn12);
    }
  }
  throw ParameterError("unknown family");
}

Rational wiener_one_step_simplified(Family family, int m, const Integer& W, const Integer& n) {
  return wiener_polynomial(family, m).evaluate(W, n);
}

Integer wiener_one_step(Family family, int m, const Integer& W, const Integer& n) {
  const Rational expanded = wiener_one_step_expanded(family, m, W, n);
  const Rational simplified = wiener_one_step_simplified(family, m, W, n);
  const std::string where = std::string(family_name(family)) + ":" + std::to_string(m) +
                            " at W=" + W.str() + ", n=" + n.str();
  if (expanded != simplified) {
    throw FormulaViolation("one-step Wiener forms disagree for " + where + ": expanded " +
                           to_string(expanded) + " vs simplified " + to_string(simplified));
  }
  return require_integer(simplified, "one-step Wiener for " + where);
}

OracleCheck degree_wiener_multiplicative(const Tree& t) {
  const Graph& g = t.graph();
  const auto sums = weighted_distance_sums(g);
  Integer twice = 0;
  for (std::size_t u = 0; u < sums.degree_weighted.size(); ++u) {
    twice += Integer(g.degree(static_cast<Vertex>(u))) * sums.degree_weighted[u];
  }
  const Integer n = t.num_vertices();
  const Integer W = sum_exact(sums.plain) / 2;
  OracleCheck r{twice / 2, 4 * W - (n - 1) * (2 * n - 1)};
  if (r.oracle != r.closed_form) {
    throw FormulaViolation("multiplicative degree Wiener: oracle " + r.oracle.str() +
                           " != closed form " + r.closed_form.str());
  }
  return r;
}

OracleCheck degree_wiener_additive(const Tree& t) {
  const Graph& g = t.graph();
  const auto sums = weighted_distance_sums(g);
  // (1/2) sum_{u,v} (k_u + k_v) d_uv = sum_u k_u D_u
  Integer oracle = 0;
  for (std::size_t u = 0; u < sums.plain.size(); ++u) {
    oracle += Integer(g.degree(static_cast<Vertex>(u))) * sums.plain[u];
  }
  const Integer n = t.num_vertices();
  const Integer W = sum_exact(sums.plain) / 2;
  OracleCheck r{oracle, 4 * W - n * (n - 1)};
  if (r.oracle != r.closed_form) {
    throw FormulaViolation("additive degree Wiener: oracle " + r.oracle.str() +
                           " != closed form " + r.closed_form.str());
  }
  return r;
}

OracleCheck line_graph_wiener(const Tree& t) {
  const Integer n = t.num_vertices();
  OracleCheck r{wiener_index(line_graph(t)), wiener_index(t) - binom(n, 2)};
  if (r.oracle != r.closed_form) {
    throw FormulaViolation("line graph Wiener: oracle " + r.oracle.str() + " != closed form " +
                           r.closed_form.str());
  }
  return r;
}

WienerBounds extremal_bounds(const Integer& n) {
  if (n < 2) throw DomainError("extremal bounds need n >= 2");
  return {(n - 1) * (n - 1), binom(n + 1, 3)};
}

MetricsReport analyze_graph(const Graph& g, std::string label) {
  MetricsReport r;
  r.label = std::move(label);
  r.n = g.num_vertices();
  r.edges = g.num_edges();
  if (r.n < 2) throw DomainError("analysis needs at least 2 vertices");
  if (!is_connected(g)) throw DisconnectedGraphError("graph is disconnected");
  r.is_tree = is_tree(g);

  if (!r.is_tree) {
    r.wiener = wiener_index(g);
    r.mean_shortest_path = Rational(2 * r.wiener, Integer(r.n) * (r.n - 1));
    r.notes.push_back("not a tree: tree-only metrics omitted");
    return r;
  }

  const Tree t = validate_tree(g);
  const Integer n = r.n;
  if (r.n <= kBfsOracleLimit) {
    r.wiener = wiener_index(g);
    r.degree_wiener_mult = degree_wiener_multiplicative(t).oracle;
    r.degree_wiener_add = degree_wiener_additive(t).oracle;
    if (r.n <= 2000) r.line_graph_wiener = line_graph_wiener(t).oracle;
  } else {
    r.wiener = wiener_index_edge_cut(t);
    r.degree_wiener_mult = 4 * r.wiener - (n - 1) * (2 * n - 1);
    r.degree_wiener_add = 4 * r.wiener - n * (n - 1);
    r.line_graph_wiener = r.wiener - binom(n, 2);
    r.notes.push_back("large tree: Wiener index by edge cuts, degree/line-graph values from closed forms");
  }
  if (!r.line_graph_wiener) r.line_graph_wiener = r.wiener - binom(n, 2);
  r.mean_shortest_path = Rational(2 * r.wiener, n * (n - 1));
  r.mean_hitting_time = Rational(2 * r.wiener, n);
  const auto b = extremal_bounds(n);
  r.bounds = BoundsCheck{b.lower, b.upper, b.contains(r.wiener)};
  return r;
}

}  // namespace rgt
