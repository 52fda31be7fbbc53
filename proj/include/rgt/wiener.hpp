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

#include <optional>
#include <string>

#include "rgt/exact.hpp"
#include "rgt/graph.hpp"
#include "rgt/growth.hpp"

namespace rgt {

/// Sum of hop distances over unordered pairs, by BFS from every vertex.
/// Throws DisconnectedGraphError.
Integer wiener_index(const Graph& g);
inline Integer wiener_index(const Tree& t) { return wiener_index(t.graph()); }

/// Linear-time tree Wiener index: every edge contributes s * (n - s), where s
/// is the size of one side of the cut.
Integer wiener_index_edge_cut(const Tree& t);

/// 2W / (n(n-1)). Throws DomainError for n < 2.
Rational mean_shortest_path(const Graph& g);

/// W' = c_W W + c_n2 n^2 + c_n n + c_1 for one application of an operation
/// to a tree with n vertices and Wiener index W.
struct WienerPolynomial {
  Family family = Family::Subdivision;
  int m = 1;
  Rational c_W;
  Rational c_n2;
  Rational c_n;
  Rational c_1;

  Rational evaluate(const Integer& W, const Integer& n) const {
    return c_W * W + c_n2 * n * n + c_n * n + c_1;
  }
};

/// Simplified one-step coefficients for the family at order m (m >= 1).
WienerPolynomial wiener_polynomial(Family family, int m);

/// Expanded one-step expression, written with binomials the way the
/// case-by-case derivation produces it.
Rational wiener_one_step_expanded(Family family, int m, const Integer& W, const Integer& n);
/// wiener_polynomial(family, m).evaluate(W, n).
Rational wiener_one_step_simplified(Family family, int m, const Integer& W, const Integer& n);

/// Wiener index after one application. Evaluates both forms; throws
/// FormulaViolation if they differ or are not integral.
Integer wiener_one_step(Family family, int m, const Integer& W, const Integer& n);

/// A brute-force value next to its closed form.
struct OracleCheck {
  Integer oracle;
  Integer closed_form;
};

/// (1/2) sum k_u k_v d_uv vs 4W - (n-1)(2n-1). Throws FormulaViolation on mismatch.
OracleCheck degree_wiener_multiplicative(const Tree& t);
/// (1/2) sum (k_u + k_v) d_uv vs 4W - n(n-1). Throws FormulaViolation on mismatch.
OracleCheck degree_wiener_additive(const Tree& t);
/// wiener_index(line_graph(t)) vs W - C(n, 2). Throws FormulaViolation on mismatch.
OracleCheck line_graph_wiener(const Tree& t);

/// Every tree on n vertices has (n-1)^2 <= W <= C(n+1, 3); star and path attain them.
struct WienerBounds {
  Integer lower;
  Integer upper;
  bool contains(const Integer& W) const { return lower <= W && W <= upper; }
};
WienerBounds extremal_bounds(const Integer& n);

struct BoundsCheck {
  Integer lower;
  Integer upper;
  bool within = false;
};

/// Everything analyze reports for one graph. Tree-only fields are empty for non-trees.
struct MetricsReport {
  std::string label;
  std::size_t n = 0;
  std::size_t edges = 0;
  bool is_tree = false;
  Integer wiener;
  Rational mean_shortest_path;
  std::optional<Rational> mean_hitting_time;
  std::optional<Integer> degree_wiener_mult;
  std::optional<Integer> degree_wiener_add;
  std::optional<Integer> line_graph_wiener;
  std::optional<BoundsCheck> bounds;
  std::optional<double> mean_hitting_time_spectral;
  struct Simulation {
    double mean = 0;
    double std_error = 0;
    std::uint64_t walks = 0;
    std::uint64_t rng_seed = 0;
  };
  std::optional<Simulation> mean_hitting_time_simulated;
  std::vector<std::string> notes;
};

/// Connected graphs only (DisconnectedGraphError otherwise).
MetricsReport analyze_graph(const Graph& g, std::string label);

}  // namespace rgt
