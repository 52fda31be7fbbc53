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

#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "rgt/errors.hpp"

namespace rgt {
namespace {

Tree random_tree(std::mt19937_64& rng, int max_n) {
  const int n = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_n - 1));
  return random_attachment_tree(n, rng());
}

// Line graph built straight from the definition, for comparison.
Graph naive_line_graph(const Tree& t) {
  const auto edges = t.graph().edges();
  std::vector<Edge> out;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const Edge a = edges[i], b = edges[j];
      if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) {
        out.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
      }
    }
  }
  return Graph::from_edges(edges.size(), out);
}

const Tree& double_spider() {
  static const Tree t = apply_type3(build_path(2), 3);
  return t;
}

TEST(WienerIndex, SmallTrees) {
  EXPECT_EQ(wiener_index(build_path(3)), 4);
  EXPECT_EQ(wiener_index(build_star(4)), 9);
  EXPECT_EQ(wiener_index(apply_tfractal(apply_tfractal(build_path(2), 1), 1)), 117);
  EXPECT_EQ(wiener_index(oracle::from_pairs(3, {{0, 1}, {1, 2}, {0, 2}})), 3);
}

TEST(WienerIndex, EdgeCutAgreesWithBfs) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 60; ++trial) {
    const Tree t = random_tree(rng, 60);
    EXPECT_EQ(wiener_index_edge_cut(t), oracle::wiener(t));
    EXPECT_EQ(wiener_index(t), oracle::wiener(t));
  }
}

TEST(WienerIndex, DisconnectedThrows) {
  EXPECT_THROW(wiener_index(oracle::from_pairs(4, {{0, 1}, {2, 3}})), DisconnectedGraphError);
}

TEST(MeanShortestPath, SmallTrees) {
  EXPECT_EQ(mean_shortest_path(build_path(2).graph()), 1);
  EXPECT_EQ(mean_shortest_path(build_path(3).graph()), Rational(4, 3));
  EXPECT_EQ(mean_shortest_path(build_star(4).graph()), Rational(3, 2));
}

TEST(WienerOneStep, Examples) {
  EXPECT_EQ(wiener_one_step(Family::Subdivision, 2, 4, 3), 56);
  EXPECT_EQ(wiener_one_step(Family::TypeII, 1, 4, 3), 44);
  EXPECT_EQ(wiener_one_step(Family::TypeIII, 3, 1, 2), 29);
  EXPECT_EQ(wiener_one_step(Family::VFractal, 2, 1, 2), 35);
  EXPECT_EQ(wiener_one_step(Family::TypeII, 1, 10, 4), 111);
}

TEST(WienerOneStep, PipelineStageByStage) {
  // subdiv:2 then type2:1 on an edge
  const Integer w1 = wiener_one_step(Family::Subdivision, 2, 1, 2);
  EXPECT_EQ(w1, 10);
  EXPECT_EQ(wiener_one_step(Family::TypeII, 1, w1, 4), 111);
}

TEST(WienerOneStep, MatchesOracleOnRandomSeeds) {
  std::mt19937_64 rng(0x5eed);
  for (int trial = 0; trial < 100; ++trial) {
    const Tree seed = random_tree(rng, 12);
    const Integer W = oracle::wiener(seed);
    for (Family f : kAllFamilies) {
      for (int m = 1; m <= 4; ++m) {
        if (is_saturating(f) && m < seed.max_degree()) continue;
        const Tree grown = apply(seed, {f, m});
        ASSERT_EQ(wiener_one_step(f, m, W, seed.num_vertices()), oracle::wiener(grown))
            << family_name(f) << ":" << m << " n=" << seed.num_vertices();
      }
    }
  }
}

TEST(WienerOneStep, ExpandedEqualsSimplifiedAtBoundaryW) {
  for (Family f : kAllFamilies) {
    for (int m = 1; m <= 6; ++m) {
      for (int n = 2; n <= 50; ++n) {
        const auto b = extremal_bounds(n);
        for (const Integer& W : {b.lower, b.upper}) {
          ASSERT_EQ(wiener_one_step_expanded(f, m, W, n), wiener_one_step_simplified(f, m, W, n))
              << family_name(f) << ":" << m << " n=" << n << " W=" << W;
        }
      }
    }
  }
}

TEST(WienerPolynomial, Coefficients) {
  EXPECT_EQ(wiener_polynomial(Family::TypeI, 5).c_1, 0);
  EXPECT_EQ(wiener_polynomial(Family::VFractal, 7).c_1, 0);
  EXPECT_EQ(wiener_polynomial(Family::Subdivision, 2).c_1, -1);
  EXPECT_EQ(wiener_polynomial(Family::Subdivision, 1).c_1, 0);
  EXPECT_EQ(wiener_polynomial(Family::TypeII, 1).c_1, 5);
  const WienerPolynomial p = wiener_polynomial(Family::Subdivision, 2);
  EXPECT_EQ(p.c_W, 27);
  EXPECT_EQ(p.c_n2, -9);
  EXPECT_EQ(p.c_n, 10);
  EXPECT_EQ(p.evaluate(4, 3), 56);
}

TEST(WienerPolynomial, ConstantTermTable) {
  for (int m = 1; m <= 20; ++m) {
    EXPECT_EQ(wiener_polynomial(Family::TypeI, m).c_1, 0);
    EXPECT_EQ(wiener_polynomial(Family::VFractal, m).c_1, 0);
  }
  for (int m = 2; m <= 20; ++m) {
    EXPECT_NE(wiener_polynomial(Family::TFractal, m).c_1, 0);
    EXPECT_NE(wiener_polynomial(Family::TypeII, m).c_1, 0);
    EXPECT_NE(wiener_polynomial(Family::TypeIII, m).c_1, 0);
  }
}

TEST(WienerPolynomial, RejectsBadOrder) { EXPECT_THROW(wiener_polynomial(Family::TypeI, 0), ParameterError); }

TEST(DegreeWiener, Examples) {
  const std::pair<int, int> expected[] = {{1, 2}, {6, 10}, {19, 28}};
  for (int n = 2; n <= 4; ++n) {
    const Tree p = build_path(n);
    const auto mult = degree_wiener_multiplicative(p);
    const auto add = degree_wiener_additive(p);
    EXPECT_EQ(mult.oracle, expected[n - 2].first);
    EXPECT_EQ(mult.closed_form, expected[n - 2].first);
    EXPECT_EQ(add.oracle, expected[n - 2].second);
    EXPECT_EQ(add.closed_form, expected[n - 2].second);
  }
}

TEST(DegreeWiener, MatchesBruteForce) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 100; ++trial) {
    const Tree t = random_tree(rng, 12);
    const auto [mult, add] = oracle::degree_wieners(t.graph());
    EXPECT_EQ(degree_wiener_multiplicative(t).oracle, mult);
    EXPECT_EQ(degree_wiener_additive(t).oracle, add);
  }
}

TEST(LineGraphWiener, Examples) {
  EXPECT_EQ(line_graph_wiener(build_path(3)).oracle, 1);
  EXPECT_EQ(line_graph_wiener(build_star(4)).oracle, 3);
  const auto spider = line_graph_wiener(double_spider());
  EXPECT_EQ(wiener_index(double_spider()), 29);
  EXPECT_EQ(spider.oracle, 14);
  EXPECT_EQ(spider.closed_form, 14);
}

TEST(LineGraphWiener, MatchesNaiveConstruction) {
  std::mt19937_64 rng(91);
  for (int trial = 0; trial < 100; ++trial) {
    const Tree t = random_tree(rng, 12);
    const Graph naive = naive_line_graph(t);
    EXPECT_EQ(line_graph(t), naive);
    if (naive.num_vertices() >= 2) EXPECT_EQ(line_graph_wiener(t).oracle, oracle::wiener(naive));
  }
}

TEST(ExtremalBounds, Examples) {
  EXPECT_EQ(extremal_bounds(4).lower, 9);
  EXPECT_EQ(extremal_bounds(4).upper, 10);
  EXPECT_EQ(extremal_bounds(2).lower, 1);
  EXPECT_EQ(extremal_bounds(2).upper, 1);
  EXPECT_EQ(extremal_bounds(10).lower, 81);
  EXPECT_EQ(extremal_bounds(10).upper, 165);
}

TEST(ExtremalBounds, StarAndPathAreExtremal) {
  for (int n = 2; n <= 50; ++n) {
    EXPECT_EQ(wiener_index(build_star(n)), extremal_bounds(n).lower);
    EXPECT_EQ(wiener_index(build_path(n)), extremal_bounds(n).upper);
  }
}

TEST(ExtremalBounds, RandomTreesInside) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const Tree t = random_tree(rng, 40);
    EXPECT_TRUE(extremal_bounds(t.num_vertices()).contains(oracle::wiener(t)));
  }
}

TEST(AnalyzeGraph, PathP3) {
  const MetricsReport r = analyze_graph(build_path(3).graph(), "P3");
  EXPECT_TRUE(r.is_tree);
  EXPECT_EQ(r.wiener, 4);
  ASSERT_TRUE(r.mean_hitting_time);
  EXPECT_EQ(*r.mean_hitting_time, Rational(8, 3));
  EXPECT_EQ(*r.degree_wiener_mult, 6);
  EXPECT_EQ(*r.degree_wiener_add, 10);
  EXPECT_EQ(*r.line_graph_wiener, 1);
  EXPECT_TRUE(r.bounds->within);
}

TEST(AnalyzeGraph, TriangleHasNoTreeMetrics) {
  const MetricsReport r = analyze_graph(line_graph(build_star(4)), "K3");
  EXPECT_FALSE(r.is_tree);
  EXPECT_EQ(r.wiener, 3);
  EXPECT_FALSE(r.mean_hitting_time);
  EXPECT_FALSE(r.bounds);
  EXPECT_FALSE(r.notes.empty());
}

TEST(AnalyzeGraph, LargeTreeUsesClosedForms) {
  const Tree big = apply_generations(build_path(2), {{Family::TypeII, 2}}, 7);  // 78126 vertices
  const MetricsReport r = analyze_graph(big.graph(), "big");
  EXPECT_EQ(r.wiener, wiener_index_edge_cut(big));
  EXPECT_FALSE(r.notes.empty());
}

}  // namespace
}  // namespace rgt
