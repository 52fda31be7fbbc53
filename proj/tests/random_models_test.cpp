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

#include "rgt/random_models.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <functional>

#include "oracle.hpp"
#include "rgt/hitting_time.hpp"
#include "rgt/errors.hpp"
#include "rgt/wiener.hpp"

namespace rgt {
namespace {

// Brute-force expectation: walk every attachment history directly on edge
// lists, with the probability of each choice computed from degrees.
Rational brute_expected_wiener(RandomModelKind kind, int t) {
  struct State {
    std::vector<std::pair<int, int>> edges;
    std::vector<int> degree;
  };
  Rational total = 0;
  std::function<void(const State&, const Rational&, int)> go = [&](const State& s, const Rational& p, int left) {
    if (left == 0) {
      std::vector<Edge> es;
      for (auto [a, b] : s.edges) es.push_back({a, b});
      total += p * oracle::wiener(Graph::from_edges(s.degree.size(), es));
      return;
    }
    const int n = static_cast<int>(s.degree.size());
    int degree_sum = 0;
    for (int k : s.degree) degree_sum += k;
    for (int v = 0; v < n; ++v) {
      const Rational q = kind == RandomModelKind::BA ? Rational(s.degree[v], degree_sum) : Rational(1, n);
      State next = s;
      next.edges.push_back({v, n});
      next.degree[v] += 1;
      next.degree.push_back(1);
      go(next, p * q, left - 1);
    }
  };
  go(State{{{0, 1}}, {1, 1}}, 1, t);
  return total;
}

TEST(Kinds, Names) {
  EXPECT_EQ(parse_kind("ba"), RandomModelKind::BA);
  EXPECT_EQ(parse_kind("uniform"), RandomModelKind::Uniform);
  EXPECT_EQ(kind_name(RandomModelKind::BA), "ba");
  EXPECT_THROW(parse_kind("er"), ParameterError);
}

TEST(Generators, SmallSteps) {
  for (auto kind : {RandomModelKind::BA, RandomModelKind::Uniform}) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      EXPECT_EQ(generate_random_tree({kind, 0, seed}), build_path(2));
      const Tree t1 = generate_random_tree({kind, 1, seed});
      EXPECT_EQ(wiener_index(t1), 4);  // always P3
      const Tree t5 = generate_random_tree({kind, 5, seed});
      EXPECT_EQ(t5.num_vertices(), 7u);
      EXPECT_EQ(t5.num_edges(), 6u);
    }
  }
}

TEST(Generators, AlwaysValidTrees) {
  for (auto kind : {RandomModelKind::BA, RandomModelKind::Uniform}) {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      const int t = static_cast<int>(seed % 40);
      const Tree tree = generate_random_tree({kind, t, seed});
      ASSERT_EQ(tree.num_vertices(), static_cast<std::size_t>(t + 2));
      ASSERT_TRUE(is_tree(tree.graph()));
    }
  }
}

TEST(Generators, Deterministic) {
  EXPECT_EQ(generate_ba_tree({RandomModelKind::BA, 30, 5}), generate_ba_tree({RandomModelKind::BA, 30, 5}));
  EXPECT_EQ(generate_uniform_tree({RandomModelKind::Uniform, 30, 5}),
            generate_uniform_tree({RandomModelKind::Uniform, 30, 5}));
}

TEST(Generators, UniformStarFrequency) {
  // at t = 2 the star appears with probability 1/3
  const int trials = 30'000;
  int stars = 0;
  for (int i = 0; i < trials; ++i) {
    if (generate_uniform_tree({RandomModelKind::Uniform, 2, static_cast<std::uint64_t>(i)}).max_degree() == 3) ++stars;
  }
  const double p = static_cast<double>(stars) / trials;
  const double se = std::sqrt((1.0 / 3) * (2.0 / 3) / trials);
  EXPECT_NEAR(p, 1.0 / 3, 4 * se);
}

TEST(Generators, BaFavoursHighDegree) {
  // at t = 2 BA gives the star with probability 1/2
  const int trials = 30'000;
  int stars = 0;
  for (int i = 0; i < trials; ++i) {
    if (generate_ba_tree({RandomModelKind::BA, 2, static_cast<std::uint64_t>(i)}).max_degree() == 3) ++stars;
  }
  const double se = std::sqrt(0.25 / trials);
  EXPECT_NEAR(static_cast<double>(stars) / trials, 0.5, 4 * se);
}

TEST(Enumeration, Examples) {
  EXPECT_EQ(expected_wiener_enumeration(RandomModelKind::Uniform, 2), Rational(29, 3));
  EXPECT_EQ(expected_wiener_enumeration(RandomModelKind::BA, 2), Rational(19, 2));
  EXPECT_EQ(expected_wiener_enumeration(RandomModelKind::BA, 1), 4);
  EXPECT_EQ(expected_wiener_enumeration(RandomModelKind::Uniform, 1), 4);
  EXPECT_EQ(expected_wiener_enumeration(RandomModelKind::BA, 0), 1);
  EXPECT_THROW(expected_wiener_enumeration(RandomModelKind::BA, kMaxEnumerationT + 1), SizeLimitError);
}

TEST(Enumeration, MatchesBruteForce) {
  for (auto kind : {RandomModelKind::BA, RandomModelKind::Uniform}) {
    for (int t = 0; t <= 5; ++t) EXPECT_EQ(expected_wiener_enumeration(kind, t), brute_expected_wiener(kind, t));
  }
}

TEST(Recurrence, Examples) {
  EXPECT_EQ(uniform_wiener_recurrence(0), 1);
  EXPECT_EQ(uniform_wiener_recurrence(1), Rational(19, 4));
  EXPECT_EQ(uniform_wiener_recurrence(2), Rational(109, 9));
}

TEST(ClosedForms, Values) {
  EXPECT_DOUBLE_EQ(uniform_mean_path_closed_form(0), 3.0);
  EXPECT_DOUBLE_EQ(uniform_mean_path_closed_form(1), 11.0 / 6);
  EXPECT_DOUBLE_EQ(uniform_mean_path_closed_form(2), 137.0 / 72);
  EXPECT_NEAR(uniform_mean_path_closed_form(10), 4874326428019620076349.0 / 1229668574238720000000.0, 1e-12);
  EXPECT_DOUBLE_EQ(ba_mean_path_closed_form(1), 17.0 / 12);
  EXPECT_DOUBLE_EQ(ba_mean_path_closed_form(2), 163.0 / 96);
  EXPECT_DOUBLE_EQ(ba_mean_path_closed_form(3), 239.0 / 120);
  EXPECT_THROW(ba_mean_path_closed_form(0), DomainError);
}

TEST(ClosedForms, BaGrowthIsLogarithmic) {
  double lo = 1e300, hi = 0;
  for (int t = 100; t <= 10'000; t += 100) {
    const double r = ba_mean_path_closed_form(t) / std::log(t);
    lo = std::min(lo, r);
    hi = std::max(hi, r);
  }
  EXPECT_GT(lo, 0);
  EXPECT_LT(hi / lo, 2.0);
}

TEST(MonteCarlo, DeterministicAtT1) {
  for (auto kind : {RandomModelKind::BA, RandomModelKind::Uniform}) {
    const auto est = expected_wiener_monte_carlo(kind, 1, 10, 3);
    EXPECT_EQ(est.mean, 4.0);
    EXPECT_EQ(est.std_error, 0.0);
  }
}

TEST(MonteCarlo, MatchesEnumeration) {
  for (auto kind : {RandomModelKind::BA, RandomModelKind::Uniform}) {
    for (int t : {2, 4, 6}) {
      const auto est = expected_wiener_monte_carlo(kind, t, 50'000, 17);
      const double exact = to_double(expected_wiener_enumeration(kind, t));
      EXPECT_LT(std::abs(est.mean - exact), 4 * est.std_error) << kind_name(kind) << " t=" << t;
    }
  }
}

TEST(MonteCarlo, NeedsTwoTrials) {
  EXPECT_THROW(expected_wiener_monte_carlo(RandomModelKind::BA, 2, 1, 0), ParameterError);
}

TEST(SampleWiener, MatchesExplicitTrees) {
  const auto values = sample_wiener_values(RandomModelKind::Uniform, 7, 20, 99);
  ASSERT_EQ(values.size(), 20u);
  for (std::uint64_t i = 0; i < 20; ++i) {
    const Tree t = generate_uniform_tree(
        {RandomModelKind::Uniform, 7, detail::substream_seed(99, detail::kTreeStream, i)});
    EXPECT_EQ(Integer(values[i]), oracle::wiener(t));
  }
}

TEST(Report, UniformT2) {
  const auto r = build_expectation_report(RandomModelKind::Uniform, 2, 20'000, 7);
  ASSERT_TRUE(r.enumeration);
  EXPECT_EQ(*r.enumeration, Rational(29, 3));
  ASSERT_TRUE(r.recurrence);
  ASSERT_TRUE(r.closed_form);
  ASSERT_TRUE(r.monte_carlo);
  EXPECT_NEAR(*r.closed_form_wiener, *r.closed_form * 6, 1e-12);
  EXPECT_LT(std::abs(r.monte_carlo->mean - 29.0 / 3), 4 * r.monte_carlo->std_error);
}

TEST(Report, BaT0) {
  const auto r = build_expectation_report(RandomModelKind::BA, 0, 0, 0);
  EXPECT_FALSE(r.closed_form);
  EXPECT_FALSE(r.monte_carlo);
  EXPECT_FALSE(r.recurrence);
  ASSERT_TRUE(r.enumeration);
  EXPECT_EQ(*r.enumeration, 1);
}

TEST(Report, LargeTSkipsEnumeration) {
  const auto r = build_expectation_report(RandomModelKind::BA, 50, 100, 1);
  EXPECT_FALSE(r.enumeration);
  EXPECT_TRUE(r.monte_carlo);
}

}  // namespace
}  // namespace rgt
