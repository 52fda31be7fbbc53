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

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <set>

#include "oracle.hpp"
#include "rgt/errors.hpp"
#include "rgt/growth.hpp"

namespace rgt {
namespace {

// Exact H(s -> t) by solving the first-step equations with Gaussian elimination.
double first_step_hitting_time(const Graph& g, Vertex s, Vertex t) {
  const int n = static_cast<int>(g.num_vertices());
  std::vector<std::vector<double>> a(n, std::vector<double>(n + 1, 0.0));
  for (int u = 0; u < n; ++u) {
    a[u][u] = 1.0;
    if (u == t) continue;
    const double k = g.degree(u);
    for (Vertex w : g.neighbors(u)) a[u][w] -= 1.0 / k;
    a[u][n] = 1.0;
  }
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r)
      if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
    std::swap(a[col], a[piv]);
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      const double f = a[r][col] / a[col][col];
      for (int c = col; c <= n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  return a[s][n] / a[s][s];
}

double mean_first_step(const Graph& g) {
  const auto n = static_cast<Vertex>(g.num_vertices());
  double total = 0;
  for (Vertex s = 0; s < n; ++s)
    for (Vertex t = 0; t < n; ++t)
      if (s != t) total += first_step_hitting_time(g, s, t);
  return total / (static_cast<double>(n) * (n - 1));
}

TEST(TreeFormula, Examples) {
  EXPECT_EQ(mean_hitting_time_tree(build_path(2)), 1);
  EXPECT_EQ(mean_hitting_time_tree(build_path(3)), Rational(8, 3));
  EXPECT_EQ(mean_hitting_time_tree(build_star(4)), Rational(9, 2));
}

TEST(TreeFormula, MatchesFirstStepAnalysis) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 11);
    const Tree t = random_attachment_tree(n, rng());
    EXPECT_NEAR(to_double(mean_hitting_time_tree(t)), mean_first_step(t.graph()), 1e-9);
  }
}

TEST(Spectrum, SmallGraphs) {
  auto p2 = laplacian_spectrum(build_path(2).graph()).eigenvalues;
  EXPECT_NEAR(p2[0], 0, 1e-12);
  EXPECT_NEAR(p2[1], 2, 1e-12);
  const auto p3 = laplacian_spectrum(build_path(3).graph()).eigenvalues;
  const double want3[] = {0, 1, 3};
  for (int i = 0; i < 3; ++i) EXPECT_NEAR(p3[i], want3[i], 1e-12);
  const auto s3 = laplacian_spectrum(build_star(4).graph()).eigenvalues;
  const double want4[] = {0, 1, 1, 4};
  for (int i = 0; i < 4; ++i) EXPECT_NEAR(s3[i], want4[i], 1e-12);
}

TEST(Spectrum, OneZeroPerComponent) {
  const Graph two = oracle::from_pairs(4, {{0, 1}, {2, 3}});
  EXPECT_EQ(laplacian_spectrum(two).near_zero_count(), 2u);
  EXPECT_THROW(mean_hitting_time_spectral(two), DisconnectedGraphError);
}

TEST(Spectrum, SizeCap) { EXPECT_THROW(laplacian_spectrum(build_path(2001).graph()), SizeLimitError); }

TEST(SpectralFormula, Examples) {
  EXPECT_NEAR(mean_hitting_time_spectral(build_path(2).graph()), 1.0, 1e-12);
  EXPECT_NEAR(mean_hitting_time_spectral(build_path(3).graph()), 8.0 / 3.0, 1e-9);
  EXPECT_NEAR(mean_hitting_time_spectral(build_star(4).graph()), 4.5, 1e-9);
}

TEST(SpectralFormula, AgreesWithTreeFormula) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 150);
    const Tree t = random_attachment_tree(n, rng());
    const double exact = to_double(mean_hitting_time_tree(t));
    EXPECT_NEAR(mean_hitting_time_spectral(t.graph()), exact, 1e-6 * exact) << "n=" << n;
  }
}

TEST(SpectralFormula, AgreesWithFirstStepOnCyclicGraphs) {
  // K4 minus an edge, and a 5-cycle
  const Graph g1 = oracle::from_pairs(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
  const Graph g2 = oracle::from_pairs(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
  EXPECT_NEAR(mean_hitting_time_spectral(g1), mean_first_step(g1), 1e-9);
  EXPECT_NEAR(mean_hitting_time_spectral(g2), mean_first_step(g2), 1e-9);
}

TEST(Simulation, ForcedMoves) {
  WalkConfig cfg;
  cfg.trials = 1000;
  for (std::uint64_t seed : {0ULL, 1ULL, 99ULL}) {
    cfg.rng_seed = seed;
    const auto p2 = simulate_hitting_time(build_path(2).graph(), 0, 1, cfg);
    EXPECT_EQ(p2.mean, 1.0);
    EXPECT_EQ(p2.std_error, 0.0);
    EXPECT_EQ(simulate_hitting_time(build_star(4).graph(), 2, 0, cfg).mean, 1.0);
    EXPECT_EQ(simulate_mean_hitting_time(build_path(2).graph(), cfg).mean, 1.0);
  }
}

TEST(Simulation, P3EndToEnd) {
  WalkConfig cfg;
  cfg.trials = 50'000;
  cfg.rng_seed = 3;
  const auto est = simulate_hitting_time(build_path(3).graph(), 0, 2, cfg);
  EXPECT_NEAR(est.mean, 4.0, 4 * est.std_error);
  EXPECT_EQ(est.walks, 50'000u);
}

TEST(Simulation, MeanOverPairs) {
  WalkConfig cfg;
  cfg.trials = 100'000;
  cfg.rng_seed = 11;
  for (const Tree& t : {build_path(3), build_star(4)}) {
    const auto est = simulate_mean_hitting_time(t.graph(), cfg);
    const double exact = to_double(mean_hitting_time_tree(t));
    EXPECT_GT(est.std_error, 0);
    EXPECT_LT(std::abs(est.mean - exact), 3 * est.std_error) << est.mean << " vs " << exact;
  }
}

TEST(Simulation, ReproducibleUnderSeed) {
  WalkConfig cfg;
  cfg.trials = 5000;
  cfg.rng_seed = 42;
  const Graph g = random_attachment_tree(9, 4).graph();
  const auto a = simulate_mean_hitting_time(g, cfg);
  const auto b = simulate_mean_hitting_time(g, cfg);
  EXPECT_EQ(a.mean, b.mean);
  EXPECT_EQ(a.std_error, b.std_error);
  cfg.rng_seed = 43;
  EXPECT_NE(simulate_mean_hitting_time(g, cfg).mean, a.mean);
}

TEST(Simulation, StepCap) {
  WalkConfig cfg;
  cfg.trials = 100;
  cfg.max_steps = 3;
  EXPECT_THROW(simulate_hitting_time(build_path(30).graph(), 0, 29, cfg), WalkCapError);
}

TEST(Simulation, BadInputs) {
  WalkConfig cfg;
  EXPECT_THROW(simulate_hitting_time(build_path(3).graph(), 1, 1, cfg), ParameterError);
  EXPECT_THROW(simulate_hitting_time(build_path(3).graph(), 0, 3, cfg), ParameterError);
  EXPECT_THROW(simulate_mean_hitting_time(oracle::from_pairs(4, {{0, 1}, {2, 3}}), cfg), DisconnectedGraphError);
  cfg.trials = 0;
  EXPECT_THROW(simulate_mean_hitting_time(build_path(3).graph(), cfg), ParameterError);
}

TEST(Substreams, DistinctAcrossPairsAndTrials) {
  std::set<std::uint64_t> seen;
  for (std::uint64_t a = 0; a < 50; ++a)
    for (std::uint64_t b = 0; b < 50; ++b) seen.insert(detail::substream_seed(7, a, b));
  EXPECT_EQ(seen.size(), 2500u);
}

}  // namespace
}  // namespace rgt
