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

#include <cmath>
#include <limits>
#include <random>

#include <omp.h>

#include "rgt/errors.hpp"
#include "rgt/hitting_time.hpp"
#include "rgt/wiener.hpp"

namespace rgt {

std::string_view kind_name(RandomModelKind k) {
  return k == RandomModelKind::BA ? "ba" : "uniform";
}

RandomModelKind parse_kind(std::string_view name) {
  if (name == "ba") return RandomModelKind::BA;
  if (name == "uniform") return RandomModelKind::Uniform;
  throw ParameterError("unknown random model '" + std::string(name) + "' (expected ba or uniform)");
}

namespace {

void require_generations(int t) {
  if (t < 0) throw ParameterError("generations t must be >= 0");
  if (static_cast<std::size_t>(t) + 2 > kMaxExplicitVertices) {
    throw SizeLimitError("random tree too large for explicit construction");
  }
}

}  // namespace

Tree generate_ba_tree(const RandomModelSpec& spec) {
  require_generations(spec.t);
  std::mt19937_64 rng(spec.rng_seed);
  std::vector<Edge> edges{{0, 1}};
  // each vertex appears once per incident edge, so a uniform pick is degree-proportional
  std::vector<Vertex> endpoints{0, 1};
  for (int s = 1; s <= spec.t; ++s) {
    const Vertex fresh = s + 1;
    std::uniform_int_distribution<std::size_t> pick(0, endpoints.size() - 1);
    const Vertex target = endpoints[pick(rng)];
    edges.push_back({target, fresh});
    endpoints.push_back(target);
    endpoints.push_back(fresh);
  }
  return validate_tree(Graph::from_edges(static_cast<std::size_t>(spec.t) + 2, edges));
}

Tree generate_uniform_tree(const RandomModelSpec& spec) {
  require_generations(spec.t);
  std::mt19937_64 rng(spec.rng_seed);
  std::vector<Edge> edges{{0, 1}};
  for (int s = 1; s <= spec.t; ++s) {
    const Vertex fresh = s + 1;
    std::uniform_int_distribution<Vertex> pick(0, fresh - 1);
    edges.push_back({pick(rng), fresh});
  }
  return validate_tree(Graph::from_edges(static_cast<std::size_t>(spec.t) + 2, edges));
}

Tree generate_random_tree(const RandomModelSpec& spec) {
  return spec.kind == RandomModelKind::BA ? generate_ba_tree(spec) : generate_uniform_tree(spec);
}

namespace {

struct Enumerator {
  RandomModelKind kind;
  int t;
  std::vector<Edge> edges;
  std::vector<int> degree;
  Rational total = 0;

  void run(int step, const Rational& prob) {
    const auto n = static_cast<Vertex>(step + 1);  // vertices present before this step
    if (step > t) {
      const Graph g = Graph::from_edges(static_cast<std::size_t>(n), edges);
      total += prob * Rational(wiener_index(g));
      return;
    }
    const int degree_sum = 2 * static_cast<int>(edges.size());
    for (Vertex target = 0; target < n; ++target) {
      const Rational p = kind == RandomModelKind::BA ? Rational(degree[target], degree_sum)
                                                     : Rational(1, static_cast<int>(n));
      edges.push_back({target, n});
      ++degree[target];
      degree.push_back(1);
      run(step + 1, prob * p);
      degree.pop_back();
      --degree[target];
      edges.pop_back();
    }
  }
};

}  // namespace

Rational expected_wiener_enumeration(RandomModelKind kind, int t) {
  if (t < 0) throw ParameterError("generations t must be >= 0");
  if (t > kMaxEnumerationT) {
    throw SizeLimitError("enumeration is limited to t <= " + std::to_string(kMaxEnumerationT) +
                         " ((t+1)! histories)");
  }
  Enumerator e{kind, t, {{0, 1}}, {1, 1}, 0};
  e.run(1, Rational(1));
  return e.total;
}

std::vector<std::uint64_t> sample_wiener_values(RandomModelKind kind, int t, std::uint64_t trials,
                                                std::uint64_t rng_seed) {
  require_generations(t);
  std::vector<std::uint64_t> values(trials);
  bool failed = false;
#pragma omp parallel for schedule(dynamic, 64) reduction(|| : failed)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(trials); ++i) {
    const RandomModelSpec spec{kind, t, detail::substream_seed(rng_seed, detail::kTreeStream, static_cast<std::uint64_t>(i))};
    const Tree tree = generate_random_tree(spec);
    // wiener_index_edge_cut is serial, so no nested parallel region here
    const Integer W = wiener_index_edge_cut(tree);
    if (W > std::numeric_limits<std::uint64_t>::max()) failed = true;
    else values[i] = W.convert_to<std::uint64_t>();
  }
  if (failed) throw NumericError("Wiener index overflowed 64 bits");
  return values;
}

MonteCarloEstimate expected_wiener_monte_carlo(RandomModelKind kind, int t, std::uint64_t trials,
                                               std::uint64_t rng_seed) {
  if (trials < 2) throw ParameterError("Monte Carlo needs at least 2 trials");
  const auto values = sample_wiener_values(kind, t, trials, rng_seed);
  long double sum = 0, sum_sq = 0;
  for (std::uint64_t v : values) {
    sum += static_cast<long double>(v);
    sum_sq += static_cast<long double>(v) * static_cast<long double>(v);
  }
  const long double n = static_cast<long double>(trials);
  const long double mean = sum / n;
  long double var = (sum_sq - sum * sum / n) / (n - 1);
  if (var < 0) var = 0;
  return {static_cast<double>(mean), static_cast<double>(std::sqrt(var / n)), trials};
}

Rational uniform_wiener_recurrence(int t) {
  if (t < 0) throw ParameterError("generations t must be >= 0");
  Rational W = 1;
  for (int s = 1; s <= t; ++s) {
    const Rational growth = 1 + Rational(1, s + 1);
    W = growth * growth * W + (s + 1) + Rational(s, s + 1);
  }
  return W;
}

double uniform_mean_path_closed_form(int t) {
  if (t < 0) throw ParameterError("generations t must be >= 0");
  const double T = t;
  double leading = 1.0;
  for (int i = 0; i <= t; ++i) leading *= (i + 2.0) / (i + 1.0);
  double tail = 0.0;
  for (int i = 1; i <= t - 1; ++i) {
    // the printed inner product runs over j but its factor depends only on i
    double factor = 1.0;
    for (int j = i + 1; j <= t; ++j) factor *= (i + 2.0) / (i + 1.0);
    tail += (i + 1.0 + i / (i + 1.0)) * factor;
  }
  return 2.0 / ((T + 2) * (T + 1)) * (T + 1 + T / (T + 1) + leading + tail);
}

double ba_mean_path_closed_form(int t) {
  if (t < 1) throw DomainError("BA closed form is defined for t >= 1");
  const double T = t;
  auto sq = [](double x) { return x * x; };
  // suffix[i] = prod_{j=i+1}^{t} ((j+1)/j)^2, built from the top down
  double suffix = 1.0;
  double tail = 0.0;
  for (int i = t - 1; i >= 2; --i) {
    suffix *= sq((i + 2.0) / (i + 1.0));
    tail += ((i + 1.0) / 2.0 - (2.0 * i + 1.0) / (4.0 * i * i)) * suffix;
  }
  double leading = 1.0;
  for (int i = 2; i <= t; ++i) leading *= sq((i + 1.0) / i);
  return 2.0 / ((T + 2) * (T + 1)) *
         ((T + 1) / 2.0 - (2 * T + 1) / (4 * T * T) + 4.0 * leading + tail);
}

ExpectationReport build_expectation_report(RandomModelKind kind, int t, std::uint64_t trials,
                                           std::uint64_t rng_seed) {
  if (t < 0) throw ParameterError("generations t must be >= 0");
  ExpectationReport r;
  r.kind = kind;
  r.t = t;
  r.rng_seed = rng_seed;
  const double pairs = (t + 2.0) * (t + 1.0) / 2.0;
  if (kind == RandomModelKind::Uniform) {
    r.closed_form = uniform_mean_path_closed_form(t);
    r.recurrence = uniform_wiener_recurrence(t);
  } else if (t >= 1) {
    r.closed_form = ba_mean_path_closed_form(t);
  } else {
    r.notes.push_back("BA closed form undefined at t = 0");
  }
  if (r.closed_form) r.closed_form_wiener = *r.closed_form * pairs;
  if (kind == RandomModelKind::BA) {
    r.notes.push_back("attachment probability is k_v / (current degree sum), i.e. k_v / 2s at step s; "
                      "no standalone BA recurrence is evaluated");
  }
  if (t <= kMaxEnumerationT) r.enumeration = expected_wiener_enumeration(kind, t);
  if (trials >= 2) r.monte_carlo = expected_wiener_monte_carlo(kind, t, trials, rng_seed);
  r.notes.push_back("closed_form and recurrence are evaluated as published and are not expected "
                    "to equal the enumeration value");
  return r;
}

}  // namespace rgt
