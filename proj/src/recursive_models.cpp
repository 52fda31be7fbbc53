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

#include "rgt/recursive_models.hpp"

#include "rgt/errors.hpp"
#include "rgt/wiener.hpp"

namespace rgt {

ModelParams ModelParams::from_seed(const Tree& seed, Family family, int m, int t) {
  ModelParams p;
  p.family = family;
  p.m = m;
  p.seed_n = seed.num_vertices();
  p.seed_W = wiener_index(seed);
  p.t = t;
  p.seed_max_degree = seed.max_degree();
  return p;
}

void validate_model_params(const ModelParams& p) {
  if (p.m < 1) throw ParameterError("order m must be >= 1");
  if (p.t < 0) throw ParameterError("generation t must be >= 0");
  if (p.seed_n < 2) throw DomainError("seed needs n >= 2");
  if (!extremal_bounds(p.seed_n).contains(p.seed_W)) {
    throw DomainError("seed Wiener index " + p.seed_W.str() + " is impossible for a tree on " +
                      p.seed_n.str() + " vertices");
  }
  if (p.family == Family::TypeIII && p.m < 2) {
    throw ParameterError("type3 models need m >= 2");
  }
  if (p.seed_max_degree && is_saturating(p.family) && *p.seed_max_degree > p.m) {
    throw ParameterError(std::string(family_name(p.family)) + ":" + std::to_string(p.m) +
                         " needs m >= seed max degree " + std::to_string(*p.seed_max_degree));
  }
  // after one step every subdivision vertex has degree 2
  if (p.family == Family::VFractal && p.t >= 2 && p.m < 2) {
    throw ParameterError("vfractal needs m >= 2 beyond the first generation");
  }
}

FamilyCoefficients family_coefficients(Family family, int m_int) {
  const Rational m = m_int;
  switch (family) {
    case Family::Subdivision:
      return {(m + 1) * (m + 1) * (m + 1), m * (m + 1) * (m + 1) / 2, m * (m + 1) * (2 * m + 1) / 3,
              m * (m * m - 1) / 6, -1, +1, -1};
    case Family::TypeII:
      return {(2 * m + 1) * (2 * m + 1), m * (2 * m + 1), m * (5 * m + 3), m * (3 * m + 2), +1, -1, +1};
    case Family::TypeI:
      return {(m + 1) * (m + 1), m * (m + 1), m, 0, +1, -1, +1};
    case Family::TFractal:
      return {2 * (m + 2) * (m + 2), m + 2, (m - 1) * (m + 2), m * m + 2 * m, -1, -1, +1};
    case Family::VFractal:
      return {3 * (m + 1) * (m + 1), (m - 2) * (m + 1), m + 2, 0, +1, +1, +1};
    case Family::TypeIII:
      return {(m - 1) * (m - 1), (m - 1) * (m - 1), 2 * (m - 1), 1, +1, +1, +1};
  }
  throw ParameterError("unknown family");
}

namespace {

Integer closed_form_size(Family family, int m_int, const Integer& n, int t) {
  const Integer m = m_int;
  const auto tt = static_cast<std::uint64_t>(t);
  switch (family) {
    case Family::Subdivision: return (n - 1) * ipow(m + 1, tt) + 1;
    case Family::TypeII: return (n - 1) * ipow(2 * m + 1, tt) + 1;
    case Family::TypeI: return n * ipow(m + 1, tt);
    case Family::TFractal: return (n - 1) * ipow(m + 2, tt) + 1;
    case Family::VFractal: return n * ipow(m + 1, tt);
    case Family::TypeIII: {
      if (m_int == 2) return n + 2 * Integer(t);
      const Rational shift(Integer(2), m - 2);
      return require_integer((Rational(n) + shift) * Rational(ipow(m - 1, tt)) - shift, "type3 size");
    }
  }
  throw ParameterError("unknown family");
}

}  // namespace

Integer model_size(const ModelParams& p) {
  validate_model_params(p);
  return closed_form_size(p.family, p.m, p.seed_n, p.t);
}

std::vector<Integer> model_size_sequence(const ModelParams& p) {
  validate_model_params(p);
  std::vector<Integer> sizes{p.seed_n};
  Integer n = p.seed_n, e = p.seed_n - 1;
  for (int s = 0; s < p.t; ++s) {
    std::tie(n, e) = size_after({p.family, p.m}, n, e);
    sizes.push_back(n);
  }
  return sizes;
}

std::vector<Integer> model_wiener_sequence(const ModelParams& p) {
  const auto sizes = model_size_sequence(p);
  std::vector<Integer> W{p.seed_W};
  for (int s = 0; s < p.t; ++s) W.push_back(wiener_one_step(p.family, p.m, W.back(), sizes[s]));
  return W;
}

Integer model_wiener(const ModelParams& p) { return model_wiener_sequence(p).back(); }

Rational model_mht_unrolled(const ModelParams& p) {
  validate_model_params(p);
  const FamilyCoefficients c = family_coefficients(p.family, p.m);
  // sizes by the closed-form law, index = generation
  std::vector<Integer> n(static_cast<std::size_t>(p.t) + 1);
  for (int s = 0; s <= p.t; ++s) n[s] = closed_form_size(p.family, p.m, p.seed_n, s);

  Rational s2 = 0, s1 = 0, s0 = 0, f_pow = 1;
  for (int i = 0; i < p.t; ++i) {
    const Integer& ni = n[p.t - 1 - i];
    s2 += f_pow * Rational(ni * ni);
    s1 += f_pow * Rational(ni);
    s0 += f_pow;
    f_pow *= c.f;
  }
  // f_pow is now f^t
  const Rational bracket = f_pow * Rational(p.seed_W) + c.sign_g * c.g * s2 + c.sign_h * c.h * s1 +
                           c.sign_l * c.l * s0;
  return Rational(2) * bracket / Rational(n[p.t]);
}

Rational model_mht(const ModelParams& p) {
  const Rational unrolled = model_mht_unrolled(p);
  const auto sizes = model_size_sequence(p);
  const Integer W = model_wiener(p);
  const Rational direct(2 * W, sizes.back());
  if (unrolled != direct) {
    throw FormulaViolation("mean hitting time routes disagree for " +
                           std::string(family_name(p.family)) + ":" + std::to_string(p.m) +
                           " t=" + std::to_string(p.t) + ": unrolled " + to_string(unrolled) +
                           " vs 2W/n " + to_string(direct));
  }
  if (sizes.back() != closed_form_size(p.family, p.m, p.seed_n, p.t)) {
    throw FormulaViolation("closed-form size disagrees with iterated count law");
  }
  return direct;
}

BoundsTrajectory check_bounds_trajectory(const ModelParams& p) {
  const auto sizes = model_size_sequence(p);
  const auto W = model_wiener_sequence(p);
  BoundsTrajectory out;
  for (int s = 0; s <= p.t; ++s) {
    const WienerBounds b = extremal_bounds(sizes[s]);
    BoundsRow row;
    row.generation = s;
    row.n = sizes[s];
    row.wiener = W[s];
    row.lower = b.lower;
    row.upper = b.upper;
    row.within = b.contains(W[s]);
    row.lower_tight = W[s] == b.lower;
    row.upper_tight = W[s] == b.upper;
    out.rows.push_back(std::move(row));
  }
  return out;
}

Tree construct_model(const Tree& seed, Family family, int m, int t) {
  if (t < 0) throw ParameterError("generation t must be >= 0");
  const Integer n = pipeline_size(seed.num_vertices(), {{family, m}}, t);
  if (n > kMaxExplicitVertices) {
    throw SizeLimitError("generation " + std::to_string(t) + " has " + n.str() +
                         " vertices; explicit construction is limited to " +
                         std::to_string(kMaxExplicitVertices));
  }
  return apply_generations(seed, {{family, m}}, t);
}

}  // namespace rgt
