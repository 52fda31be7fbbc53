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

#include "rgt/growth.hpp"

#include <charconv>

#include "rgt/errors.hpp"

namespace rgt {

std::string_view family_name(Family f) {
  switch (f) {
    case Family::Subdivision: return "subdiv";
    case Family::TypeI: return "type1";
    case Family::TFractal: return "tfractal";
    case Family::VFractal: return "vfractal";
    case Family::TypeII: return "type2";
    case Family::TypeIII: return "type3";
  }
  return "?";
}

Family parse_family(std::string_view name) {
  for (Family f : kAllFamilies) {
    if (family_name(f) == name) return f;
  }
  throw ParameterError("unknown operation family '" + std::string(name) +
                       "' (expected subdiv, type1, tfractal, vfractal, type2 or type3)");
}

std::string to_string(const OpSpec& op) {
  return std::string(family_name(op.family)) + ":" + std::to_string(op.m);
}

OpSpec parse_op_spec(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw ParameterError("operation '" + std::string(text) + "' must look like family:m");
  }
  OpSpec op;
  op.family = parse_family(text.substr(0, colon));
  std::string_view digits = text.substr(colon + 1);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), op.m);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || op.m < 1) {
    throw ParameterError("operation '" + std::string(text) + "' needs a positive integer order m");
  }
  return op;
}

std::vector<OpSpec> parse_pipeline(std::string_view text) {
  std::vector<OpSpec> ops;
  if (text.empty()) return ops;
  std::size_t pos = 0;
  while (true) {
    const auto comma = text.find(',', pos);
    ops.push_back(parse_op_spec(text.substr(pos, comma - pos)));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return ops;
}

std::string to_string(const std::vector<OpSpec>& pipeline) {
  std::string out;
  for (const OpSpec& op : pipeline) {
    if (!out.empty()) out += ',';
    out += to_string(op);
  }
  return out;
}

std::pair<Integer, Integer> size_after(const OpSpec& op, const Integer& n, const Integer& e) {
  const Integer m = op.m;
  switch (op.family) {
    case Family::Subdivision: return {n + m * e, (m + 1) * e};
    case Family::TypeI: return {(m + 1) * n, e + m * n};
    case Family::TFractal: return {n + (m + 1) * e, (m + 2) * e};
    case Family::VFractal: return {(m + 1) * n, e + m * n};
    case Family::TypeII: return {n + 2 * m * e, (2 * m + 1) * e};
    case Family::TypeIII: return {(m + 1) * n - 2 * e, m * n - e};
  }
  return {n, e};
}

namespace {

void require_order(int m) {
  if (m < 1) throw ParameterError("order m must be >= 1, got " + std::to_string(m));
}

void require_saturation(const Tree& t, int m) {
  const auto n = static_cast<Vertex>(t.num_vertices());
  for (Vertex u = 0; u < n; ++u) {
    if (t.degree(u) > m) throw SaturationError(u, t.degree(u), m);
  }
}

void require_capacity(const Tree& t, const OpSpec& op) {
  auto [nv, ne] = size_after(op, t.num_vertices(), t.num_edges());
  if (nv > kMaxExplicitVertices) {
    throw SizeLimitError(to_string(op) + " would create " + nv.str() + " vertices (limit " +
                         std::to_string(kMaxExplicitVertices) + ")");
  }
}

/// Accumulates edges and hands out fresh vertex ids.
class Builder {
 public:
  explicit Builder(const Tree& t) : next_(static_cast<Vertex>(t.num_vertices())) {}

  Vertex fresh() { return next_++; }
  void link(Vertex a, Vertex b) { edges_.push_back({std::min(a, b), std::max(a, b)}); }
  void attach_leaves(Vertex u, std::int64_t count) {
    for (std::int64_t i = 0; i < count; ++i) link(u, fresh());
  }
  Tree finish() && { return validate_tree(Graph::from_edges(static_cast<std::size_t>(next_), edges_)); }

 private:
  Vertex next_;
  std::vector<Edge> edges_;
};

void subdivide_edges(const Tree& t, int inner, Builder& b) {
  for (const Edge& e : t.graph().edges()) {
    Vertex prev = e.u;
    for (int i = 0; i < inner; ++i) {
      const Vertex w = b.fresh();
      b.link(prev, w);
      prev = w;
    }
    b.link(prev, e.v);
  }
}

template <typename LeafCount>
Tree attach_to_every_vertex(const Tree& t, LeafCount count) {
  Builder b(t);
  for (const Edge& e : t.graph().edges()) b.link(e.u, e.v);
  const auto n = static_cast<Vertex>(t.num_vertices());
  for (Vertex u = 0; u < n; ++u) b.attach_leaves(u, count(u));
  return std::move(b).finish();
}

}  // namespace

Tree apply_subdivision(const Tree& t, int m) {
  require_order(m);
  require_capacity(t, {Family::Subdivision, m});
  Builder b(t);
  subdivide_edges(t, m, b);
  return std::move(b).finish();
}

Tree apply_type1(const Tree& t, int m) {
  require_order(m);
  require_capacity(t, {Family::TypeI, m});
  return attach_to_every_vertex(t, [m](Vertex) { return m; });
}

Tree apply_tfractal(const Tree& t, int m) {
  require_order(m);
  require_capacity(t, {Family::TFractal, m});
  Builder b(t);
  for (const Edge& e : t.graph().edges()) {
    const Vertex w = b.fresh();
    b.link(e.u, w);
    b.link(w, e.v);
    b.attach_leaves(w, m);
  }
  return std::move(b).finish();
}

Tree apply_vfractal(const Tree& t, int m) {
  require_order(m);
  require_saturation(t, m);
  require_capacity(t, {Family::VFractal, m});
  Builder b(t);
  subdivide_edges(t, 2, b);
  const auto n = static_cast<Vertex>(t.num_vertices());
  for (Vertex u = 0; u < n; ++u) b.attach_leaves(u, m - t.degree(u));
  return std::move(b).finish();
}

Tree apply_type2(const Tree& t, int m) {
  require_order(m);
  require_capacity(t, {Family::TypeII, m});
  return attach_to_every_vertex(t, [&](Vertex u) { return std::int64_t{m} * t.degree(u); });
}

Tree apply_type3(const Tree& t, int m) {
  require_order(m);
  require_saturation(t, m);
  require_capacity(t, {Family::TypeIII, m});
  return attach_to_every_vertex(t, [&](Vertex u) { return m - t.degree(u); });
}

Tree apply(const Tree& t, const OpSpec& op) {
  switch (op.family) {
    case Family::Subdivision: return apply_subdivision(t, op.m);
    case Family::TypeI: return apply_type1(t, op.m);
    case Family::TFractal: return apply_tfractal(t, op.m);
    case Family::VFractal: return apply_vfractal(t, op.m);
    case Family::TypeII: return apply_type2(t, op.m);
    case Family::TypeIII: return apply_type3(t, op.m);
  }
  throw ParameterError("unknown family");
}

Tree apply_pipeline(const Tree& t, const std::vector<OpSpec>& ops) {
  Tree current = t;
  for (std::size_t i = 0; i < ops.size(); ++i) {
    try {
      current = apply(current, ops[i]);
    } catch (const Error& e) {
      throw PipelineError(i, to_string(ops[i]) + ": " + e.what());
    }
  }
  return current;
}

Integer pipeline_size(Integer n, const std::vector<OpSpec>& ops, int generations) {
  Integer e = n - 1;
  for (int g = 0; g < generations; ++g) {
    for (const OpSpec& op : ops) std::tie(n, e) = size_after(op, n, e);
  }
  return n;
}

Tree apply_generations(const Tree& t, const std::vector<OpSpec>& ops, int generations) {
  if (generations < 0) throw ParameterError("generations must be >= 0");
  std::vector<OpSpec> stages;
  stages.reserve(ops.size() * static_cast<std::size_t>(generations));
  for (int g = 0; g < generations; ++g) stages.insert(stages.end(), ops.begin(), ops.end());
  return apply_pipeline(t, stages);
}

}  // namespace rgt
