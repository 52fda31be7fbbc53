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

#include <array>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rgt/exact.hpp"
#include "rgt/graph.hpp"

namespace rgt {

/// The six primitive growth operations.
enum class Family { Subdivision, TypeI, TFractal, VFractal, TypeII, TypeIII };

inline constexpr std::array<Family, 6> kAllFamilies = {
    Family::Subdivision, Family::TypeI,  Family::TFractal,
    Family::VFractal,    Family::TypeII, Family::TypeIII};

/// `subdiv`, `type1`, `tfractal`, `vfractal`, `type2`, `type3`.
std::string_view family_name(Family f);
/// Inverse of family_name; throws ParameterError for unknown names.
Family parse_family(std::string_view name);

/// True for families whose order must be at least the tree's max degree.
constexpr bool is_saturating(Family f) { return f == Family::VFractal || f == Family::TypeIII; }

struct OpSpec {
  Family family = Family::Subdivision;
  int m = 1;

  friend bool operator==(const OpSpec&, const OpSpec&) = default;
};

/// "family:m", e.g. "tfractal:2".
std::string to_string(const OpSpec& op);
OpSpec parse_op_spec(std::string_view text);
/// Comma-separated OpSpecs; an empty string is the empty pipeline.
std::vector<OpSpec> parse_pipeline(std::string_view text);
std::string to_string(const std::vector<OpSpec>& pipeline);

/// Exact (|V'|, |E'|) after one application to a graph with n vertices, e edges.
std::pair<Integer, Integer> size_after(const OpSpec& op, const Integer& n, const Integer& e);

// Individual operations. Canonical numbering: original ids are kept; new ids
// follow, created edge by edge in lexicographic edge order for edge-driven
// insertions, then vertex by vertex in increasing id for leaf attachment.

/// Every edge becomes a path through m new vertices.
Tree apply_subdivision(const Tree& t, int m);
/// m pendant leaves on every vertex.
Tree apply_type1(const Tree& t, int m);
/// A midpoint on every edge, with m pendant leaves on the midpoint.
Tree apply_tfractal(const Tree& t, int m);
/// Two vertices on every edge, then m - k_u leaves on every original vertex u.
Tree apply_vfractal(const Tree& t, int m);
/// m * k_u pendant leaves on every vertex u.
Tree apply_type2(const Tree& t, int m);
/// m - k_u pendant leaves on every vertex u.
Tree apply_type3(const Tree& t, int m);

Tree apply(const Tree& t, const OpSpec& op);

/// Left-to-right application. Failures are rethrown as PipelineError(index).
/// Refuses (SizeLimitError) any stage whose output would exceed kMaxExplicitVertices.
Tree apply_pipeline(const Tree& t, const std::vector<OpSpec>& ops);

/// Runs the pipeline `generations` times.
Tree apply_generations(const Tree& t, const std::vector<OpSpec>& ops, int generations);

/// Vertex count of apply_generations without building anything.
Integer pipeline_size(Integer n, const std::vector<OpSpec>& ops, int generations);

}  // namespace rgt
