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

#include "rgt/report_json.hpp"

#include "rgt/errors.hpp"

namespace rgt {

json rational_to_json(const Rational& q) {
  return json{{"num", numerator(q).str()}, {"den", denominator(q).str()}};
}

Rational rational_from_json(const json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den") || !j["num"].is_string() ||
      !j["den"].is_string()) {
    throw ParseError(0, "rational must be {\"num\": string, \"den\": string}");
  }
  try {
    const Integer num(j["num"].get<std::string>());
    const Integer den(j["den"].get<std::string>());
    if (den == 0) throw ParseError(0, "rational with zero denominator");
    return Rational(num, den);
  } catch (const std::runtime_error& e) {
    throw ParseError(0, std::string("bad rational digits: ") + e.what());
  }
}

json integer_to_json(const Integer& z) {
  static const Integer kSafe = Integer(1) << 53;
  if (abs(z) < kSafe) return z.convert_to<std::int64_t>();
  return z.str();
}

json to_json(const MetricsReport& r) {
  json j;
  j["label"] = r.label;
  j["n"] = r.n;
  j["edges"] = r.edges;
  j["is_tree"] = r.is_tree;
  j["wiener"] = integer_to_json(r.wiener);
  j["mean_shortest_path"] = rational_to_json(r.mean_shortest_path);
  if (r.mean_hitting_time) j["mean_hitting_time"] = rational_to_json(*r.mean_hitting_time);
  if (r.degree_wiener_mult) j["degree_wiener_mult"] = integer_to_json(*r.degree_wiener_mult);
  if (r.degree_wiener_add) j["degree_wiener_add"] = integer_to_json(*r.degree_wiener_add);
  if (r.line_graph_wiener) j["line_graph_wiener"] = integer_to_json(*r.line_graph_wiener);
  if (r.bounds) {
    j["bounds"] = {{"lower", integer_to_json(r.bounds->lower)},
                   {"upper", integer_to_json(r.bounds->upper)},
                   {"within", r.bounds->within}};
  }
  if (r.mean_hitting_time_spectral) j["mean_hitting_time_spectral"] = *r.mean_hitting_time_spectral;
  if (r.mean_hitting_time_simulated) {
    const auto& s = *r.mean_hitting_time_simulated;
    j["mean_hitting_time_simulated"] = {
        {"mean", s.mean}, {"std_error", s.std_error}, {"walks", s.walks}, {"rng_seed", s.rng_seed}};
  }
  j["notes"] = r.notes;
  return j;
}

json to_json(const ExpectationReport& r) {
  json j;
  j["kind"] = std::string(kind_name(r.kind));
  j["t"] = r.t;
  j["n"] = r.t + 2;
  j["rng_seed"] = r.rng_seed;
  j["closed_form"] = r.closed_form ? json(*r.closed_form) : json(nullptr);
  j["closed_form_wiener"] = r.closed_form_wiener ? json(*r.closed_form_wiener) : json(nullptr);
  j["recurrence"] = r.recurrence ? rational_to_json(*r.recurrence) : json(nullptr);
  j["enumeration"] = r.enumeration ? rational_to_json(*r.enumeration) : json(nullptr);
  if (r.monte_carlo) {
    j["monte_carlo"] = {{"mean", r.monte_carlo->mean},
                        {"std_error", r.monte_carlo->std_error},
                        {"trials", r.monte_carlo->trials}};
  } else {
    j["monte_carlo"] = nullptr;
  }
  j["notes"] = r.notes;
  return j;
}

json to_json(const BoundsTrajectory& b) {
  json rows = json::array();
  for (const BoundsRow& r : b.rows) {
    rows.push_back({{"generation", r.generation},
                    {"n", integer_to_json(r.n)},
                    {"wiener", integer_to_json(r.wiener)},
                    {"lower", integer_to_json(r.lower)},
                    {"upper", integer_to_json(r.upper)},
                    {"within", r.within},
                    {"lower_tight", r.lower_tight},
                    {"upper_tight", r.upper_tight}});
  }
  return json{{"all_within", b.all_within()}, {"rows", rows}};
}

json to_json(const WienerPolynomial& p) {
  return json{{"family", std::string(family_name(p.family))},
              {"m", p.m},
              {"c_W", rational_to_json(p.c_W)},
              {"c_n2", rational_to_json(p.c_n2)},
              {"c_n", rational_to_json(p.c_n)},
              {"c_1", rational_to_json(p.c_1)}};
}

}  // namespace rgt
