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

#include "cli.hpp"

#include <charconv>
#include <chrono>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include <omp.h>

#include "CLI11.hpp"
#include "rgt/errors.hpp"
#include "rgt/growth.hpp"
#include "rgt/hitting_time.hpp"
#include "rgt/random_models.hpp"
#include "rgt/recursive_models.hpp"
#include "rgt/report_json.hpp"
#include "rgt/wiener.hpp"

namespace rgt::cli {
namespace {

struct Common {
  std::string seed;
  std::string seed_file;
  std::string ops;
  int gens = 1;
  std::string format;
  std::string out_path;
  std::uint64_t rng = 0;
  int threads = 0;
};

struct AnalyzeFlags {
  std::string input;
  bool spectral = false;
  std::vector<std::uint64_t> simulate;
  bool line_graph = false;
};

struct VerifyFlags {
  std::string suite = "all";
  int trees = 100;
  int max_n = 12;
  int max_t = 3;
  int max_m = 4;
};

struct BenchFlags {
  int max_t = 12;
};

struct RandomFlags {
  std::string kind = "uniform";
  int t = 2;
  std::uint64_t trials = 10'000;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParameterError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int parse_size_arg(std::string_view what, std::string_view digits) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) {
    throw ParameterError("bad vertex count in seed '" + std::string(what) + "'");
  }
  return v;
}

Tree load_seed(const Common& c) {
  if (!c.seed_file.empty()) return validate_tree(parse_edge_list(read_file(c.seed_file)));
  const std::string_view s = c.seed;
  if (s.empty() || s == "edge") return build_path(2);
  if (s.starts_with("@")) return validate_tree(parse_edge_list(read_file(std::string(s.substr(1)))));
  if (s.starts_with("path:")) return build_path(parse_size_arg(s, s.substr(5)));
  if (s.starts_with("star:")) return build_star(parse_size_arg(s, s.substr(5)));
  throw ParameterError("unknown seed '" + c.seed + "' (expected edge, path:n, star:n or @file)");
}

std::string seed_label(const Common& c) {
  if (!c.seed_file.empty()) return "@" + c.seed_file;
  return c.seed.empty() ? "edge" : c.seed;
}

Tree build_from_flags(const Common& c) {
  return apply_generations(load_seed(c), parse_pipeline(c.ops), c.gens);
}

/// Writes to --out when given, else to `out`.
void emit(const Common& c, std::ostream& out, const std::string& text) {
  if (c.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(c.out_path);
  if (!f) throw ParameterError("cannot write '" + c.out_path + "'");
  f << text;
}

std::string format_or(const Common& c, const char* fallback) { return c.format.empty() ? fallback : c.format; }

[[noreturn]] void bad_format(const std::string& fmt, const char* cmd) {
  throw ParameterError("format '" + fmt + "' is not supported by " + cmd);
}

// ---------------------------------------------------------------- generate

int cmd_generate(const Common& c, std::ostream& out) {
  const auto ops = parse_pipeline(c.ops);
  const Tree t = build_from_flags(c);
  const std::string fmt = format_or(c, "edgelist");
  if (fmt == "edgelist") {
    emit(c, out, to_edge_list(t.graph()));
  } else if (fmt == "dot") {
    emit(c, out, to_dot(t.graph()));
  } else if (fmt == "json") {
    json edges = json::array();
    for (const Edge& e : t.graph().edges()) edges.push_back({e.u, e.v});
    const json j{{"seed", seed_label(c)},
                 {"ops", to_string(ops)},
                 {"gens", c.gens},
                 {"n", t.num_vertices()},
                 {"edges", t.num_edges()},
                 {"wiener", integer_to_json(wiener_index_edge_cut(t))},
                 {"edge_list", edges}};
    emit(c, out, j.dump(2) + "\n");
  } else if (fmt == "text") {
    emit(c, out, "n=" + std::to_string(t.num_vertices()) + " edges=" + std::to_string(t.num_edges()) +
                     " wiener=" + to_string(wiener_index_edge_cut(t)) + "\n");
  } else {
    bad_format(fmt, "generate");
  }
  return kOk;
}

// ---------------------------------------------------------------- analyze

std::string metrics_text(const MetricsReport& r) {
  std::ostringstream os;
  os << "label: " << r.label << "\n"
     << "n: " << r.n << "\nedges: " << r.edges << "\ntree: " << (r.is_tree ? "yes" : "no") << "\n"
     << "wiener: " << r.wiener << "\n"
     << "mean shortest path: " << to_string(r.mean_shortest_path) << "\n";
  if (r.mean_hitting_time) os << "mean hitting time: " << to_string(*r.mean_hitting_time) << "\n";
  if (r.degree_wiener_mult) os << "degree wiener (mult): " << *r.degree_wiener_mult << "\n";
  if (r.degree_wiener_add) os << "degree wiener (add): " << *r.degree_wiener_add << "\n";
  if (r.line_graph_wiener) os << "line graph wiener: " << *r.line_graph_wiener << "\n";
  if (r.bounds) {
    os << "bounds: " << r.bounds->lower << " <= W <= " << r.bounds->upper
       << (r.bounds->within ? "" : "  VIOLATED") << "\n";
  }
  if (r.mean_hitting_time_spectral) os << "spectral mean hitting time: " << *r.mean_hitting_time_spectral << "\n";
  if (r.mean_hitting_time_simulated) {
    os << "simulated mean hitting time: " << r.mean_hitting_time_simulated->mean << " +- "
       << r.mean_hitting_time_simulated->std_error << " (" << r.mean_hitting_time_simulated->walks
       << " walks)\n";
  }
  for (const auto& note : r.notes) os << "note: " << note << "\n";
  return os.str();
}

int cmd_analyze(const Common& c, const AnalyzeFlags& a, std::ostream& out) {
  Graph g;
  std::string label;
  if (!a.input.empty()) {
    g = parse_edge_list(read_file(a.input));
    label = a.input;
  } else {
    g = build_from_flags(c).graph();
    label = seed_label(c) +
            (c.ops.empty() ? "" : " | " + c.ops + " x" + std::to_string(c.gens));
  }
  if (a.line_graph) {
    g = line_graph(validate_tree(std::move(g)));
    label = "line graph of " + label;
  }

  MetricsReport r = analyze_graph(g, label);
  if (a.spectral) r.mean_hitting_time_spectral = mean_hitting_time_spectral(g);
  if (!a.simulate.empty()) {
    WalkConfig cfg;
    cfg.trials = a.simulate.at(0);
    cfg.rng_seed = a.simulate.size() > 1 ? a.simulate[1] : c.rng;
    const WalkEstimate est = simulate_mean_hitting_time(g, cfg);
    r.mean_hitting_time_simulated = MetricsReport::Simulation{est.mean, est.std_error, est.walks, cfg.rng_seed};
  }

  const std::string fmt = format_or(c, "json");
  if (fmt == "json") {
    emit(c, out, to_json(r).dump(2) + "\n");
  } else if (fmt == "text") {
    emit(c, out, metrics_text(r));
  } else {
    bad_format(fmt, "analyze");
  }
  return kOk;
}

// ---------------------------------------------------------------- verify

/// One named group of checks with its first failure.
struct Check {
  std::string name;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  json counterexample = nullptr;
  json extra = nullptr;

  void fail(json detail) {
    if (failures++ == 0) counterexample = std::move(detail);
  }
  json to_json() const {
    json j{{"name", name}, {"cases", cases}, {"failures", failures}, {"pass", failures == 0},
           {"counterexample", counterexample}};
    if (!extra.is_null()) j["table"] = extra;
    return j;
  }
};

constexpr std::uint64_t kVerifyTreeStream = 0x766572696679ULL;

struct RandomSeedTree {
  std::uint64_t tree_seed;
  int n;
  Tree tree;
};

RandomSeedTree verify_tree(std::uint64_t rng, int i, int max_n) {
  const std::uint64_t s = detail::substream_seed(rng, kVerifyTreeStream, static_cast<std::uint64_t>(i));
  const int n = 2 + static_cast<int>(s % static_cast<std::uint64_t>(std::max(1, max_n - 1)));
  return {s, n, random_attachment_tree(n, s)};
}

json tree_repro(const RandomSeedTree& t) {
  return {{"tree_seed", t.tree_seed},
          {"n", t.n},
          {"reproduce", "random_attachment_tree(" + std::to_string(t.n) + ", " + std::to_string(t.tree_seed) + ")"}};
}

Check verify_theorems(const VerifyFlags& v, std::uint64_t rng) {
  Check c{"theorems"};
  for (int i = 0; i < v.trees; ++i) {
    const RandomSeedTree st = verify_tree(rng, i, v.max_n);
    const Integer W = wiener_index(st.tree);
    for (Family f : kAllFamilies) {
      for (int m = 1; m <= v.max_m; ++m) {
        if (is_saturating(f) && m < st.tree.max_degree()) continue;
        ++c.cases;
        json where = tree_repro(st);
        where["family"] = family_name(f);
        where["m"] = m;
        try {
          const Tree grown = apply(st.tree, {f, m});
          const Integer oracle = wiener_index(grown);
          const Integer formula = wiener_one_step(f, m, W, st.tree.num_vertices());
          if (oracle != formula) {
            where["oracle"] = oracle.str();
            where["formula"] = formula.str();
            c.fail(where);
          }
        } catch (const FormulaViolation& e) {
          where["error"] = e.what();
          c.fail(where);
        }
      }
    }
  }
  return c;
}

std::vector<std::pair<std::string, Tree>> named_seeds() {
  return {{"P2", build_path(2)}, {"P3", build_path(3)}, {"P4", build_path(4)}, {"S3", build_star(4)}};
}

Check verify_propositions(const VerifyFlags& v) {
  Check c{"propositions"};
  for (const auto& [name, seed] : named_seeds()) {
    for (Family f : kAllFamilies) {
      for (int m = 1; m <= std::min(v.max_m, 3); ++m) {
        for (int t = 0; t <= v.max_t; ++t) {
          const ModelParams p = ModelParams::from_seed(seed, f, m, t);
          try {
            validate_model_params(p);
          } catch (const ParameterError&) {
            continue;
          }
          if (pipeline_size(seed.num_vertices(), {{f, m}}, t) > 20'000) continue;
          ++c.cases;
          json where{{"seed", name}, {"family", family_name(f)}, {"m", m}, {"t", t}};
          try {
            const Tree grown = construct_model(seed, f, m, t);
            const Rational oracle(2 * wiener_index(grown), Integer(grown.num_vertices()));
            const Rational formula = model_mht(p);
            if (oracle != formula) {
              where["oracle"] = rational_to_json(oracle);
              where["formula"] = rational_to_json(formula);
              c.fail(where);
            }
          } catch (const FormulaViolation& e) {
            where["error"] = e.what();
            c.fail(where);
          }
        }
      }
    }
  }
  return c;
}

Check verify_conjecture(const VerifyFlags& v) {
  Check c{"conjecture"};
  c.extra = json::array();
  for (Family f : kAllFamilies) {
    for (int m = 1; m <= v.max_m; ++m) {
      const Rational c1 = wiener_polynomial(f, m).c_1;
      json row{{"family", family_name(f)}, {"m", m}, {"c_1", rational_to_json(c1)}};
      c.extra.push_back(row);
      bool ok = true;
      if (f == Family::TypeI || f == Family::VFractal) {
        ok = c1 == 0;
      } else if (f == Family::TFractal || f == Family::TypeII || f == Family::TypeIII) {
        if (m < 2) continue;
        ok = c1 != 0;
      } else {
        continue;  // subdivision is reported only
      }
      ++c.cases;
      if (!ok) c.fail(row);
    }
  }
  return c;
}

Check verify_degree(const VerifyFlags& v, std::uint64_t rng) {
  Check c{"degree"};
  for (int i = 0; i < v.trees; ++i) {
    const RandomSeedTree st = verify_tree(rng, i, v.max_n);
    ++c.cases;
    try {
      degree_wiener_multiplicative(st.tree);
      degree_wiener_additive(st.tree);
      line_graph_wiener(st.tree);
    } catch (const FormulaViolation& e) {
      json where = tree_repro(st);
      where["error"] = e.what();
      c.fail(where);
    }
  }
  return c;
}

Check verify_spectral(const VerifyFlags& v, std::uint64_t rng) {
  Check c{"spectral"};
  for (int i = 0; i < v.trees; ++i) {
    const RandomSeedTree st = verify_tree(rng, i, v.max_n);
    ++c.cases;
    const double exact = to_double(mean_hitting_time_tree(st.tree));
    const double spectral = mean_hitting_time_spectral(st.tree.graph());
    if (std::abs(spectral - exact) > 1e-6 * exact) {
      json where = tree_repro(st);
      where["exact"] = exact;
      where["spectral"] = spectral;
      c.fail(where);
    }
  }
  return c;
}

Check verify_bounds(const VerifyFlags& v, std::uint64_t rng) {
  Check c{"bounds"};
  for (int n = 2; n <= 50; ++n) {
    const auto b = extremal_bounds(n);
    c.cases += 2;
    if (wiener_index(build_star(n)) != b.lower) c.fail({{"tree", "star"}, {"n", n}});
    if (wiener_index(build_path(n)) != b.upper) c.fail({{"tree", "path"}, {"n", n}});
  }
  for (int i = 0; i < v.trees; ++i) {
    const RandomSeedTree st = verify_tree(rng, i, v.max_n);
    ++c.cases;
    if (!extremal_bounds(st.n).contains(wiener_index(st.tree))) c.fail(tree_repro(st));
  }
  for (const auto& [name, seed] : named_seeds()) {
    for (Family f : kAllFamilies) {
      for (int m = 1; m <= v.max_m; ++m) {
        const ModelParams p = ModelParams::from_seed(seed, f, m, v.max_t);
        try {
          validate_model_params(p);
        } catch (const ParameterError&) {
          continue;
        }
        ++c.cases;
        const BoundsTrajectory traj = check_bounds_trajectory(p);
        if (!traj.all_within()) {
          c.fail({{"seed", name}, {"family", family_name(f)}, {"m", m}, {"trajectory", to_json(traj)}});
        }
      }
    }
  }
  return c;
}

int cmd_verify(const Common& c, const VerifyFlags& v, std::ostream& out) {
  if (v.trees < 1 || v.max_n < 2 || v.max_t < 0 || v.max_m < 1) {
    throw ParameterError("verify needs --trees >= 1, --max-n >= 2, --max-t >= 0, --max-m >= 1");
  }
  const std::vector<std::pair<std::string, std::function<Check()>>> suites = {
      {"theorems", [&] { return verify_theorems(v, c.rng); }},
      {"propositions", [&] { return verify_propositions(v); }},
      {"conjecture", [&] { return verify_conjecture(v); }},
      {"degree", [&] { return verify_degree(v, c.rng); }},
      {"spectral", [&] { return verify_spectral(v, c.rng); }},
      {"bounds", [&] { return verify_bounds(v, c.rng); }},
  };
  json checks = json::array();
  bool pass = true;
  bool matched = false;
  for (const auto& [name, run] : suites) {
    if (v.suite != "all" && v.suite != name) continue;
    matched = true;
    const Check result = run();
    pass = pass && result.failures == 0;
    checks.push_back(result.to_json());
  }
  if (!matched) throw ParameterError("unknown suite '" + v.suite + "'");

  const std::string fmt = format_or(c, "json");
  if (fmt == "json") {
    const json j{{"suite", v.suite},
                 {"rng_seed", c.rng},
                 {"trees", v.trees},
                 {"max_n", v.max_n},
                 {"max_t", v.max_t},
                 {"max_m", v.max_m},
                 {"pass", pass},
                 {"checks", checks}};
    emit(c, out, j.dump(2) + "\n");
  } else if (fmt == "text") {
    std::string text;
    for (const auto& ch : checks) {
      text += std::string(ch["pass"].get<bool>() ? "PASS " : "FAIL ") + ch["name"].get<std::string>() + " (" +
              std::to_string(ch["cases"].get<std::uint64_t>()) + " cases)\n";
    }
    emit(c, out, text);
  } else {
    bad_format(fmt, "verify");
  }
  return pass ? kOk : kVerificationFailed;
}

// ---------------------------------------------------------------- bench

template <typename F>
double time_ms(F&& f) {
  const auto start = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

int cmd_bench(const Common& c, const BenchFlags& b, std::ostream& out) {
  const std::vector<OpSpec> ops = parse_pipeline(c.ops.empty() ? "subdiv:1" : c.ops);
  if (ops.size() != 1) throw ParameterError("bench takes a single operation, e.g. --ops subdiv:1");
  const Tree seed = load_seed(c);
  if (b.max_t < 0) throw ParameterError("--max-t must be >= 0");

  json rows = json::array();
  for (int t = 0; t <= b.max_t; ++t) {
    const ModelParams p = ModelParams::from_seed(seed, ops[0].family, ops[0].m, t);
    Rational closed;
    const double closed_ms = time_ms([&] { closed = model_mht_unrolled(p); });
    const Integer n = model_size(p);
    rows.push_back({{"method", "closed_form"}, {"t", t}, {"n", integer_to_json(n)}, {"millis", closed_ms},
                    {"skipped", false}});

    if (n > kMaxExplicitVertices) {
      rows.push_back({{"method", "explicit_lemma22"}, {"t", t}, {"n", integer_to_json(n)}, {"millis", nullptr},
                      {"skipped", true}});
      rows.push_back({{"method", "spectral"}, {"t", t}, {"n", integer_to_json(n)}, {"millis", nullptr},
                      {"skipped", true}});
      continue;
    }
    std::optional<Tree> grown;
    Rational explicit_mht;
    const double explicit_ms = time_ms([&] {
      grown = construct_model(seed, ops[0].family, ops[0].m, t);
      explicit_mht = Rational(2 * wiener_index_edge_cut(*grown), Integer(grown->num_vertices()));
    });
    if (explicit_mht != closed) {
      throw FormulaViolation("bench: closed form and explicit construction disagree at t=" + std::to_string(t));
    }
    rows.push_back({{"method", "explicit_lemma22"}, {"t", t}, {"n", integer_to_json(n)}, {"millis", explicit_ms},
                    {"skipped", false}});

    if (grown->num_vertices() > kMaxSpectralVertices) {
      rows.push_back({{"method", "spectral"}, {"t", t}, {"n", integer_to_json(n)}, {"millis", nullptr},
                      {"skipped", true}});
      continue;
    }
    const double spectral_ms = time_ms([&] { mean_hitting_time_spectral(grown->graph()); });
    rows.push_back({{"method", "spectral"}, {"t", t}, {"n", integer_to_json(n)}, {"millis", spectral_ms},
                    {"skipped", false}});
  }

  const std::string fmt = format_or(c, "json");
  if (fmt == "json") {
    emit(c, out, json{{"ops", to_string(ops)}, {"rows", rows}}.dump(2) + "\n");
  } else if (fmt == "text") {
    std::ostringstream os;
    for (const auto& r : rows) {
      os << r["method"].get<std::string>() << " t=" << r["t"] << " n=" << r["n"] << " ";
      if (r["skipped"].get<bool>()) {
        os << "skipped\n";
      } else {
        os << r["millis"].get<double>() << " ms\n";
      }
    }
    emit(c, out, os.str());
  } else {
    bad_format(fmt, "bench");
  }
  return kOk;
}

// ---------------------------------------------------------------- random

int cmd_random(const Common& c, const RandomFlags& r, std::ostream& out) {
  const RandomModelKind kind = parse_kind(r.kind);
  if (r.t < 0) throw ParameterError("--t must be >= 0");
  const ExpectationReport rep = build_expectation_report(kind, r.t, r.trials, c.rng);
  const std::string fmt = format_or(c, "json");
  if (fmt == "json") {
    emit(c, out, to_json(rep).dump(2) + "\n");
  } else if (fmt == "text") {
    std::ostringstream os;
    os << "kind: " << kind_name(kind) << "\nt: " << r.t << "\n";
    if (rep.enumeration) os << "E[W] (enumeration): " << to_string(*rep.enumeration) << "\n";
    if (rep.recurrence) os << "W recurrence: " << to_string(*rep.recurrence) << "\n";
    if (rep.closed_form_wiener) os << "closed form (Wiener units): " << *rep.closed_form_wiener << "\n";
    if (rep.monte_carlo) {
      os << "E[W] (Monte Carlo): " << rep.monte_carlo->mean << " +- " << rep.monte_carlo->std_error << "\n";
    }
    for (const auto& note : rep.notes) os << "note: " << note << "\n";
    emit(c, out, os.str());
  } else {
    bad_format(fmt, "random");
  }
  return kOk;
}

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--seed", c.seed, "seed tree: edge, path:n, star:n or @file");
  sub->add_option("--seed-file", c.seed_file, "seed tree from an edge-list file");
  sub->add_option("--ops", c.ops, "pipeline, e.g. subdiv:2,type2:1");
  sub->add_option("--gens", c.gens, "number of times the pipeline is applied");
  sub->add_option("--format", c.format, "json, text, dot or edgelist")
      ->check(CLI::IsMember({"json", "text", "dot", "edgelist"}));
  sub->add_option("--out", c.out_path, "output file (default stdout)");
  sub->add_option("--rng", c.rng, "random seed");
  sub->add_option("--threads", c.threads, "worker threads (0 = OpenMP default)")->check(CLI::NonNegativeNumber);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"recursive growth trees: construction, Wiener index and mean hitting time", "rgt"};
  app.require_subcommand(1);

  Common common;
  AnalyzeFlags analyze;
  VerifyFlags verify;
  BenchFlags bench;
  RandomFlags random;

  auto* gen = app.add_subcommand("generate", "build a tree and write it out");
  add_common(gen, common);

  auto* ana = app.add_subcommand("analyze", "metrics report for a graph");
  add_common(ana, common);
  ana->add_option("--input", analyze.input, "edge-list file (any connected graph)");
  ana->add_flag("--spectral", analyze.spectral, "add the Laplacian-spectrum mean hitting time");
  ana->add_option("--simulate", analyze.simulate, "random-walk estimate: TRIALS [SEED]")->expected(1, 2);
  ana->add_flag("--line-graph", analyze.line_graph, "analyze the line graph of the input tree");

  auto* ver = app.add_subcommand("verify", "formula-vs-oracle checks");
  add_common(ver, common);
  ver->add_option("--suite", verify.suite, "theorems, propositions, conjecture, degree, spectral, bounds or all");
  ver->add_option("--trees", verify.trees, "random seed trees per suite");
  ver->add_option("--max-n", verify.max_n, "largest random seed tree");
  ver->add_option("--max-t", verify.max_t, "largest generation");
  ver->add_option("--max-m", verify.max_m, "largest order m");

  auto* ben = app.add_subcommand("bench", "closed form vs explicit vs spectral timings");
  add_common(ben, common);
  ben->add_option("--max-t", bench.max_t, "generations 0..max-t");

  auto* rnd = app.add_subcommand("random", "expected Wiener index of random growth trees");
  add_common(rnd, common);
  rnd->add_option("--kind", random.kind, "ba or uniform");
  rnd->add_option("--t", random.t, "growth steps");
  rnd->add_option("--trials", random.trials, "Monte Carlo trials (0 skips)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  if (!common.seed_file.empty() && !common.seed.empty()) {
    err << "rgt: give either --seed or --seed-file, not both\n";
    return kUsageError;
  }
  if (common.threads > 0) omp_set_num_threads(common.threads);

  try {
    if (gen->parsed()) return cmd_generate(common, out);
    if (ana->parsed()) return cmd_analyze(common, analyze, out);
    if (ver->parsed()) return cmd_verify(common, verify, out);
    if (ben->parsed()) return cmd_bench(common, bench, out);
    if (rnd->parsed()) return cmd_random(common, random, out);
  } catch (const FormulaViolation& e) {
    err << "rgt: formula violation: " << e.what() << "\n";
    return kVerificationFailed;
  } catch (const Error& e) {
    err << "rgt: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace rgt::cli
