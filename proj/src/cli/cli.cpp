// Copyright 2026 The kfx Authors
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

#include "kfx/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "kfx/closed_forms.hpp"
#include "kfx/errors.hpp"
#include "kfx/families.hpp"
#include "kfx/metrics.hpp"
#include "kfx/report.hpp"
#include "kfx/search.hpp"
#include "kfx/suites.hpp"

namespace kfx {

namespace {

constexpr std::uint64_t kDefaultSeed = 20160101;

struct RunConfig {
  std::string format;  // table | csv | json; empty = subcommand default
  std::string output;
  int workers = 1;
  std::optional<std::uint64_t> cap;
  std::uint64_t seed = kDefaultSeed;
  std::optional<int> decimal;
  bool mixed = false;

  std::string input;
  std::string engine = "auto";
  std::vector<int> vertices;

  std::string name;
  std::optional<int> n;
  std::optional<int> l;
  std::optional<int> delta;
  std::optional<int> x;
  int hub_pos = 0;
  std::string variant = "validated";
  bool list = false;

  std::string objective = "max";
  std::string degree_mode = "exact";
  bool dump_all = false;

  std::string suite = "theorem";
  int n_max = 9;
};

std::uint64_t effective_cap(const RunConfig& c) {
  if (c.cap) return *c.cap;
  if (const char* env = std::getenv("KFX_CAP")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw InvalidParameter(std::string("KFX_CAP is not a number: ") + env);
    }
  }
  return kDefaultCap;
}

RunLimits limits_of(const RunConfig& c) { return RunLimits{effective_cap(c), c.workers}; }

std::string format_of(const RunConfig& c, const char* fallback) {
  const std::string f = c.format.empty() ? fallback : c.format;
  if (f != "table" && f != "csv" && f != "json") throw InvalidParameter("unknown format: " + f);
  return f;
}

std::string show(const BigRational& v, const RunConfig& c) { return c.mixed ? v.to_mixed() : v.to_string(); }

Graph read_input(const std::string& path) {
  if (path.empty() || path == "-") return parse_edge_list(std::cin);
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path);
  return parse_edge_list(in);
}

int cmd_compute(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const Graph g = read_input(c.input);
  if (!g.is_connected()) throw InvalidGraph("graph is not connected");
  Engine engine = Engine::Structural;
  if (c.engine == "oracle") {
    engine = Engine::Oracle;
  } else if (c.engine == "auto") {
    engine = g.is_tree() || g.is_unicyclic() ? Engine::Structural : Engine::Oracle;
  } else if (c.engine != "structural") {
    throw InvalidParameter("unknown engine: " + c.engine);
  }
  for (int v : c.vertices) {
    if (!g.contains(v)) throw InvalidParameter("vertex out of range: " + std::to_string(v));
  }
  const auto start = std::chrono::steady_clock::now();
  const BigRational kf = kirchhoff_index(g, engine);
  const std::int64_t w = wiener(g);
  const auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  err << "kfx: compute engine=" << engine_name(engine) << " n=" << g.vertex_count() << " seconds=" << elapsed << '\n';

  struct VertexRow {
    int vertex;
    BigRational kf_v;
    std::int64_t w_v;
  };
  std::vector<VertexRow> rows;
  for (int v : c.vertices) rows.push_back({v, kf_vertex(g, v, engine), wiener_vertex(g, v)});

  const std::string format = format_of(c, "table");
  if (format == "json") {
    Json j;
    j["n"] = g.vertex_count();
    j["m"] = g.edge_count();
    j["max_degree"] = max_degree(g);
    j["engine"] = engine_name(engine);
    j["kf"] = kf.to_fraction();
    if (c.decimal) j["kf_decimal"] = kf.to_decimal(*c.decimal);
    j["wiener"] = w;
    Json vs = Json::array();
    for (const auto& r : rows) {
      Json item;
      item["vertex"] = r.vertex;
      item["kf_v"] = r.kf_v.to_fraction();
      if (c.decimal) item["kf_v_decimal"] = r.kf_v.to_decimal(*c.decimal);
      item["wiener_v"] = r.w_v;
      vs.push_back(std::move(item));
    }
    j["vertices"] = std::move(vs);
    out << dump_json(j);
  } else if (format == "csv") {
    out << "quantity,value\n";
    out << "n," << g.vertex_count() << "\nm," << g.edge_count() << "\nmax_degree," << max_degree(g) << '\n';
    out << "engine," << engine_name(engine) << "\nkf," << kf.to_fraction() << '\n';
    if (c.decimal) out << "kf_decimal," << kf.to_decimal(*c.decimal) << '\n';
    out << "wiener," << w << '\n';
    for (const auto& r : rows) {
      out << "kf_v(" << r.vertex << ")," << r.kf_v.to_fraction() << "\nwiener_v(" << r.vertex << ")," << r.w_v << '\n';
    }
  } else {
    out << "n = " << g.vertex_count() << "\nm = " << g.edge_count() << "\nDelta = " << max_degree(g) << '\n';
    out << "Kf = " << show(kf, c) << '\n';
    if (c.decimal) out << "Kf ~ " << kf.to_decimal(*c.decimal) << '\n';
    out << "W = " << w << '\n';
    for (const auto& r : rows) {
      out << "Kf_v(" << r.vertex << ") = " << show(r.kf_v, c) << '\n';
      if (c.decimal) out << "Kf_v(" << r.vertex << ") ~ " << r.kf_v.to_decimal(*c.decimal) << '\n';
      out << "W_v(" << r.vertex << ") = " << r.w_v << '\n';
    }
  }
  return kExitOk;
}

int cmd_family(const RunConfig& c, std::ostream& out) {
  const auto family = parse_family(c.name);
  if (!family) throw InvalidParameter("unknown family: " + c.name);
  FamilyParams p;
  p.family = *family;
  p.n = c.n.value_or(0);
  p.l = c.l.value_or(0);
  p.delta = c.delta.value_or(0);
  p.x = c.x.value_or(0);
  p.hub_pos = c.hub_pos;
  const Graph g = make_family(p);
  if (format_of(c, "table") == "json") {
    Json j;
    j["family"] = std::string(family_name(*family));
    j["n"] = g.vertex_count();
    j["m"] = g.edge_count();
    Json edges = Json::array();
    for (const Edge& e : g.edges()) edges.push_back(Json::array({e.u, e.v}));
    j["edges"] = std::move(edges);
    out << dump_json(j);
  } else {
    write_edge_list(out, g);
  }
  return kExitOk;
}

int cmd_formula(const RunConfig& c, std::ostream& out) {
  const std::string format = format_of(c, "table");
  if (c.list) {
    for (const auto& f : formula_catalog()) {
      out << f.name << " [" << f.required << "] " << f.description;
      if (!f.discrepancy.empty()) out << " (" << f.discrepancy << ")";
      out << '\n';
    }
    return kExitOk;
  }
  FormulaVariant variant = FormulaVariant::Validated;
  if (c.variant == "as-printed") {
    variant = FormulaVariant::AsPrinted;
  } else if (c.variant != "validated") {
    throw InvalidParameter("unknown variant: " + c.variant);
  }
  const FormulaValue v = evaluate_formula(c.name, FormulaParams{c.n, c.l, c.delta, c.x}, variant);
  if (format == "json") {
    out << dump_json(to_json(v, c.decimal));
  } else if (format == "csv") {
    const auto opt = [](const std::optional<int>& value) { return value ? std::to_string(*value) : std::string(); };
    out << "name,variant,n,l,delta,x,value\n";
    out << v.name << ',' << variant_name(v.variant) << ',' << opt(c.n) << ',' << opt(c.l) << ',' << opt(c.delta) << ','
        << opt(c.x) << ',' << v.value.to_fraction() << '\n';
  } else {
    std::string args;
    const auto add = [&](const char* key, const std::optional<int>& value) {
      if (!value) return;
      if (!args.empty()) args += ", ";
      args += std::string(key) + "=" + std::to_string(*value);
    };
    add("n", c.n);
    add("l", c.l);
    add("delta", c.delta);
    add("x", c.x);
    out << v.name << "(" << args << ") = " << show(v.value, c);
    if (c.decimal) out << " ~ " << v.value.to_decimal(*c.decimal);
    out << '\n';
  }
  return kExitOk;
}

void write_report(const ExtremalReport& r, const RunConfig& c, std::ostream& out) {
  const std::string format = format_of(c, "json");
  if (format == "table") {
    out << "n = " << r.n << ", Delta = " << r.delta << ", objective = " << objective_name(r.objective)
        << ", mode = " << r.mode << '\n';
    out << "classes = " << r.graph_count << '\n';
    if (r.extremal_value) out << "extremum = " << show(*r.extremal_value, c) << '\n';
    if (r.formula_value) out << r.formula_name << " = " << show(*r.formula_value, c) << '\n';
    for (const auto& code : r.argext_codes) out << "argext " << code.str() << '\n';
    out << "verdict = " << verdict_name(r.verdict) << '\n';
    for (const auto& note : r.notes) out << "note: " << note << '\n';
  } else {
    out << dump_json(to_json(r, c.decimal));
  }
}

int verdict_exit(Verdict v) { return v == Verdict::Mismatch ? kExitMismatch : kExitOk; }

int cmd_search(const RunConfig& c, std::ostream& out) {
  if (!c.n) throw InvalidParameter("search needs --n");
  SearchOptions opt;
  opt.enumeration.n = *c.n;
  opt.enumeration.delta = c.delta;
  if (c.degree_mode == "at-most") {
    opt.enumeration.degree_mode = DegreeMode::AtMost;
  } else if (c.degree_mode != "exact") {
    throw InvalidParameter("unknown degree mode: " + c.degree_mode);
  }
  if (c.l) opt.enumeration.only_cycle_length(*c.l);
  const RunLimits limits = limits_of(c);
  opt.enumeration.cap = limits.cap;
  opt.enumeration.workers = limits.workers;
  if (c.objective == "min") {
    opt.objective = Objective::Min;
  } else if (c.objective != "max") {
    throw InvalidParameter("unknown objective: " + c.objective);
  }
  opt.collect_all = c.dump_all;
  const auto result = search_extremal(opt);
  const std::string format = format_of(c, "json");
  if (c.dump_all && format == "csv") {
    write_records_csv(out, result.records);
  } else if (c.dump_all && format == "json") {
    Json j = to_json(result.report, c.decimal);
    Json classes = Json::array();
    for (const auto& rec : result.records) {
      Json item;
      item["code"] = rec.code.str();
      item["cycle_length"] = rec.cycle_length;
      item["max_degree"] = rec.max_degree;
      item["kf"] = rec.kf.to_fraction();
      classes.push_back(std::move(item));
    }
    j["classes"] = std::move(classes);
    out << dump_json(j);
  } else {
    write_report(result.report, c, out);
  }
  return verdict_exit(result.report.verdict);
}

int cmd_verify(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const RunLimits limits = limits_of(c);
  if (c.suite == "theorem" && c.n && c.delta) {
    const auto r = verify_theorem(*c.n, *c.delta, limits);
    write_report(r, c, out);
    return verdict_exit(r.verdict);
  }
  std::vector<std::string> suites;
  if (c.suite == "all") {
    suites = {"theorem", "engines", "formulas", "lemmas", "counts"};
  } else if (c.suite == "theorem" || c.suite == "engines" || c.suite == "formulas" || c.suite == "lemmas" ||
             c.suite == "counts") {
    suites = {c.suite};
  } else {
    throw InvalidParameter("unknown suite: " + c.suite);
  }
  err << "kfx: verify seed=" << c.seed << " n_max=" << c.n_max << '\n';
  Json j;
  j["seed"] = c.seed;
  j["n_max"] = c.n_max;
  Json results = Json::array();
  bool passed = true;
  for (const auto& name : suites) {
    const auto start = std::chrono::steady_clock::now();
    SuiteResult s;
    if (name == "theorem") {
      s = run_theorem_suite(c.n_max, limits);
    } else if (name == "engines") {
      s = run_engine_suite(std::min(c.n_max, 8), 200, c.seed, limits);
    } else if (name == "formulas") {
      s = run_formula_suite();
    } else if (name == "lemmas") {
      s = run_lemma_suite(std::min(c.n_max, 8), limits);
    } else {
      s = run_count_suite(std::min(c.n_max, 12), limits);
    }
    const auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    err << "kfx: suite " << name << (s.passed ? " passed" : " FAILED") << " checks=" << s.checks
        << " seconds=" << elapsed << '\n';
    passed = passed && s.passed;
    results.push_back(to_json(s));
  }
  j["passed"] = passed;
  j["suites"] = std::move(results);
  out << dump_json(j);
  return passed ? kExitOk : kExitMismatch;
}

int cmd_conjecture(const RunConfig& c, std::ostream& out) {
  if (!c.n || !c.delta) throw InvalidParameter("conjecture needs --n and --delta");
  const auto r = probe_conjecture(*c.n, *c.delta, limits_of(c));
  write_report(r, c, out);
  return verdict_exit(r.verdict);
}

void add_shared(CLI::App* cmd, RunConfig& c) {
  cmd->add_option("--format", c.format, "table, csv or json");
  cmd->add_option("--output", c.output, "write the payload to this file instead of stdout");
  cmd->add_option("--workers", c.workers, "worker threads for enumeration")->check(CLI::PositiveNumber);
  cmd->add_option("--cap", c.cap, "maximum number of enumerated classes (env KFX_CAP)");
  cmd->add_option("--seed", c.seed, "seed for randomized suites");
  cmd->add_option("--decimal", c.decimal, "also print a decimal rendering with this many digits")
      ->check(CLI::Range(0, 10000));
  cmd->add_flag("--mixed", c.mixed, "show non-integers as mixed numbers in tables");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"kfx: exact Kirchhoff and Wiener indices of unicyclic graphs"};
  app.require_subcommand(1);

  auto* compute = app.add_subcommand("compute", "Kf, W and maximum degree of an edge-list graph");
  compute->add_option("file", c.input, "edge-list file ('-' for stdin)");
  compute->add_option("--input", c.input, "edge-list file ('-' for stdin)");
  compute->add_option("--engine", c.engine, "auto, structural or oracle");
  compute->add_option("--vertex", c.vertices, "also report Kf_v and W_v for this vertex");

  auto* family = app.add_subcommand("family", "emit a named graph family as an edge list");
  auto* formula = app.add_subcommand("formula", "evaluate a closed form exactly");
  auto* search = app.add_subcommand("search", "exhaustive extremal search over unicyclic graphs");
  auto* verify = app.add_subcommand("verify", "run verification suites");
  auto* conjecture = app.add_subcommand("conjecture", "probe the conjectured minimum");

  for (auto* cmd : {family, formula}) cmd->add_option("--name", c.name, "family or formula name");
  for (auto* cmd : {family, formula, search, verify, conjecture}) {
    cmd->add_option("--n", c.n, "number of vertices");
    cmd->add_option("--delta", c.delta, "maximum degree");
  }
  for (auto* cmd : {family, formula, search}) cmd->add_option("--l", c.l, "cycle length");
  for (auto* cmd : {family, formula}) cmd->add_option("--x", c.x, "number of hubs (conjecture branch ii)");
  family->add_option("--hub-pos", c.hub_pos, "distance of the hub from the cycle (p-member)");
  formula->add_option("--variant", c.variant, "validated or as-printed");
  formula->add_flag("--list", c.list, "list the available formulas");
  search->add_option("--objective", c.objective, "max or min");
  search->add_option("--degree-mode", c.degree_mode, "exact or at-most");
  search->add_flag("--dump-all", c.dump_all, "include every enumerated class");
  verify->add_option("--suite", c.suite, "theorem, engines, formulas, lemmas, counts or all");
  verify->add_option("--n-max", c.n_max, "largest n for sweeps");
  for (auto* cmd : {compute, family, formula, search, verify, conjecture}) add_shared(cmd, c);

  std::vector<std::string> argv_storage{"kfx"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  std::ostringstream payload;
  int code = kExitOk;
  try {
    if (compute->parsed()) {
      code = cmd_compute(c, payload, err);
    } else if (family->parsed()) {
      code = cmd_family(c, payload);
    } else if (formula->parsed()) {
      code = cmd_formula(c, payload);
    } else if (search->parsed()) {
      code = cmd_search(c, payload);
    } else if (verify->parsed()) {
      code = cmd_verify(c, payload, err);
    } else {
      code = cmd_conjecture(c, payload);
    }
  } catch (const ParseError& e) {
    err << "kfx: parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CapExceeded& e) {
    err << "kfx: " << e.what() << '\n';
    return kExitCap;
  } catch (const Error& e) {
    err << "kfx: " << e.what() << '\n';
    return kExitInvalid;
  }

  if (c.output.empty()) {
    out << payload.str();
  } else {
    std::ofstream file(c.output);
    if (!file) {
      err << "kfx: cannot write " << c.output << '\n';
      return kExitUsage;
    }
    file << payload.str();
  }
  return code;
}

}  // namespace kfx
