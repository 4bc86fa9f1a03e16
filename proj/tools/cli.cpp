/*
 Copyright 2026 The singular-sos Authors

 Licensed under the Apache License, Version 2.0 (the "License");
 you may not use this file except in compliance with the License.
 You may obtain a copy of the License at

      https://www.apache.org/licenses/LICENSE-2.0

 Unless required by applicable law or agreed to in writing, software
 distributed under the License is distributed on an "AS IS" BASIS,
 WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 See the License for the specific language governing permissions and
 limitations under the License.
*/

#include "cli.hpp"

#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "singular_sos/driver.hpp"
#include "singular_sos/hyperbolic.hpp"
#include "singular_sos/json_io.hpp"
#include "singular_sos/problem.hpp"

namespace singular_sos::cli {

namespace {

struct Settings {
  bool pretty = false;
  std::string file;
  std::string cert_file;
  unsigned order = 0;
  double tol = 1e-8;
  double value_tol = 1e-7;
  bool audit = false;
  bool emit_problem = false;
  bool minimizer = false;
  bool no_direct = false;
  unsigned threads = 0;
  std::string bound_case;
  long n = 0, l = 0, d = 2;
  std::string poly, direction, vars, cost;
  std::vector<std::string> points, rows;
  std::uint64_t seed = 1;
  std::size_t samples = 100;
  bool trusted = false;
  bool to_pop = false;
};

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void emit(std::ostream& out, const Json& j, bool pretty) { out << (pretty ? j.dump(2) : j.dump()) << '\n'; }

Problem load(const std::string& path) {
  try {
    return read_problem_file(path);
  } catch (const ProblemParseError& e) {
    throw InputError(path + ":" + e.what());
  }
}

Rational parse_number(const std::string& text) {
  Polynomial p = poly_parse(text, {});
  return p.constant_term();
}

std::vector<Rational> parse_vector(const std::string& text) {
  std::vector<Rational> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) v.push_back(parse_number(item));
  return v;
}

std::vector<std::string> split_names(const std::string& text) {
  std::vector<std::string> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(' '));
    item.erase(item.find_last_not_of(' ') + 1);
    v.push_back(item);
  }
  return v;
}

SolveOptions solve_options(const Settings& s, const Problem& p) {
  SolveOptions o;
  if (s.order > 0) o.max_order = s.order;
  o.tol = s.tol;
  o.value_tol = s.value_tol;
  o.audit = s.audit;
  o.threads = s.threads;
  o.direct_check = !s.no_direct;
  o.variables = p.variables;
  return o;
}

int cmd_solve(const Settings& s, std::ostream& out) {
  Problem p = load(s.file);
  if (s.emit_problem) {
    out << format_problem(p);
    return 0;
  }
  SolveOptions o = solve_options(s, p);
  SolveReport r = solve_pop(p.objective, p.constraints, o);
  Json j = to_json(r);
  if (s.minimizer && r.kind == ValueKind::finite)
    j["minimizer"] = to_json(extract_minimizer(p.objective, p.constraints, parse_rational(r.value_rational), o));
  emit(out, j, s.pretty);
  return r.exit_code();
}

int cmd_decompose(const Settings& s, std::ostream& out) {
  Problem p = load(s.file);
  Decomposition d = decompose_singular_loci(make_node(p.nvars(), p.constraints));
  emit(out, to_json(d, p.variables), s.pretty);
  return d.warnings.empty() ? 0 : 2;
}

int cmd_kkt(const Settings& s, std::ostream& out) {
  Problem p = load(s.file);
  emit(out, to_json(kkt_system(p.objective, p.constraints), p.variables), s.pretty);
  return 0;
}

int cmd_bounds(const Settings& s, std::ostream& out) {
  emit(out, bounds_json(parse_order_case(s.bound_case), {s.n, s.l, s.d}), s.pretty);
  return 0;
}

int cmd_certify(const Settings& s, std::ostream& out) {
  Problem p = load(s.file);
  std::ifstream in(s.cert_file);
  if (!in) throw InputError("cannot open " + s.cert_file);
  Json cj;
  try {
    cj = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(s.cert_file + ": " + e.what());
  }
  Certificate cert = certificate_from_json(cj, p.variables);
  if (cert.multipliers.size() != p.constraints.size())
    throw InputError("certificate has " + std::to_string(cert.multipliers.size()) + " multipliers for " +
                     std::to_string(p.constraints.size()) + " constraints");
  Ideal I(p.nvars(), p.constraints);
  VerifyResult v = verify_certificate(p.objective, cert, I, s.tol);
  emit(out, to_json(v, p.variables), s.pretty);
  return v.verdict == Verdict::failed ? 2 : 0;
}

int cmd_hyperbolic(const Settings& s, std::ostream& out) {
  std::vector<std::string> names = s.vars.empty() ? std::vector<std::string>{} : split_names(s.vars);
  std::vector<Rational> e = parse_vector(s.direction);
  if (names.empty()) names = default_names(e.size());
  HyperbolicInstance inst{poly_parse(s.poly, names), e, s.trusted};
  inst.validate();

  if (s.to_pop) {
    HyperbolicProgram hp;
    hp.instance = inst;
    hp.c = parse_vector(s.cost);
    for (const auto& row : s.rows) {
      auto colon = row.find(':');
      if (colon == std::string::npos) throw InputError("row '" + row + "' must look like 'a1,...,an:b'");
      hp.A.push_back(parse_vector(row.substr(0, colon)));
      hp.b.push_back(parse_number(row.substr(colon + 1)));
    }
    PopData pd = hyperbolic_to_pop(hp, s.samples, s.seed);
    std::vector<std::string> vars = names;
    for (std::size_t j = 0; j < pd.slacks; ++j) vars.push_back(pd.variables[pd.nx + j]);
    Problem p{vars, pd.nx, pd.h0, pd.h};
    out << format_problem(p);
    return 0;
  }

  Json j;
  j["variables"] = names;
  j["polynomial"] = poly_format(inst.f, names);
  HyperbolicityCheck check;
  if (!s.trusted) {
    check = is_hyperbolic(inst, s.samples, s.seed);
    Json h;
    h["certified_on_samples"] = check.certified_on_samples;
    h["samples"] = check.samples;
    h["seed"] = s.seed;
    if (check.witness) {
      Json w = Json::array();
      for (const auto& q : *check.witness) w.push_back(to_string(q));
      h["witness"] = w;
    } else {
      h["witness"] = nullptr;
    }
    j["hyperbolicity"] = h;
  }
  if (!check.witness) {
    Json conds = Json::array();
    for (const auto& g : vieta_conditions(inst)) conds.push_back(poly_format(g, names));
    j["vieta_conditions"] = conds;
  }
  Json members = Json::array();
  for (const auto& text : s.points) {
    std::vector<Rational> a = parse_vector(text);
    if (a.size() != names.size()) throw InputError("point '" + text + "' has the wrong length");
    Json m;
    Json pt = Json::array();
    for (const auto& q : a) pt.push_back(to_string(q));
    m["point"] = pt;
    m["membership"] = to_string(cone_membership(inst, a));
    m["restriction"] = restrict_univariate(inst.f, inst.e, a).to_string();
    members.push_back(m);
  }
  j["memberships"] = members;
  emit(out, j, s.pretty);
  return check.witness ? 2 : 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Settings s;
  CLI::App app{"Global minimization of polynomials over real varieties via singular-locus decomposition"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json-pretty", s.pretty, "Indent JSON output");

  auto* solve = app.add_subcommand("solve", "Minimize a problem file; prints a report as JSON");
  solve->add_option("file", s.file, "Problem file")->required();
  solve->add_option("-k,--order", s.order, "Highest relaxation order per node");
  solve->add_option("--tol", s.tol, "SDP solver tolerance");
  solve->add_option("--value-tol", s.value_tol, "Stabilization tolerance between orders");
  solve->add_flag("--audit", s.audit, "Cross-check zero-dimensional nodes symbolically");
  solve->add_flag("--emit-problem", s.emit_problem, "Print the parsed problem in canonical form and exit");
  solve->add_flag("--minimizer", s.minimizer, "Also extract a minimizer");
  solve->add_flag("--no-direct", s.no_direct, "Skip the direct relaxation behind the advisories");
  solve->add_option("--threads", s.threads, "Worker threads (default SINGULAR_SOS_THREADS or hardware)");

  auto* decompose = app.add_subcommand("decompose", "Recursive singular-locus decomposition as JSON");
  decompose->add_option("file", s.file, "Problem file")->required();

  auto* kkt = app.add_subcommand("kkt", "List the KKT system of a problem");
  kkt->add_option("file", s.file, "Problem file")->required();

  auto* bounds = app.add_subcommand("bounds", "Theoretical relaxation order as an expression tree");
  bounds->add_option("--case", s.bound_case, "kkt, finite, rep-kkt-w, rep-finite-w, alg-xi-kkt, alg-xi-finite")
      ->required();
  bounds->add_option("-n", s.n, "Number of variables")->required();
  bounds->add_option("-l", s.l, "Number of generators");
  bounds->add_option("-d", s.d, "Degree");

  auto* certify = app.add_subcommand("certify", "Verify an SOS certificate against a problem file");
  certify->add_option("file", s.file, "Problem file (objective and ideal generators)")->required();
  certify->add_option("certificate", s.cert_file, "Certificate JSON")->required();
  certify->add_option("--tol", s.tol, "Tolerance for numeric certificates")->default_val(1e-6);

  auto* hyper = app.add_subcommand("hyperbolic", "Hyperbolicity, cone membership and conversion to a problem");
  hyper->add_option("--poly", s.poly, "Polynomial f")->required();
  hyper->add_option("--direction", s.direction, "Direction e, comma separated")->required();
  hyper->add_option("--vars", s.vars, "Variable names, comma separated (default x1..xn)");
  hyper->add_option("--point", s.points, "Point for a membership query (repeatable)");
  hyper->add_option("--seed", s.seed, "Sampling seed");
  hyper->add_option("--samples", s.samples, "Number of sampled directions");
  hyper->add_flag("--trusted", s.trusted, "Skip the sampled hyperbolicity check");
  hyper->add_flag("--to-pop", s.to_pop, "Emit min c'x s.t. Ax = b, x in the cone as a problem file");
  hyper->add_option("--cost", s.cost, "Cost vector c");
  hyper->add_option("--row", s.rows, "Constraint row 'a1,...,an:b' (repeatable)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 1;
  }

  try {
    if (solve->parsed()) return cmd_solve(s, out);
    if (decompose->parsed()) return cmd_decompose(s, out);
    if (kkt->parsed()) return cmd_kkt(s, out);
    if (bounds->parsed()) return cmd_bounds(s, out);
    if (certify->parsed()) return cmd_certify(s, out);
    if (hyper->parsed()) return cmd_hyperbolic(s, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

}  // namespace singular_sos::cli
