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

#include "singular_sos/json_io.hpp"

#include <cmath>
#include <stdexcept>

namespace singular_sos {

namespace {

Json strings(const std::vector<std::string>& v) { return Json(v); }

Json tree_json(const BoundExpr& e) {
  static const char* ops[] = {"leaf", "sum", "product", "power", "halve", "bit", "max"};
  if (e.kind() == BoundExpr::Kind::leaf) return e.leaf_value().get_str();
  Json j;
  j["op"] = ops[static_cast<int>(e.kind())];
  Json args = Json::array();
  for (const auto& c : e.children()) args.push_back(tree_json(c));
  j["args"] = args;
  return j;
}

std::string monomial_text(const Monomial& m, const std::vector<std::string>& names) {
  return poly_format(Polynomial::term(m, Rational(1)), names);
}

}  // namespace

Json number_json(double v) {
  if (std::isnan(v)) return nullptr;
  if (std::isinf(v)) return v > 0 ? "+inf" : "-inf";
  return v;
}

Json to_json(const OrderResult& r) {
  Json j;
  j["order"] = r.order;
  j["value"] = number_json(r.value);
  j["kind"] = to_string(r.kind);
  j["status"] = to_string(r.status);
  j["reliable"] = r.reliable;
  j["gap"] = number_json(r.gap);
  j["min_eigenvalue"] = number_json(r.min_eigenvalue);
  j["iterations"] = r.iterations;
  j["seconds"] = r.seconds;
  return j;
}

Json to_json(const VerifyResult& v, const std::vector<std::string>& names) {
  Json j;
  j["verdict"] = to_string(v.verdict);
  j["psd"] = v.psd;
  j["min_eigenvalue"] = number_json(v.min_eigenvalue);
  j["residual"] = poly_format(v.residual, names);
  j["residual_max"] = number_json(v.residual_max);
  j["message"] = v.message;
  return j;
}

Json certificate_json(const Certificate& cert, const std::vector<std::string>& names) {
  if (names.size() != cert.nvars) throw std::invalid_argument("certificate_json: wrong number of names");
  Json j;
  j["variables"] = strings(names);
  j["xi"] = to_string(cert.xi);
  j["xi_numeric"] = cert.xi.get_d();
  j["numeric"] = cert.numeric;
  Json basis = Json::array();
  for (const auto& m : cert.basis) basis.push_back(monomial_text(m, names));
  j["basis"] = basis;
  Json gram = Json::array();
  for (const auto& row : cert.gram) {
    Json r = Json::array();
    for (const auto& q : row) r.push_back(to_string(q));
    gram.push_back(r);
  }
  j["gram"] = gram;
  Json mult = Json::array();
  for (const auto& p : cert.multipliers) mult.push_back(poly_format(p, names));
  j["multipliers"] = mult;
  return j;
}

Certificate certificate_from_json(const Json& j, const std::vector<std::string>& names) {
  Certificate cert;
  cert.nvars = names.size();
  cert.xi = parse_rational(j.at("xi").get<std::string>());
  cert.numeric = j.value("numeric", false);
  for (const auto& t : j.at("basis")) {
    Polynomial p = poly_parse(t.get<std::string>(), names);
    if (p.size() != 1 || p.terms().begin()->second != 1)
      throw std::invalid_argument("certificate basis entry is not a monomial: " + t.get<std::string>());
    cert.basis.push_back(p.terms().begin()->first);
  }
  for (const auto& row : j.at("gram")) {
    std::vector<Rational> r;
    for (const auto& q : row) r.push_back(parse_rational(q.get<std::string>()));
    if (r.size() != cert.basis.size()) throw std::invalid_argument("Gram row length differs from the basis size");
    cert.gram.push_back(std::move(r));
  }
  if (cert.gram.size() != cert.basis.size()) throw std::invalid_argument("Gram matrix is not square");
  for (const auto& m : j.at("multipliers")) cert.multipliers.push_back(poly_parse(m.get<std::string>(), names));
  return cert;
}

Json to_json(const NodeRecord& rec) {
  Json j;
  j["id"] = rec.node_id;
  j["branch"] = to_string(rec.branch);
  j["depth"] = rec.depth;
  j["dim"] = rec.dim ? Json(*rec.dim) : Json(nullptr);
  j["generators"] = strings(rec.generators);
  j["relaxation_variables"] = strings(rec.relaxation_variables);
  j["relaxation_generators"] = strings(rec.relaxation_generators);
  Json orders = Json::array();
  for (const auto& o : rec.orders) orders.push_back(to_json(o));
  j["orders"] = orders;
  j["value"] = number_json(rec.value);
  j["kind"] = to_string(rec.kind);
  j["emptiness"] = rec.emptiness.empty() ? Json(nullptr) : Json(rec.emptiness);
  j["stabilized"] = rec.stabilized;
  j["theoretical_case"] = rec.theoretical_case;
  j["theoretical_order"] = rec.theoretical_order;
  j["theoretical_digits"] = rec.theoretical_digits;
  j["certificate"] = rec.certificate ? certificate_json(*rec.certificate, rec.relaxation_variables) : Json(nullptr);
  j["verification"] = rec.verification ? to_json(*rec.verification, rec.relaxation_variables) : Json(nullptr);
  j["audit_values"] = rec.audit_values;
  j["notes"] = strings(rec.notes);
  return j;
}

Json to_json(const SolveReport& report) {
  Json j;
  j["value"] = number_json(report.value);
  j["kind"] = to_string(report.kind);
  j["value_rational"] = report.value_rational.empty() ? Json(nullptr) : Json(report.value_rational);
  j["variables"] = strings(report.variables);
  Json T = Json::array();
  for (const auto& n : report.nodes) T.push_back(number_json(n.value));
  j["T"] = T;
  Json nodes = Json::array();
  for (const auto& n : report.nodes) nodes.push_back(to_json(n));
  j["nodes"] = nodes;
  Json direct = Json::array();
  for (const auto& o : report.direct) direct.push_back(to_json(o));
  j["direct"] = direct;
  j["non_attainment"] = report.non_attainment;
  j["unbounded_below"] = report.unbounded_below;
  j["advisories"] = strings(report.advisories);
  j["warnings"] = strings(report.warnings);
  j["diagnostics"] = strings(report.diagnostics);
  j["seconds"] = report.seconds;
  j["exit_code"] = report.exit_code();
  return j;
}

Json to_json(const MinimizerResult& m) {
  Json j;
  j["ok"] = m.ok;
  Json point = Json::array();
  for (const auto& q : m.point) point.push_back(to_string(q));
  j["point"] = point;
  Json xi = Json::array();
  for (const auto& q : m.xi) xi.push_back(to_string(q));
  j["xi"] = xi;
  j["residuals"] = m.residuals;
  j["objective_error"] = number_json(m.objective_error);
  j["message"] = m.message;
  return j;
}

Json to_json(const VarietyNode& node, const std::vector<std::string>& names) {
  Json j;
  j["id"] = node.id;
  j["kind"] = to_string(node.kind);
  j["dim"] = node.dim ? Json(*node.dim) : Json(nullptr);
  j["depth"] = node.depth();
  j["generators"] = strings(format_generators(node, names));
  Json prov = Json::array();
  for (const auto& p : node.provenance) prov.push_back({{"depth", p.depth}, {"parent", p.parent}});
  j["provenance"] = prov;
  j["incomplete"] = node.incomplete;
  return j;
}

Json to_json(const Decomposition& d, const std::vector<std::string>& names) {
  Json j;
  j["variables"] = strings(names);
  Json A = Json::array(), B = Json::array();
  for (const auto& n : d.A) A.push_back(to_json(n, names));
  for (const auto& n : d.B) B.push_back(to_json(n, names));
  j["A"] = A;
  j["B"] = B;
  j["diagnostics"] = strings(d.diagnostics);
  j["warnings"] = strings(d.warnings);
  return j;
}

Json to_json(const KKTSystem& sys, const std::vector<std::string>& x_names) {
  auto names = sys.variable_names(x_names);
  Json j;
  j["variables"] = strings(names);
  j["nx"] = sys.nx;
  j["nl"] = sys.nl;
  Json polys = Json::array();
  for (const auto& p : sys.polynomials) polys.push_back(poly_format(p, names));
  j["polynomials"] = polys;
  return j;
}

Json bounds_json(OrderCase c, const OrderParams& p) {
  BoundExpr e = theoretical_order(c, p);
  Json j;
  j["case"] = to_string(c);
  j["n"] = p.n;
  j["l"] = p.l;
  j["d"] = p.d;
  j["expression"] = e.to_string();
  j["tree"] = tree_json(e);
  if (auto v = evaluate_exact(e, 1000))
    j["value"] = v->get_str();
  else
    j["value"] = nullptr;
  DigitEstimate est = digit_estimate(e);
  Json digits;
  digits["exact"] = est.exact;
  digits["digits"] = est.digits.empty() ? Json(nullptr) : Json(est.digits);
  digits["digits_lo"] = est.digits_lo.empty() ? Json(nullptr) : Json(est.digits_lo);
  digits["digits_hi"] = est.digits_hi.empty() ? Json(nullptr) : Json(est.digits_hi);
  digits["log10_digits_lo"] = est.log10_digits_lo.empty() ? Json(nullptr) : Json(est.log10_digits_lo);
  digits["log10_digits_hi"] = est.log10_digits_hi.empty() ? Json(nullptr) : Json(est.log10_digits_hi);
  j["digits"] = digits;
  Magnitude m = magnitude(e);
  j["magnitude"] = {{"level", m.level}, {"lo", m.lo}, {"hi", m.hi}};
  return j;
}

}  // namespace singular_sos
