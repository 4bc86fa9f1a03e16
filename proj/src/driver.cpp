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

#include "singular_sos/driver.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <limits>
#include <thread>

#include "singular_sos/bounds.hpp"
#include "singular_sos/univariate.hpp"

namespace singular_sos {

namespace {

using Clock = std::chrono::steady_clock;
constexpr double kInf = std::numeric_limits<double>::infinity();

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  double r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
  return r > 1e15 ? std::numeric_limits<std::size_t>::max() : static_cast<std::size_t>(std::llround(r));
}

std::vector<std::string> names_for(const SolveOptions& opts, std::size_t n) {
  if (opts.variables.size() == n) return opts.variables;
  return default_names(n);
}

int max_degree(const Polynomial& h0, const std::vector<Polynomial>& h) {
  int d = h0.degree();
  for (const auto& g : h) d = std::max(d, g.degree());
  return std::max(d, 1);
}

void set_theoretical(NodeRecord& rec, OrderCase c, long n, long l, long d) {
  try {
    BoundExpr e = theoretical_order(c, {n, l, d});
    rec.theoretical_order = e.to_string();
    DigitEstimate est = digit_estimate(e);
    if (est.exact)
      rec.theoretical_digits = est.digits;
    else if (!est.digits_lo.empty())
      rec.theoretical_digits = "digits in [" + est.digits_lo + ", " + est.digits_hi + "]";
    else if (!est.log10_digits_lo.empty())
      rec.theoretical_digits = "log10(digits) in [" + est.log10_digits_lo + ", " + est.log10_digits_hi + "]";
    else {
      Magnitude m = magnitude(e);
      rec.theoretical_digits =
          "log2 iterated " + std::to_string(m.level) + " times lies in [" + m.lo + ", " + m.hi + "]";
    }
  } catch (const std::exception& e) {
    rec.theoretical_order = std::string("unavailable: ") + e.what();
  }
}

/// Real values of h0 on a zero-dimensional node: real roots of the eliminant of
/// (I, t - h0) in t.
std::vector<double> eliminant_values(const Polynomial& h0, const Ideal& I) {
  const std::size_t n = I.nvars(), N = n + 1;
  std::vector<Polynomial> gens;
  for (const auto& g : I.basis()) gens.push_back(g.extended(N));
  gens.push_back(Polynomial::variable(N, n) - h0.extended(N));
  Ideal E(N, gens, MonomialOrder(OrderKind::lex));
  for (const auto& g : E.basis()) {
    auto sup = g.support();
    if (sup.size() == 1 && sup[0] == n) {
      UPoly u = UPoly::from_polynomial(g, n);
      std::vector<double> roots = real_roots_approx(u);
      for (const auto& q : rational_roots(u))
        for (double& r : roots)
          if (std::abs(r - q.get_d()) <= 1e-6 * (1 + std::abs(r))) r = q.get_d();
      return roots;
    }
  }
  return {};
}

/// Exact test for a ray base + s*dir inside V(h) along which h0 decreases without bound.
std::optional<std::pair<std::vector<Rational>, std::vector<Rational>>> find_descent_ray(
    const Polynomial& h0, const std::vector<Polynomial>& h) {
  const std::size_t n = h0.nvars();
  std::vector<std::vector<Rational>> bases{std::vector<Rational>(n, 0)};
  for (std::size_t i = 0; i < n; ++i)
    for (int s : {1, -1}) {
      std::vector<Rational> b(n, 0);
      b[i] = s;
      bases.push_back(b);
    }
  std::vector<std::vector<Rational>> dirs;
  if (n <= 6) {
    std::vector<int> d(n, -1);
    for (;;) {
      if (std::any_of(d.begin(), d.end(), [](int v) { return v != 0; }))
        dirs.emplace_back(d.begin(), d.end());
      std::size_t i = 0;
      while (i < n && d[i] == 1) d[i++] = -1;
      if (i == n) break;
      ++d[i];
    }
  } else {
    for (std::size_t i = 0; i < n; ++i)
      for (int s : {1, -1}) {
        std::vector<Rational> v(n, 0);
        v[i] = s;
        dirs.push_back(v);
      }
  }
  for (const auto& b : bases) {
    bool on = std::all_of(h.begin(), h.end(), [&](const Polynomial& g) { return g.evaluate(b) == 0; });
    if (!on) continue;
    for (const auto& d : dirs) {
      std::vector<Polynomial> images;
      for (std::size_t i = 0; i < n; ++i)
        images.push_back(Polynomial::constant(1, b[i]) + Polynomial::variable(1, 0) * d[i]);
      bool inside = std::all_of(h.begin(), h.end(), [&](const Polynomial& g) { return g.substitute(images).is_zero(); });
      if (!inside) continue;
      UPoly f = UPoly::from_polynomial(h0.substitute(images), 0);
      if (f.degree() >= 1 && f.leading() < 0) return std::make_pair(b, d);
    }
  }
  return std::nullopt;
}

std::string format_point(const std::vector<Rational>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_string(v[i]);
  return s + ")";
}

NodeRecord solve_node(const Polynomial& h0, const VarietyNode& node, const SolveOptions& opts) {
  const std::size_t n = h0.nvars();
  const auto names = names_for(opts, n);
  NodeRecord rec;
  rec.node_id = node.id;
  rec.depth = node.depth();
  rec.dim = node.dim;
  rec.generators = format_generators(node, names);
  rec.branch = optimality_branch(h0, node);

  const auto& basis = node.ideal.basis();
  const long l = static_cast<long>(basis.size());
  const long d = max_degree(h0, basis);
  rec.theoretical_case = rec.branch == Branch::kkt ? "kkt" : "finite";
  set_theoretical(rec, rec.branch == Branch::kkt ? OrderCase::kkt : OrderCase::finite, static_cast<long>(n), l, d);

  Polynomial f = h0;
  std::vector<Polynomial> gens;
  std::vector<std::string> rnames = names;
  if (rec.branch == Branch::kkt) {
    KKTSystem K = kkt_system(h0, basis);
    rnames = K.variable_names(names);
    f = h0.extended(K.nvars());
    gens = K.polynomials;
  } else {
    gens = basis;
  }
  rec.relaxation_vars = f.nvars();
  rec.relaxation_variables = rnames;
  for (const auto& g : gens) rec.relaxation_generators.push_back(poly_format(g, rnames));
  Ideal R(f.nvars(), gens);

  if (rec.branch == Branch::kkt && is_trivial(R)) {
    rec.kind = ValueKind::plus_infinity;
    rec.value = kInf;
    rec.emptiness = "groebner-trivial";
    rec.notes.push_back("KKT ideal has reduced basis {1}; the node contributes +inf");
    if (opts.audit) {
      const unsigned kmin = minimal_order(f, gens);
      const unsigned kmax = opts.max_order ? std::max(*opts.max_order, kmin) : kmin + 4;
      for (unsigned k = kmin; k <= kmax; ++k) {
        std::size_t nb = binomial(f.nvars() + k, k), nm = binomial(f.nvars() + 2 * k, 2 * k);
        if (nb > opts.max_basis || nm > opts.max_moments) {
          rec.notes.push_back("audit: relaxation at order " + std::to_string(k) + " skipped (basis " +
                              std::to_string(nb) + ", " + std::to_string(nm) + " moments)");
          break;
        }
        RhoResult r = rho_k(f, gens, k, opts);
        rec.orders.push_back(r.summary);
        rec.notes.push_back(std::string("audit: relaxation at order ") + std::to_string(k) + " reports " +
                            to_string(r.summary.status));
        if (r.summary.kind == ValueKind::plus_infinity) break;
      }
    }
    return rec;
  }

  if (rec.branch == Branch::finite && opts.audit) {
    rec.audit_values = eliminant_values(h0, node.ideal);
    std::string list;
    for (double v : rec.audit_values) list += (list.empty() ? "" : ", ") + std::to_string(v);
    rec.notes.push_back("audit: real roots of the eliminant of h0 on the node: {" + list + "}");
  }

  const unsigned kmin = minimal_order(f, gens);
  const unsigned kmax = opts.max_order ? std::max(*opts.max_order, kmin) : kmin + 4;
  const std::size_t N = f.nvars();
  std::vector<double> finite_values;
  bool plus_inf = false, all_minus_inf = true;
  std::optional<RhoResult> best;
  for (unsigned k = kmin; k <= kmax; ++k) {
    std::size_t nb = binomial(N + k, k), nm = binomial(N + 2 * k, 2 * k);
    if (nb > opts.max_basis || nm > opts.max_moments) {
      rec.notes.push_back("order " + std::to_string(k) + " skipped: relaxation with basis " + std::to_string(nb) +
                          " and " + std::to_string(nm) + " moments exceeds the size limits");
      break;
    }
    RhoResult r = rho_k(f, gens, k, opts);
    rec.orders.push_back(r.summary);
    const auto& o = r.summary;
    if (o.kind != ValueKind::minus_infinity) all_minus_inf = false;
    if (o.kind == ValueKind::plus_infinity) {
      plus_inf = true;
      break;
    }
    if (o.kind == ValueKind::finite && o.reliable) {
      if (finite_values.empty() || o.value >= finite_values.back() - opts.value_tol)
        if (!best || o.value >= best->summary.value) best = std::move(r);
      finite_values.push_back(o.value);
      std::size_t m = finite_values.size();
      if (m >= 3 && std::abs(finite_values[m - 1] - finite_values[m - 2]) <= opts.value_tol &&
          std::abs(finite_values[m - 2] - finite_values[m - 3]) <= opts.value_tol) {
        rec.stabilized = true;
        break;
      }
    }
  }

  if (plus_inf) {
    rec.kind = ValueKind::plus_infinity;
    rec.value = kInf;
    rec.emptiness = "sdp-dual-infeasible";
    rec.notes.push_back("moment relaxation infeasible: the relaxation variety has no real points");
  } else if (!finite_values.empty()) {
    rec.kind = ValueKind::finite;
    rec.value = *std::max_element(finite_values.begin(), finite_values.end());
    if (!rec.stabilized) rec.notes.push_back("values did not stabilize within the tried orders");
  } else if (!rec.orders.empty() && all_minus_inf) {
    rec.kind = ValueKind::minus_infinity;
    rec.value = -kInf;
  } else {
    rec.kind = ValueKind::unknown;
    rec.value = std::numeric_limits<double>::quiet_NaN();
    rec.notes.push_back("no reliable relaxation value");
  }

  if (opts.certificates && best && best->certificate) {
    rec.certificate = best->certificate;
    VerifyResult v = verify_certificate(f, *best->certificate, R, 1e-6);
    Certificate exact = rationalize_certificate(*best->certificate);
    VerifyResult ve = verify_certificate(f, exact, R, 1e-6);
    if (ve.verdict == Verdict::exact) {
      rec.certificate = exact;
      rec.verification = ve;
    } else {
      rec.verification = v;
    }
  }

  if (rec.branch == Branch::finite && opts.audit && rec.kind == ValueKind::finite) {
    bool matched = std::any_of(rec.audit_values.begin(), rec.audit_values.end(),
                               [&](double v) { return std::abs(v - rec.value) <= 1e-6 * (1 + std::abs(v)); });
    rec.notes.push_back(matched ? "audit: relaxation value matches a symbolic value"
                                : "audit: relaxation value matches no symbolic value");
  }
  return rec;
}

}  // namespace

const char* to_string(ValueKind k) {
  switch (k) {
    case ValueKind::finite:
      return "finite";
    case ValueKind::plus_infinity:
      return "+inf";
    case ValueKind::minus_infinity:
      return "-inf";
    case ValueKind::unknown:
      return "unknown";
  }
  return "?";
}

const char* to_string(Branch b) { return b == Branch::kkt ? "A-kkt" : "B-finite"; }

unsigned default_thread_count() {
  if (const char* env = std::getenv("SINGULAR_SOS_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

RhoResult rho_k(const Polynomial& h0, const std::vector<Polynomial>& gens, unsigned k, const SolveOptions& opts) {
  auto t0 = Clock::now();
  DualRelaxation D = assemble_dual(h0, gens, k);
  SDPOptions so;
  so.tol = opts.tol;
  RhoResult r;
  r.solution = solve_sdp(D.sdp, so);
  const auto& s = r.solution;
  auto& o = r.summary;
  o.order = k;
  o.status = s.status;
  o.iterations = s.iterations;
  o.gap = s.gap;
  o.min_eigenvalue = s.min_eig_X;
  switch (s.status) {
    case SDPStatus::optimal:
      o.value = -s.primal_value;
      break;
    case SDPStatus::dual_infeasible:
      o.value = kInf;
      o.kind = ValueKind::plus_infinity;
      break;
    case SDPStatus::primal_infeasible:
      o.value = -kInf;
      o.kind = ValueKind::minus_infinity;
      break;
    case SDPStatus::stalled:
    case SDPStatus::iteration_limit: {
      o.value = -s.primal_value;
      const double loose = 1e-5;
      o.reliable = s.gap <= loose && s.primal_residual <= loose && s.dual_residual <= loose;
      if (!o.reliable) o.kind = ValueKind::unknown;
      break;
    }
  }
  if (opts.certificates && o.kind == ValueKind::finite && o.reliable) r.certificate = extract_certificate(s, D);
  o.seconds = seconds_since(t0);
  return r;
}

Branch optimality_branch(const Polynomial&, const VarietyNode& node) {
  switch (node.kind) {
    case NodeKind::positive_dim:
      return Branch::kkt;
    case NodeKind::zero_dim:
      return Branch::finite;
    case NodeKind::empty:
      break;
  }
  throw std::invalid_argument("optimality_branch: empty node has no branch (it contributes +inf)");
}

SolveReport solve_pop(const Polynomial& h0, const std::vector<Polynomial>& h, const SolveOptions& opts) {
  auto t0 = Clock::now();
  const std::size_t n = h0.nvars();
  for (const auto& g : h)
    if (g.nvars() != n) throw std::invalid_argument("solve_pop: ring size mismatch");
  SolveReport rep;
  rep.variables = names_for(opts, n);

  std::vector<Polynomial> gens;
  for (const auto& g : h)
    if (!g.is_zero()) gens.push_back(g);
  Decomposition D = decompose_singular_loci(make_node(Ideal(n, gens)), opts.radical);
  rep.diagnostics = D.diagnostics;
  rep.warnings = D.warnings;
  std::vector<const VarietyNode*> nodes;
  for (const auto& v : D.A) nodes.push_back(&v);
  for (const auto& v : D.B) nodes.push_back(&v);
  std::sort(nodes.begin(), nodes.end(), [](const VarietyNode* a, const VarietyNode* b) { return a->id < b->id; });
  if (nodes.empty()) rep.diagnostics.push_back("the variety has no components: the infimum is +inf");

  rep.nodes.resize(nodes.size());
  std::vector<std::exception_ptr> errors(nodes.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (;;) {
      std::size_t i = next++;
      if (i >= nodes.size()) return;
      try {
        rep.nodes[i] = solve_node(h0, *nodes[i], opts);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  unsigned nthreads = opts.threads ? opts.threads : default_thread_count();
  nthreads = static_cast<unsigned>(std::min<std::size_t>(nthreads, nodes.size()));
  if (nthreads <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  rep.value = kInf;
  rep.kind = ValueKind::plus_infinity;
  for (const auto& r : rep.nodes) {
    if (r.kind == ValueKind::unknown) {
      rep.warnings.push_back("node " + std::to_string(r.node_id) + ": no reliable relaxation value; excluded from the minimum");
      continue;
    }
    if (r.value < rep.value) {
      rep.value = r.value;
      rep.kind = r.kind;
    }
  }

  if (opts.direct_check) {
    std::vector<Polynomial> hs = gens;
    unsigned kmin = minimal_order(h0, hs);
    bool all_unbounded = true;
    double lower = -kInf;
    for (unsigned k = kmin; k <= kmin + 1; ++k) {
      if (binomial(n + k, k) > opts.max_basis || binomial(n + 2 * k, 2 * k) > opts.max_moments) break;
      SolveOptions o = opts;
      o.certificates = false;
      RhoResult r = rho_k(h0, hs, k, o);
      rep.direct.push_back(r.summary);
      const auto& s = r.summary;
      if (s.kind != ValueKind::minus_infinity && s.reliable) all_unbounded = false;
      if (s.kind == ValueKind::finite && s.reliable) lower = std::max(lower, s.value);
    }
    if (!rep.direct.empty() && all_unbounded) {
      if (auto ray = find_descent_ray(h0, gens)) {
        rep.unbounded_below = true;
        rep.value = -kInf;
        rep.kind = ValueKind::minus_infinity;
        rep.advisories.push_back("unbounded below: h0 decreases without bound along the ray " +
                                 format_point(ray->first) + " + s*" + format_point(ray->second) +
                                 " inside the variety, and the direct relaxation is infeasible at every tried order");
      }
    }
    if (rep.kind == ValueKind::finite && std::isfinite(lower)) {
      double slack = std::max(1e-6, 1e-4 * std::abs(rep.value));
      bool all_above = std::all_of(rep.nodes.begin(), rep.nodes.end(), [&](const NodeRecord& r) {
        return r.kind != ValueKind::finite || r.value > lower + slack;
      });
      if (all_above) {
        rep.non_attainment = true;
        rep.advisories.push_back("every node value exceeds the direct relaxation bound " + std::to_string(lower) +
                                 "; the infimum is finite but may not be attained, in which case the reported value "
                                 "is an upper estimate and not certified exact");
      }
    }
  }

  if (rep.kind == ValueKind::finite) rep.value_rational = to_string(rationalize(rep.value));
  rep.seconds = seconds_since(t0);
  return rep;
}

MinimizerResult extract_minimizer(const Polynomial& h0, const std::vector<Polynomial>& h, const Rational& hstar,
                                  const SolveOptions& opts) {
  const std::size_t n = h0.nvars();
  MinimizerResult res;
  std::vector<Polynomial> system = h;
  system.push_back(h0 - Polynomial::constant(n, hstar));
  if (is_trivial(Ideal(n, system))) {
    res.message = "V(h, h0 - hstar) is empty";
    return res;
  }
  SolveOptions sub = opts;
  sub.direct_check = false;
  sub.certificates = false;
  for (std::size_t t = 0; t <= n; ++t) {
    std::vector<Rational> a(n, 0);
    if (t > 0) a[t - 1] = 1;
    res.anchors.push_back(a);
    Polynomial q(n);
    for (std::size_t i = 0; i < n; ++i) {
      Polynomial diff = Polynomial::variable(n, i) - Polynomial::constant(n, a[i]);
      q += diff * diff;
    }
    SolveReport r = solve_pop(q, system, sub);
    if (r.kind != ValueKind::finite) {
      res.message = "distance subproblem " + std::to_string(t) + " returned " + to_string(r.kind);
      return res;
    }
    res.xi_numeric.push_back(r.value);
    Rational xi = rationalize(r.value);
    res.xi.push_back(xi);
    system.push_back(Polynomial::constant(n, xi) - q);
  }

  // (a_t - a_0)' x = (|a_t|^2 - |a_0|^2 - xi_t + xi_0) / 2, solved exactly.
  std::vector<std::vector<Rational>> M(n, std::vector<Rational>(n + 1));
  for (std::size_t t = 1; t <= n; ++t) {
    Rational rhs = res.xi[0] - res.xi[t];
    for (std::size_t i = 0; i < n; ++i) {
      M[t - 1][i] = res.anchors[t][i] - res.anchors[0][i];
      rhs += res.anchors[t][i] * res.anchors[t][i] - res.anchors[0][i] * res.anchors[0][i];
    }
    M[t - 1][n] = rhs / 2;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && M[p][c] == 0) ++p;
    if (p == n) {
      res.message = "anchor directions are linearly dependent";
      return res;
    }
    std::swap(M[c], M[p]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || M[r][c] == 0) continue;
      Rational f = M[r][c] / M[c][c];
      for (std::size_t j = c; j <= n; ++j) M[r][j] -= f * M[c][j];
    }
  }
  for (std::size_t i = 0; i < n; ++i) res.point.push_back(M[i][n] / M[i][i]);
  for (const auto& g : h) res.residuals.push_back(std::abs(to_double(g.evaluate(res.point))));
  res.objective_error = std::abs(to_double(h0.evaluate(res.point) - hstar));
  bool small = std::all_of(res.residuals.begin(), res.residuals.end(), [&](double v) { return v <= 1e-6; });
  res.ok = small && res.objective_error <= 1e-6;
  res.message = res.ok ? "minimizer recovered" : "recovered point violates the constraints or the value";
  return res;
}

}  // namespace singular_sos
