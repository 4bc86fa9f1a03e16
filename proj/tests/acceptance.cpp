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

// Acceptance checks: prints one PASS/FAIL line per criterion and exits nonzero on any FAIL.

#include <Eigen/Dense>
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "singular_sos/bounds.hpp"
#include "singular_sos/driver.hpp"
#include "singular_sos/hyperbolic.hpp"
#include "singular_sos/ideal.hpp"
#include "singular_sos/relaxation.hpp"
#include "singular_sos/variety.hpp"

using namespace singular_sos;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

Polynomial P(const std::string& text, const std::vector<std::string>& vars) { return poly_parse(text, vars); }

std::vector<Polynomial> Ps(const std::vector<std::string>& texts, const std::vector<std::string>& vars) {
  std::vector<Polynomial> out;
  for (const auto& t : texts) out.push_back(poly_parse(t, vars));
  return out;
}

/// Collects failures; a criterion passes when no check failed.
class Checker {
 public:
  void operator()(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    failed_ += !ok;
  }
  bool ok() const { return failed_ == 0; }
  std::string summary() const {
    std::ostringstream s;
    s << checks_ << (checks_ == 1 ? " check" : " checks");
    if (failed_) {
      s << ", " << failed_ << " failed:";
      for (const auto& f : failures_) s << " [" << f << "]";
    }
    return s.str();
  }
  std::string note;

 private:
  int checks_ = 0;
  int failed_ = 0;
  std::vector<std::string> failures_;
};

Rational random_rational(std::mt19937_64& rng, int num_range, int den_max) {
  std::uniform_int_distribution<int> num(-num_range, num_range), den(1, den_max);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

Polynomial random_poly(std::mt19937_64& rng, std::size_t n, unsigned deg, int terms) {
  Polynomial p(n);
  std::uniform_int_distribution<int> coef(-5, 5);
  for (int t = 0; t < terms; ++t) {
    std::vector<unsigned> ex(n, 0);
    unsigned left = std::uniform_int_distribution<unsigned>(0, deg)(rng);
    for (std::size_t i = 0; i < n && left > 0; ++i) {
      unsigned k = std::uniform_int_distribution<unsigned>(0, left)(rng);
      ex[i] = k;
      left -= k;
    }
    std::shuffle(ex.begin(), ex.end(), rng);
    if (int c = coef(rng)) p.add_term(Monomial(ex), Rational(c));
  }
  return p;
}

// 1. Two-rays decomposition.
void rays(Checker& c) {
  const auto X = default_names(5);
  auto ideal = [&](const std::vector<std::string>& g) { return Ideal(5, Ps(g, X)); };
  auto t0 = Clock::now();
  Decomposition d =
      decompose_singular_loci(make_node(5, Ps({"x1^3 - x4^2", "(x2 - x3)^3 - x5^2", "x1*(x2 - x3)"}, X)));
  const double secs = seconds_since(t0);
  c(d.A.size() == 3, "three A-nodes");
  c(d.B.empty(), "B empty");
  if (d.A.size() != 3) return;
  const std::vector<Ideal> expect{ideal({"x5", "x2 - x3", "x1^3 - x4^2"}), ideal({"x4", "(x2 - x3)^3 - x5^2", "x1"}),
                                  ideal({"x1", "x5", "x4", "x2 - x3"})};
  const int dims[] = {2, 2, 1}, depths[] = {0, 0, 1};
  for (std::size_t i = 0; i < 3; ++i) {
    c(d.A[i].ideal.basis() == expect[i].basis(), "reduced basis of node " + std::to_string(i));
    c(d.A[i].dim == dims[i], "dim of node " + std::to_string(i));
    c(d.A[i].depth() == depths[i], "depth of node " + std::to_string(i));
  }
  c(secs < 10, "runtime");
  std::ostringstream note;
  note << secs << " s";
  c.note = note.str();
}

// 2. The pop5 fixture end to end.
void pop(Checker& c) {
  const auto X = default_names(5);
  SolveOptions o;
  o.variables = X;
  auto t0 = Clock::now();
  SolveReport r = solve_pop(P("x1 + x2", X), Ps({"x1^5 - x3^2", "x2^5 - x4^2", "-x1*x2 - x5^2"}, X), o);
  const double secs = seconds_since(t0);
  c(r.kind == ValueKind::finite && std::abs(r.value) <= 1e-6, "value 0");
  int trivial = 0, finite = 0;
  for (const auto& n : r.nodes) {
    if (n.branch == Branch::kkt && n.emptiness == "groebner-trivial" && n.kind == ValueKind::plus_infinity) ++trivial;
    if (n.branch == Branch::finite && n.kind == ValueKind::finite && std::abs(n.value) <= 1e-6) ++finite;
  }
  c(r.nodes.size() == 3, "three nodes");
  c(trivial == 2, "two Groebner-trivial A-nodes");
  c(finite == 1, "one B-node with value 0");
  c(secs < 60, "runtime");
  std::ostringstream note;
  note << "value " << r.value << ", " << secs << " s";
  c.note = note.str();
}

// 3. KKT failure at the cusp.
void cusp(Checker& c) {
  const auto X = default_names(2);
  Polynomial h0 = P("x1", X);
  auto h = Ps({"x1^3 - x2^2"}, X);
  KKTSystem sys = kkt_system(h0, h);
  auto basis = groebner_basis(Ideal(sys.nvars(), sys.polynomials));
  c(basis.size() == 1 && basis[0] == Polynomial::constant(sys.nvars(), 1), "KKT basis {1}");
  SolveOptions o;
  o.variables = X;
  SolveReport r = solve_pop(h0, h, o);
  c(r.kind == ValueKind::finite && std::abs(r.value) <= 1e-6, "value 0");
  bool recursed = false;
  for (const auto& n : r.nodes)
    if (n.branch == Branch::finite && n.depth == 1 && std::abs(n.value) <= 1e-6) recursed = true;
  c(recursed, "singular point node");
  MinimizerResult m = extract_minimizer(h0, h, 0, o);
  c(m.ok && m.point == std::vector<Rational>{0, 0}, "minimizer (0, 0)");
}

// 4. Representation certificate.
void rep(Checker& c) {
  const auto X = default_names(5);
  Certificate cert;
  cert.nvars = 5;
  cert.xi = 0;
  cert.basis = {Monomial(5)};
  cert.gram = {{Rational(0)}};
  cert.multipliers = Ps({"1", "0", "0", "1"}, X);
  VerifyResult v = verify_certificate(P("x1 + x2 - x3", X), cert, Ideal(5, Ps({"x1", "x5", "x4", "x2 - x3"}, X)));
  c(v.verdict == Verdict::exact, "exact verdict");
}

// 5. Bound formulas.
void bounds(Checker& c) {
  for (long d = 0; d <= 20; ++d) {
    unsigned k = 1;
    while (Integer(d) >= (Integer(1) << k)) ++k;
    c(bit(Integer(d)) == k, "bit(" + std::to_string(d) + ")");
  }
  c(c_bound(2, 2, 2) == 54, "c(2,2,2)");
  auto inner = evaluate_exact(b_exponent(1, 2, 2));
  c(inner && *inner == Integer("17179934720"), "b(1,2,2) exponent");

  std::vector<BoundExpr> pool;
  for (long b : {2, 3, 5, 10})
    for (long e : {1, 2, 3, 7, 20, 60, 150}) pool.push_back(pow(BoundExpr(b), BoundExpr(e)));
  pool.push_back(pow(BoundExpr(2), pow(BoundExpr(2), BoundExpr(5))));
  pool.push_back(pow(BoundExpr(3), pow(BoundExpr(2), BoundExpr(6))) + BoundExpr(1));
  pool.push_back(halve(pow(BoundExpr(10), BoundExpr(99))) * BoundExpr(3));
  pool.push_back(max(BoundExpr(7) * BoundExpr(11), pow(BoundExpr(4), BoundExpr(3))));
  pool.push_back(BoundExpr(c_bound(10, 2, 18)));
  pool.push_back(bit(pow(BoundExpr(2), BoundExpr(40))));
  pool.push_back(b_exponent(1, 2, 2));
  Integer limit;
  mpz_ui_pow_ui(limit.get_mpz_t(), 10, 100);
  int pairs = 0;
  for (std::size_t i = 0; i < pool.size(); ++i)
    for (std::size_t j = 0; j < pool.size(); ++j) {
      auto a = evaluate_exact(pool[i]), b = evaluate_exact(pool[j]);
      if (!a || !b || *a >= limit || *b >= limit) continue;
      const int exact = *a < *b ? -1 : (*a > *b ? 1 : 0);
      c(compare(pool[i], pool[j]) == exact, "compare " + pool[i].to_string() + " vs " + pool[j].to_string());
      c(compare(pool[i], pool[j], CompareMode::force_log) == exact, "log compare " + pool[i].to_string());
      ++pairs;
    }
  c.note = std::to_string(pairs) + " pairs";
}

// 6. Weak duality and monotonicity.
void sandwich(Checker& c) {
  struct Fixture {
    std::string name;
    std::vector<std::string> vars;
    std::string h0;
    std::vector<std::string> h;
    double hstar;
    unsigned orders;
  };
  const std::vector<Fixture> fixtures{
      {"circle", {"x", "y"}, "x", {"x^2 + y^2 - 1"}, -1.0, 3},
      {"double well", {"x"}, "x^4 - 2*x^2", {}, -1.0, 3},
      {"valley", {"x", "y"}, "(x^2 - 1)^2 + y^2", {}, 0.0, 2},
      {"product on circle", {"x", "y"}, "x*y", {"x^2 + y^2 - 2"}, -1.0, 3},
      {"sphere form", {"x", "y", "z"}, "x*y + y*z", {"x^2 + y^2 + z^2 - 1"}, -1.0 / std::sqrt(2.0), 2},
      {"rep", default_names(5), "x1 + x2 - x3", {"x1", "x5", "x4", "x2 - x3"}, 0.0, 2},
  };
  double worst_gap = 0, worst_eig = 0;
  for (const auto& f : fixtures) {
    Polynomial h0 = P(f.h0, f.vars);
    auto h = Ps(f.h, f.vars);
    double prev_rho = -INFINITY, prev_tau = -INFINITY;
    const unsigned k0 = minimal_order(h0, h);
    for (unsigned k = k0; k < k0 + f.orders; ++k) {
      const std::string at = f.name + " k=" + std::to_string(k);
      SDPSolution sd = solve_sdp(assemble_dual(h0, h, k).sdp);
      SDPSolution sp = solve_sdp(assemble_primal(h0, h, k).to_sdp());
      c(sd.status == SDPStatus::optimal && sp.status == SDPStatus::optimal, at + " solved");
      const double rho = -sd.primal_value, tau = sp.primal_value;
      c(rho <= tau + 1e-6, at + " rho <= tau");
      c(tau <= f.hstar + 1e-6, at + " tau <= h*");
      c(rho >= prev_rho - 1e-6, at + " rho nondecreasing");
      c(tau >= prev_tau - 1e-6, at + " tau nondecreasing");
      for (const SDPSolution* s : {&sd, &sp}) {
        worst_gap = std::max(worst_gap, s->gap);
        worst_eig = std::min({worst_eig, s->min_eig_X, s->min_eig_Z});
        c(s->gap <= 1e-8, at + " gap " + std::to_string(s->gap));
        c(std::min(s->min_eig_X, s->min_eig_Z) >= -1e-8, at + " eigenvalues");
      }
      prev_rho = rho;
      prev_tau = tau;
    }
  }
  std::ostringstream s;
  s << fixtures.size() << " fixtures, worst gap " << worst_gap << ", min eigenvalue " << worst_eig;
  c.note = s.str();
}

// 7. Interpolation certificates.
void interpolation(Checker& c) {
  std::mt19937_64 rng(2024);
  const std::vector<std::string> Y{"y"};
  const auto X = default_names(2);
  std::uniform_int_distribution<int> size(1, 5), num(0, 60), den(1, 6);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Rational> t;
    const int r = size(rng);
    while (static_cast<int>(t.size()) < r) {
      Rational q(num(rng), den(rng));
      q.canonicalize();
      if (q <= 10 && std::find(t.begin(), t.end(), q) == t.end()) t.push_back(q);
    }
    // Univariate interpolants in y: Kronecker deltas at the values.
    auto p = lagrange_interpolants(P("y", Y), t);
    for (std::size_t i = 0; i < t.size(); ++i)
      for (std::size_t j = 0; j < t.size(); ++j)
        c(p[j].evaluate(std::vector<Rational>{t[i]}) == (i == j ? 1 : 0), "delta");
    // Composition with a random h0 and the degree bound on sigma.
    Polynomial h0 = random_poly(rng, 2, 3, 4);
    if (h0.degree() < 1) h0 = P("x1^2 + x2", X);
    auto ph = lagrange_interpolants(h0, t);
    Polynomial sigma = finite_value_certificate(h0, t), expect(2);
    for (std::size_t j = 0; j < t.size(); ++j) {
      c(ph[j] == p[j].substitute({h0}), "composed interpolant");
      expect += ph[j] * ph[j] * t[j];
    }
    c(sigma == expect, "sigma = sum t_j p_j^2");
    c(sigma.degree() <= 2 * h0.degree() * (r - 1), "degree bound");
  }
}

// 8. Hyperbolic suite.
void hyperbolic(Checker& c) {
  for (std::size_t n : {2u, 3u}) {
    HyperbolicInstance inst{P(n == 2 ? "x1*x2" : "x1*x2*x3", default_names(n)), std::vector<Rational>(n, 1)};
    for (const auto& a : sample_points(n, 100, 7 + n)) {
      const bool orthant = std::all_of(a.begin(), a.end(), [](const Rational& q) { return q >= 0; });
      c((cone_membership(inst, a) == Membership::member) == orthant, "orthant membership");
    }
  }
  HyperbolicProgram lp{{{1, 1}}, {1}, {1, 2}, {P("x1*x2", default_names(2)), {1, 1}}};
  PopData pop = hyperbolic_to_pop(lp);
  SolveOptions o;
  o.variables = pop.variables;
  SolveReport r = solve_pop(pop.h0, pop.h, o);
  c(r.kind == ValueKind::finite && std::abs(r.value - 1.0) <= 1e-6, "LP optimum 1");
  auto refuted = is_hyperbolic({P("x1^2 + x2^2", default_names(2)), {1, 0}});
  c(refuted.witness.has_value(), "x1^2 + x2^2 refuted");
  std::ostringstream note;
  note << "LP value " << r.value;
  c.note = note.str();
}

std::size_t numeric_rank(const Eigen::MatrixXd& m) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto& s = svd.singularValues();
  const double tol = 1e-9 * std::max(1.0, s(0));
  std::size_t rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i) rank += s(i) > tol;
  return rank;
}

// 9. Gradients and Jacobian rank.
void gradients(Checker& c) {
  std::mt19937_64 rng(99);
  const double step = 1e-4;
  for (int rep = 0; rep < 100; ++rep) {
    const std::size_t n = 1 + rng() % 4;
    Polynomial p = random_poly(rng, n, 4, 6);
    auto g = gradient(p);
    std::vector<double> a;
    for (std::size_t i = 0; i < n; ++i) a.push_back(random_rational(rng, 3, 2).get_d());
    for (std::size_t i = 0; i < n; ++i) {
      auto ap = a, am = a;
      ap[i] += step;
      am[i] -= step;
      const double fd = (p.evaluate(std::span<const double>(ap)) - p.evaluate(std::span<const double>(am))) / (2 * step);
      const double sym = g[i].evaluate(std::span<const double>(a));
      c(std::abs(fd - sym) <= 1e-6 * std::max(1.0, std::abs(sym)), "gradient");
    }
  }
  for (int rep = 0; rep < 10; ++rep) {
    const std::size_t n = 2 + rng() % 3, l = 1 + rng() % 3;
    std::vector<Polynomial> hs;
    for (std::size_t j = 0; j < l; ++j) hs.push_back(random_poly(rng, n, 3, 4));
    if (rep % 3 == 0) hs.push_back(hs[0] * Rational(3));
    PolyMatrix J = jacobian(hs, n);
    for (int pt = 0; pt < 20; ++pt) {
      std::vector<Rational> a;
      for (std::size_t i = 0; i < n; ++i) a.push_back(random_rational(rng, 2, 1));
      Eigen::MatrixXd Jd(J.rows, J.cols);
      for (std::size_t i = 0; i < J.rows; ++i)
        for (std::size_t k = 0; k < J.cols; ++k) Jd(i, k) = J(i, k).evaluate(a).get_d();
      std::size_t largest = 0;
      for (std::size_t t = 1; t <= std::min(n, hs.size()); ++t)
        for (const auto& m : minors(hs, t, n))
          if (m.evaluate(a) != 0) largest = t;
      c(largest == numeric_rank(Jd), "minor rank");
    }
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Checker&)>>> criteria{
      {"two-rays decomposition", rays},
      {"pop5 fixture end to end", pop},
      {"KKT failure at the cusp", cusp},
      {"representation certificate", rep},
      {"bound formulas", bounds},
      {"duality and monotonicity", sandwich},
      {"interpolation certificates", interpolation},
      {"hyperbolic suite", hyperbolic},
      {"gradient and Jacobian suite", gradients},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Checker c;
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c(false, std::string("exception: ") + e.what());
    }
    std::cout << (c.ok() ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first << ": " << c.summary();
    if (!c.note.empty()) std::cout << " (" << c.note << ")";
    std::cout << "\n";
    failed += !c.ok();
  }
  return failed ? 1 : 0;
}
