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

#include "doctest.h"
#include "singular_sos/relaxation.hpp"
#include "support.hpp"

using namespace testing;

namespace {

const std::vector<std::string> X5 = names(5);

double rho(const Polynomial& h0, const std::vector<Polynomial>& h, unsigned k, SDPSolution* out = nullptr) {
  SDPSolution s = solve_sdp(assemble_dual(h0, h, k).sdp);
  REQUIRE(s.status == SDPStatus::optimal);
  if (out) *out = s;
  return -s.primal_value;
}

double tau(const Polynomial& h0, const std::vector<Polynomial>& h, unsigned k) {
  SDPSolution s = solve_sdp(assemble_primal(h0, h, k).to_sdp());
  REQUIRE(s.status == SDPStatus::optimal);
  return s.primal_value;
}

long binom(long n, long k) {
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("monomial bases") {
  auto b12 = monomial_basis(1, 2);
  REQUIRE(b12.size() == 3);
  CHECK(b12[0] == Monomial(std::vector<unsigned>{0}));
  CHECK(b12[1] == Monomial(std::vector<unsigned>{1}));
  CHECK(b12[2] == Monomial(std::vector<unsigned>{2}));
  auto b21 = monomial_basis(2, 1);
  REQUIRE(b21.size() == 3);
  CHECK(b21[1] == Monomial(std::vector<unsigned>{1, 0}));
  CHECK(b21[2] == Monomial(std::vector<unsigned>{0, 1}));
  CHECK(monomial_basis(5, 2).size() == 21);
  for (std::size_t n = 1; n <= 4; ++n)
    for (unsigned d = 0; d <= 4; ++d) {
      auto b = monomial_basis(n, d);
      CHECK(static_cast<long>(b.size()) == binom(static_cast<long>(n + d), d));
      for (std::size_t i = 1; i < b.size(); ++i) {
        CHECK(b[i - 1].degree() <= b[i].degree());
        if (b[i - 1].degree() == b[i].degree()) CHECK(graded_lex_greater(b[i - 1], b[i]));
      }
    }
  MomentIndex idx(2, 4);
  CHECK(idx.size() == 15);
  for (std::size_t i = 0; i < idx.size(); ++i) CHECK(idx.index(idx.monomial(i)) == i);
  CHECK_THROWS_AS(idx.index(Monomial(std::vector<unsigned>{5, 0})), std::out_of_range);
}

TEST_CASE("primal relaxation") {
  std::vector<std::string> v{"x"};
  RelaxationProblem R = assemble_primal(P("x^2", v), {}, 1);
  CHECK(R.basis.size() == 2);
  CHECK(R.moments.size() == 3);
  CHECK(std::abs(tau(P("x^2", v), {}, 1)) <= 1e-7);

  auto h = Ps({"x1", "x2", "x3", "x4", "x5"}, X5);
  RelaxationProblem Rp = assemble_primal(P("x1 + x2", X5), h, 1);
  for (const auto& row : Rp.localizing)
    for (const auto& [i, c] : row) CHECK(Rp.moments.monomial(i).degree() <= 2);
  CHECK(std::abs(tau(P("x1 + x2", X5), h, 1)) <= 1e-7);
  CHECK(std::abs(tau(P("0", v), Ps({"x^2 - 1"}, v), 1)) <= 1e-7);

  CHECK_THROWS_AS(assemble_primal(P("x^4", v), {}, 1), OrderTooSmallError);
  CHECK_THROWS_AS(assemble_dual(P("x", v), Ps({"x^3"}, v), 1), OrderTooSmallError);
  CHECK(minimal_order(P("x", v), Ps({"x^3"}, v)) == 2);
}

TEST_CASE("dual relaxation") {
  std::vector<std::string> v1{"x1"};
  CHECK(std::abs(rho(P("x1", v1), Ps({"x1"}, v1), 1)) <= 1e-7);

  std::vector<std::string> v{"x"};
  SDPSolution s;
  DualRelaxation D = assemble_dual(P("x^2", v), {}, 1);
  CHECK(std::abs(rho(P("x^2", v), {}, 1, &s)) <= 1e-8);
  Certificate c = extract_certificate(s, D);
  REQUIRE(c.gram.size() == 2);
  CHECK(std::abs(c.gram[0][0].get_d()) <= 1e-6);
  CHECK(std::abs(c.gram[1][1].get_d() - 1) <= 1e-6);

  auto h = Ps({"x1", "x5", "x4", "x2 - x3"}, X5);
  Polynomial h0 = P("x1 + x2 - x3", X5);
  DualRelaxation Dr = assemble_dual(h0, h, 1);
  SDPSolution sr;
  CHECK(std::abs(rho(h0, h, 1, &sr)) <= 1e-7);
  Certificate cr = rationalize_certificate(extract_certificate(sr, Dr));
  VerifyResult vr = verify_certificate(h0, cr, Ideal(5, h));
  CHECK(vr.verdict == Verdict::exact);
}

TEST_CASE("extracted Gram forms") {
  std::vector<std::string> v{"x"};
  auto basis = monomial_basis(1, 1);
  CHECK(extract_gram(Eigen::MatrixXd::Identity(2, 2), basis) == P("1 + x^2", v));
  Eigen::MatrixXd G(2, 2);
  G << 1, -1, -1, 1;
  CHECK(extract_gram(G, basis) == P("(1 - x)^2", v));
}

TEST_CASE("certificate verification") {
  auto h = Ps({"x1", "x5", "x4", "x2 - x3"}, X5);
  Polynomial h0 = P("x1 + x2 - x3", X5);
  Certificate rep;
  rep.nvars = 5;
  rep.xi = 0;
  rep.basis = {Monomial(5)};
  rep.gram = {{Rational(0)}};
  rep.multipliers = Ps({"1", "0", "0", "1"}, X5);
  CHECK(verify_certificate(h0, rep, Ideal(5, h)).verdict == Verdict::exact);

  Certificate broken = rep;
  broken.gram[0][0] += Rational(1, 1000);
  VerifyResult vb = verify_certificate(h0, broken, Ideal(5, h));
  CHECK(vb.verdict == Verdict::failed);
  CHECK_FALSE(vb.residual.is_zero());

  std::vector<std::string> v{"x"};
  DualRelaxation D = assemble_dual(P("x^2", v), {}, 1);
  SDPSolution s = solve_sdp(D.sdp);
  Certificate num = extract_certificate(s, D);
  CHECK(num.numeric);
  VerifyResult vn = verify_certificate(P("x^2", v), num, Ideal(1, {}), 1e-6);
  CHECK(vn.verdict == Verdict::numeric_within_tol);

  Certificate wrong = rep;
  wrong.nvars = 4;
  CHECK_THROWS(verify_certificate(h0, wrong, Ideal(5, h)));

  CHECK(is_psd_exact({{Rational(2), Rational(1)}, {Rational(1), Rational(1)}}));
  CHECK_FALSE(is_psd_exact({{Rational(1), Rational(2)}, {Rational(2), Rational(1)}}));
  CHECK(is_psd_exact({{Rational(0), Rational(0)}, {Rational(0), Rational(3)}}));
  CHECK_FALSE(is_psd_exact({{Rational(0), Rational(1)}, {Rational(1), Rational(3)}}));
}

TEST_CASE("interpolation certificates") {
  std::vector<std::string> v{"y"};
  Polynomial y = P("y", v);
  CHECK(finite_value_certificate(y, {Rational(0)}).is_zero());
  CHECK(finite_value_certificate(y, {Rational(7, 3)}) == P("7/3", v));
  Polynomial s = finite_value_certificate(y, {Rational(1), Rational(4)});
  CHECK(s == P("((y - 4)/(-3))^2 + 4*((y - 1)/3)^2", v));
  CHECK(s.evaluate(std::vector<Rational>{1}) == 1);
  CHECK(s.evaluate(std::vector<Rational>{4}) == 4);
  CHECK_THROWS(finite_value_certificate(y, {Rational(1), Rational(1)}));
  CHECK_THROWS(finite_value_certificate(y, {Rational(-1)}));

  // Composition with a multivariate h0: at points with h0 = t_i the interpolants are
  // Kronecker deltas and sigma equals t_i.
  std::vector<std::string> x2 = names(2);
  Polynomial h0 = P("x1^2 + x2", x2);
  std::vector<Rational> t{Rational(0), Rational(1, 2), Rational(3)};
  auto p = lagrange_interpolants(h0, t);
  Polynomial sigma = finite_value_certificate(h0, t);
  for (std::size_t i = 0; i < t.size(); ++i) {
    std::vector<Rational> pt{Rational(2), t[i] - 4};
    REQUIRE(h0.evaluate(pt) == t[i]);
    for (std::size_t j = 0; j < t.size(); ++j) CHECK(p[j].evaluate(pt) == (i == j ? 1 : 0));
    CHECK(sigma.evaluate(pt) == t[i]);
  }
  CHECK(sigma.degree() <= 2 * h0.degree() * 2);
}

TEST_CASE("weak duality and monotonicity on small fixtures") {
  std::vector<std::string> xy{"x", "y"};
  struct Fx {
    Polynomial h0;
    std::vector<Polynomial> h;
    double hstar;
  };
  std::vector<Fx> fixtures{
      {P("x", xy), Ps({"x^2 + y^2 - 1"}, xy), -1.0},
      {P("(x^2 - 1)^2 + y^2", xy), {}, 0.0},
      {P("x*y", xy), Ps({"x^2 + y^2 - 2"}, xy), -1.0},
  };
  for (const auto& f : fixtures) {
    double prev_r = -1e300, prev_t = -1e300;
    for (unsigned k = minimal_order(f.h0, f.h); k <= minimal_order(f.h0, f.h) + 1; ++k) {
      double r = rho(f.h0, f.h, k), t = tau(f.h0, f.h, k);
      CHECK(r <= t + 1e-6);
      CHECK(t <= f.hstar + 1e-6);
      CHECK(r >= prev_r - 1e-6);
      CHECK(t >= prev_t - 1e-6);
      CHECK(std::abs(r - t) <= 1e-5);
      prev_r = r;
      prev_t = t;
    }
  }
}
