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

#include <Eigen/Dense>

#include "doctest.h"
#include "singular_sos/ideal.hpp"
#include "singular_sos/variety.hpp"
#include "support.hpp"

using namespace testing;

namespace {

const std::vector<std::string> X5 = names(5);
const std::vector<std::string> X2 = names(2);

/// Rank of a rational matrix by Gaussian elimination.
std::size_t exact_rank(std::vector<std::vector<Rational>> m) {
  std::size_t rank = 0;
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      Rational f = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

TEST_CASE("parse and format") {
  Polynomial p = P("x1^3 - x4^2", X5);
  CHECK(p.size() == 2);
  CHECK(p.degree() == 3);
  CHECK(P("0", X5).is_zero());
  CHECK(P("0", X5).terms().empty());

  Polynomial cube = P("(x2-x3)^3 - x5^2", X5);
  Polynomial hand(5);
  hand.add_term(Monomial(std::vector<unsigned>{0, 3, 0, 0, 0}), 1);
  hand.add_term(Monomial(std::vector<unsigned>{0, 2, 1, 0, 0}), -3);
  hand.add_term(Monomial(std::vector<unsigned>{0, 1, 2, 0, 0}), 3);
  hand.add_term(Monomial(std::vector<unsigned>{0, 0, 3, 0, 0}), -1);
  hand.add_term(Monomial(std::vector<unsigned>{0, 0, 0, 0, 2}), -1);
  CHECK(cube == hand);
  CHECK(cube.size() == 5);
  CHECK(poly_format(P("3/2*x1*x2 + x1^3 + 1", X2), X2) == "x1^3 + 3/2*x1*x2 + 1");
  CHECK(P("0.25*x1", X2) == P("x1/4", X2));
}

TEST_CASE("parse errors carry positions") {
  try {
    P("x1 + * x2", X2);
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 5);
  }
  CHECK_THROWS_AS(P("x1 + y", X2), ParseError);
  CHECK_THROWS_AS(P("x1 / x2", X2), ParseError);
  CHECK_THROWS_AS(P("(x1 + 1", X2), ParseError);
  CHECK_THROWS_AS(P("", X2), ParseError);
}

TEST_CASE("evaluation") {
  CHECK(P("x1^3 - x2^2", X2).evaluate(std::vector<Rational>{0, 0}) == 0);
  CHECK(P("7", X2).evaluate(std::vector<Rational>{3, Rational(-1, 5)}) == 7);
  CHECK(P("(x1*x2-1)^2 + x1^2", X2).evaluate(std::vector<Rational>{2, Rational(1, 2)}) == 4);
  CHECK_THROWS_AS(P("x1", X2).evaluate(std::vector<Rational>{1}), std::invalid_argument);
}

TEST_CASE("gradient and jacobian") {
  auto g = gradient(P("x1^3 - x2^2", X2));
  CHECK(g[0] == P("3*x1^2", X2));
  CHECK(g[1] == P("-2*x2", X2));
  for (const auto& gi : gradient(P("5", X2))) CHECK(gi.is_zero());
  auto gp = gradient(P("x1*x2", X2));
  CHECK(gp[0] == P("x2", X2));
  CHECK(gp[1] == P("x1", X2));

  PolyMatrix J = jacobian({P("x1^3 - x2^2", X2)});
  CHECK(J.rows == 2);
  CHECK(J.cols == 1);
  CHECK(J(0, 0) == P("3*x1^2", X2));
  CHECK(J(1, 0) == P("-2*x2", X2));

  PolyMatrix I5 = jacobian(Ps({"x1", "x2", "x3", "x4", "x5"}, X5));
  for (std::size_t r = 0; r < 5; ++r)
    for (std::size_t c = 0; c < 5; ++c) CHECK(I5(r, c) == P(r == c ? "1" : "0", X5));

  PolyMatrix M = jacobian(Ps({"x1*x2", "x1 + x2"}, X2));
  CHECK(M(0, 0) == P("x2", X2));
  CHECK(M(0, 1) == P("1", X2));
  CHECK(M(1, 0) == P("x1", X2));
  CHECK(M(1, 1) == P("1", X2));
}

TEST_CASE("minors") {
  auto m1 = minors({P("x1^3 - x2^2", X2)}, 1);
  REQUIRE(m1.size() == 2);
  CHECK(m1[0] == P("3*x1^2", X2));
  CHECK(m1[1] == P("-2*x2", X2));

  auto det = minors(Ps({"2*x1 + x2", "x1 - x2"}, X2), 2);
  REQUIRE(det.size() == 1);
  CHECK(det[0] == P("-3", X2));

  auto h = Ps({"x5", "x2 - x3", "x1^3 - x4^2"}, X5);
  auto m3 = minors(h, 3);
  CHECK(m3.size() == 10);
  std::vector<Polynomial> gens = h;
  gens.insert(gens.end(), m3.begin(), m3.end());
  Ideal target(5, Ps({"x1", "x5", "x4", "x2 - x3"}, X5));
  // Equal up to radical: the minors contribute x1^2 and x4.
  CHECK(ideal_contains(Ideal(5, gens), target));
  CHECK(ideal_membership(P("x1^2", X5), Ideal(5, gens)));
  CHECK_FALSE(ideal_membership(P("x1", X5), Ideal(5, gens)));
  CHECK(same_ideal(radicalize(Ideal(5, gens)), target));

  CHECK_THROWS_AS(minors(h, 4), std::out_of_range);
  CHECK_THROWS_AS(minors(h, 0), std::out_of_range);

  // Entry degree bound t * max deg.
  std::mt19937_64 rng(7);
  for (int rep = 0; rep < 10; ++rep) {
    std::vector<Polynomial> hs;
    int dmax = 0;
    for (int j = 0; j < 3; ++j) {
      hs.push_back(random_poly(rng, 3, 3));
      dmax = std::max(dmax, hs.back().degree());
    }
    for (std::size_t t = 1; t <= 3; ++t)
      for (const auto& m : minors(hs, t)) CHECK(m.degree() <= static_cast<int>(t) * dmax);
  }
}

TEST_CASE("gradients match central differences") {
  std::mt19937_64 rng(11);
  const double h = 1e-4;
  for (int rep = 0; rep < 100; ++rep) {
    std::size_t n = 1 + rng() % 4;
    Polynomial p = random_poly(rng, n, 4, 6);
    auto g = gradient(p);
    auto a = to_doubles(random_point(rng, n, 3, 2));
    for (std::size_t i = 0; i < n; ++i) {
      auto ap = a, am = a;
      ap[i] += h;
      am[i] -= h;
      double fd = (p.evaluate(std::span<const double>(ap)) - p.evaluate(std::span<const double>(am))) / (2 * h);
      double sym = g[i].evaluate(std::span<const double>(a));
      CHECK(std::abs(fd - sym) <= 1e-6 * std::max(1.0, std::abs(sym)));
    }
  }
}

TEST_CASE("evaluated minor rank equals Jacobian rank") {
  std::mt19937_64 rng(5);
  for (int rep = 0; rep < 20; ++rep) {
    std::size_t n = 2 + rng() % 2, l = 1 + rng() % 3;
    std::vector<Polynomial> hs;
    for (std::size_t j = 0; j < l; ++j) hs.push_back(random_poly(rng, n, 2, 3));
    if (rep % 4 == 0) hs.push_back(hs[0] * P("2", names(n)));  // force rank deficiency
    for (int pt = 0; pt < 5; ++pt) {
      auto a = random_point(rng, n, 2, 1);
      PolyMatrix J = jacobian(hs, n);
      std::vector<std::vector<Rational>> Ja(J.rows, std::vector<Rational>(J.cols));
      for (std::size_t r = 0; r < J.rows; ++r)
        for (std::size_t c = 0; c < J.cols; ++c) Ja[r][c] = J(r, c).evaluate(a);
      std::size_t largest = 0;
      for (std::size_t t = 1; t <= std::min(n, hs.size()); ++t)
        for (const auto& m : minors(hs, t, n))
          if (m.evaluate(a) != 0) largest = t;
      CHECK(largest == exact_rank(Ja));
    }
  }
}

TEST_CASE("ring axioms and degree") {
  std::mt19937_64 rng(3);
  for (int rep = 0; rep < 50; ++rep) {
    std::size_t n = 1 + rng() % 3;
    Polynomial p = random_poly(rng, n, 3), q = random_poly(rng, n, 3), r = random_poly(rng, n, 3);
    CHECK((p + q) * r == p * r + q * r);
    CHECK(p * q == q * p);
    CHECK(p - p == Polynomial(n));
    if (!p.is_zero() && !q.is_zero()) CHECK((p * q).degree() == p.degree() + q.degree());
    for (const auto& [m, c] : p.terms()) CHECK(c != 0);
  }
}

TEST_CASE("format then parse is the identity") {
  std::mt19937_64 rng(9);
  for (int rep = 0; rep < 100; ++rep) {
    std::size_t n = 1 + rng() % 4;
    Polynomial p = random_poly(rng, n, 4, 6);
    p *= random_rational(rng, 7, 5) + Rational(1, 1000);
    CHECK(poly_parse(poly_format(p, names(n)), names(n)) == p);
  }
}

TEST_CASE("substitution and extension") {
  Polynomial p = P("x1^2 - x2", X2);
  Polynomial s = p.substitute(Ps({"x1 + 1", "x1*x2"}, X2));
  CHECK(s == P("x1^2 + 2*x1 + 1 - x1*x2", X2));
  Polynomial e = p.extended(3);
  CHECK(e.nvars() == 3);
  CHECK(e == P("x1^2 - x2", names(3)));
  CHECK_THROWS(p + e);
}
