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
#include "singular_sos/factor.hpp"
#include "singular_sos/ideal.hpp"
#include "support.hpp"

using namespace testing;

namespace {

const std::vector<std::string> X5 = names(5);
const std::vector<std::string> X3 = names(3);

// Textbook Buchberger without criteria, then interreduction. Slow but independent.
struct Naive {
  MonomialOrder order;

  Monomial lm(const Polynomial& p) const {
    Monomial best;
    bool first = true;
    for (const auto& [m, c] : p.terms())
      if (first || order.greater(m, best)) {
        best = m;
        first = false;
      }
    return best;
  }

  Polynomial monic(const Polynomial& p) const { return p * (Rational(1) / p.coeff(lm(p))); }

  Polynomial reduce(Polynomial p, const std::vector<Polynomial>& G) const {
    Polynomial r(p.nvars());
    while (!p.is_zero()) {
      Monomial m = lm(p);
      Rational c = p.coeff(m);
      bool divided = false;
      for (const auto& g : G) {
        Monomial lg = lm(g);
        if (lg.divides(m)) {
          p -= Polynomial::term(m / lg, c / g.coeff(lg)) * g;
          divided = true;
          break;
        }
      }
      if (!divided) {
        r.add_term(m, c);
        p.add_term(m, -c);
      }
    }
    return r;
  }

  std::vector<Polynomial> basis(std::vector<Polynomial> G) const {
    G.erase(std::remove_if(G.begin(), G.end(), [](const Polynomial& g) { return g.is_zero(); }), G.end());
    for (std::size_t i = 0; i < G.size(); ++i)
      for (std::size_t j = i + 1; j < G.size(); ++j) {
        Monomial a = lm(G[i]), b = lm(G[j]);
        std::vector<unsigned> l(a.nvars());
        for (std::size_t k = 0; k < l.size(); ++k) l[k] = std::max(a[k], b[k]);
        Monomial L(l);
        Polynomial s = Polynomial::term(L / a, Rational(1) / G[i].coeff(a)) * G[i] -
                       Polynomial::term(L / b, Rational(1) / G[j].coeff(b)) * G[j];
        Polynomial r = reduce(s, G);
        if (!r.is_zero()) G.push_back(r);
      }
    // Minimal then reduced.
    std::vector<Polynomial> M;
    for (std::size_t i = 0; i < G.size(); ++i) {
      bool redundant = false;
      for (std::size_t j = 0; j < G.size() && !redundant; ++j) {
        if (i == j) continue;
        if (lm(G[j]).divides(lm(G[i])) && (lm(G[j]) != lm(G[i]) || j < i)) redundant = true;
      }
      if (!redundant) M.push_back(monic(G[i]));
    }
    std::vector<Polynomial> R;
    for (std::size_t i = 0; i < M.size(); ++i) {
      std::vector<Polynomial> others;
      for (std::size_t j = 0; j < M.size(); ++j)
        if (j != i) others.push_back(M[j]);
      R.push_back(monic(reduce(M[i], others)));
    }
    return R;
  }
};

bool same_set(std::vector<Polynomial> a, std::vector<Polynomial> b) {
  if (a.size() != b.size()) return false;
  for (const auto& p : a)
    if (std::find(b.begin(), b.end(), p) == b.end()) return false;
  return true;
}

const MonomialOrder kOrders[] = {MonomialOrder(OrderKind::grevlex), MonomialOrder(OrderKind::grlex),
                                 MonomialOrder(OrderKind::lex)};

}  // namespace

TEST_CASE("groebner basis examples") {
  CHECK(same_set(groebner_basis(Ideal(5, Ps({"x1", "x2"}, X5))), Ps({"x1", "x2"}, X5)));

  std::vector<std::string> v{"x1", "x2", "l"};
  Ideal kkt(3, Ps({"x1^3 - x2^2", "1 - 3*l*x1^2", "2*l*x2"}, v));
  CHECK(groebner_basis(kkt) == Ps({"1"}, v));
  CHECK(is_trivial(kkt));
  Naive naive{MonomialOrder(OrderKind::grevlex)};
  CHECK(naive.basis(kkt.generators()) == Ps({"1"}, v));

  Ideal cubic(3, Ps({"x1*x3 - x2^2", "x2 - x1^2", "x3 - x1*x2"}, X3));
  CHECK(ideal_membership(P("x2 - x1^2", X3), cubic));
  CHECK(ideal_membership(P("x3 - x1^3", X3), cubic));
  CHECK_FALSE(ideal_membership(P("x1", X3), cubic));
  CHECK(ideal_dimension(cubic) == 1);
}

TEST_CASE("groebner basis agrees with a naive Buchberger run") {
  std::mt19937_64 rng(21);
  int compared = 0;
  for (int rep = 0; rep < 30; ++rep) {
    std::size_t n = 2 + rng() % 2;
    std::vector<Polynomial> gens;
    for (int j = 0; j < 2 + static_cast<int>(rng() % 2); ++j) gens.push_back(random_poly(rng, n, 2, 3));
    for (const auto& ord : kOrders) {
      Naive naive{ord};
      auto expected = naive.basis(gens);
      auto got = groebner_basis(Ideal(n, gens, ord));
      CHECK(same_set(got, expected));
      CHECK(satisfies_buchberger_criterion(got, ord));
      ++compared;
    }
  }
  CHECK(compared == 90);
}

TEST_CASE("normal form and membership") {
  Ideal rep(5, Ps({"x1", "x5", "x4", "x2 - x3"}, X5));
  CHECK(normal_form(P("x1 + x2 - x3", X5), rep).is_zero());
  CHECK(ideal_membership(P("x1 + x2 - x3", X5), rep));
  CHECK(normal_form(P("x1^3 + 7*x2", X5), Ideal(5, Ps({"1"}, X5))).is_zero());
  CHECK(normal_form(P("x1^2", X5), Ideal(5, Ps({"x2"}, X5))) == P("x1^2", X5));
  CHECK_FALSE(ideal_membership(P("1", X5), Ideal(5, Ps({"x1"}, X5))));
  CHECK(ideal_membership(P("x1*x3 - x2^2", X3), Ideal(3, Ps({"x2 - x1^2", "x3 - x1*x2"}, X3))));

  std::mt19937_64 rng(4);
  Ideal cubic(3, Ps({"x2 - x1^2", "x3 - x1^3"}, X3));
  for (int rep_i = 0; rep_i < 30; ++rep_i) {
    Polynomial p = random_poly(rng, 3, 4, 6);
    Polynomial nf = normal_form(p, cubic);
    CHECK(normal_form(nf, cubic) == nf);
    // p - nf lies in the ideal, so it vanishes on points (t, t^2, t^3).
    Polynomial member = p - nf;
    CHECK(ideal_membership(member, cubic));
    for (int k = 0; k < 3; ++k) {
      Rational t = random_rational(rng);
      CHECK(member.evaluate(std::vector<Rational>{t, t * t, t * t * t}) == 0);
    }
  }
}

TEST_CASE("triviality and dimension") {
  CHECK_FALSE(is_trivial(Ideal(5, Ps({"x1", "x2", "x3", "x4", "x5"}, X5))));
  CHECK_FALSE(is_trivial(Ideal(5, {})));
  CHECK(ideal_dimension(Ideal(5, Ps({"x1", "x2", "x3", "x4", "x5"}, X5))) == 0);
  CHECK(ideal_dimension(Ideal(5, Ps({"x5", "x2 - x3", "x1^3 - x4^2"}, X5))) == 2);
  CHECK(ideal_dimension(Ideal(5, Ps({"x1", "x5", "x4", "x2 - x3"}, X5))) == 1);
  CHECK(ideal_dimension(Ideal(5, {})) == 5);
  CHECK_FALSE(ideal_dimension(Ideal(5, Ps({"x1", "x1 - 1"}, X5))).has_value());

  std::vector<Ideal> fixtures{
      Ideal(5, Ps({"x1^5 - x3^2", "x2^5 - x4^2", "-x1*x2 - x5^2"}, X5)),
      Ideal(5, Ps({"x1^3 - x4^2", "(x2 - x3)^3 - x5^2", "x1*(x2 - x3)"}, X5)),
      Ideal(3, Ps({"x1*x3 - x2^2", "x2 - x1^2", "x3 - x1*x2"}, X3)),
      Ideal(3, Ps({"x1^3 - x2^2", "1 - 3*x3*x1^2", "2*x3*x2"}, X3)),
      Ideal(3, Ps({"x1^2 + x2^2 + x3^2 - 1", "x1*x2"}, X3)),
  };
  for (const auto& I : fixtures) {
    auto d0 = ideal_dimension(I.with_order(kOrders[0]));
    for (const auto& ord : kOrders) {
      CHECK(ideal_dimension(I.with_order(ord)) == d0);
      CHECK(is_trivial(I.with_order(ord)) == is_trivial(I));
    }
  }
}

TEST_CASE("containment") {
  Ideal a(2, Ps({"x1"}, names(2))), ab(2, Ps({"x1", "x2"}, names(2))), prod(2, Ps({"x1*x2"}, names(2)));
  CHECK(ideal_contains(a, ab));
  CHECK_FALSE(ideal_contains(ab, a));
  CHECK(ideal_contains(prod, a));
  CHECK_FALSE(ideal_contains(a, prod));
  CHECK(same_ideal(Ideal(2, Ps({"x1 + x2", "x1 - x2"}, names(2))), ab));
}

TEST_CASE("resource limits are explicit") {
  GroebnerOptions tiny;
  tiny.max_pairs = 1;
  Ideal I(3, Ps({"x1*x2 - x3", "x2*x3 - x1", "x1*x3 - x2^2"}, X3), MonomialOrder(), tiny);
  CHECK_THROWS_AS(groebner_basis(I), ResourceLimitError);
}

TEST_CASE("bounded factorization") {
  auto f = factor_bounded(P("x1*(x2 - x3)", X5));
  REQUIRE(f.factors.size() == 2);
  CHECK(f.complete());
  for (const auto& fac : f.factors) CHECK(fac.multiplicity == 1);
  CHECK(f.expand(5) == P("x1*(x2 - x3)", X5));

  auto sq = factor_bounded(P("(x1 + x2)^2", X5));
  REQUIRE(sq.factors.size() == 1);
  CHECK(sq.factors[0].poly == P("x1 + x2", X5));
  CHECK(sq.factors[0].multiplicity == 2);

  auto irr = factor_bounded(P("x1^3 - x4^2", X5));
  REQUIRE(irr.factors.size() == 1);
  CHECK(irr.factors[0].poly == P("x1^3 - x4^2", X5));
  CHECK_FALSE(irr.factors[0].maybe_reducible);
  // A proper factor would be x4 - q(x1) with q^2 = x1^3, impossible by parity of degree.
  CHECK(irr.expand(5) == P("x1^3 - x4^2", X5));

  std::mt19937_64 rng(8);
  for (int rep = 0; rep < 30; ++rep) {
    std::size_t n = 1 + rng() % 3;
    Polynomial a = random_poly(rng, n, 2, 3), b = random_poly(rng, n, 2, 3);
    if (a.is_zero() || b.is_zero()) continue;
    Polynomial p = a * b * b * P("-3/2", names(n));
    auto fp = factor_bounded(p);
    CHECK(fp.expand(n) == p);
    for (const auto& fac : fp.factors) CHECK(fac.poly.degree() >= 1);
  }
}

TEST_CASE("gcd and exact division") {
  Polynomial a = P("(x1 + x2)*(x1 - 2*x3)", X3), b = P("(x1 + x2)*(x2 + 1)", X3);
  Polynomial g = poly_gcd(a, b);
  CHECK(exact_divide(g, P("x1 + x2", X3)).has_value());
  CHECK(g.degree() == 1);
  CHECK_FALSE(exact_divide(P("x1^2 + 1", X3), P("x1 + 1", X3)).has_value());
  CHECK(*exact_divide(a, P("x1 - 2*x3", X3)) == P("x1 + x2", X3));
}
