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

#include "singular_sos/factor.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <random>

#include "singular_sos/ideal.hpp"
#include "singular_sos/univariate.hpp"

namespace singular_sos {

Rational make_primitive(Polynomial& p) {
  if (p.is_zero()) return Rational(1);
  std::vector<Rational> coeffs;
  for (const auto& [m, c] : p.terms()) coeffs.push_back(c);
  Integer l = lcm_of_denominators(coeffs);
  Integer g = 0;
  for (const auto& c : coeffs) {
    Rational s = c * l;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), s.get_num_mpz_t());
  }
  Rational scale = Rational(l) / Rational(g);
  if (leading_coefficient(p, MonomialOrder()) < 0) scale = -scale;
  p *= scale;
  return 1 / scale;
}

Polynomial Factorization::expand(std::size_t nvars) const {
  Polynomial out = Polynomial::constant(nvars, content);
  for (const auto& f : factors) out *= f.poly.pow(f.multiplicity);
  return out;
}

namespace {

Polynomial gcd_with_gradient(const Polynomial& p) {
  Polynomial g = p;
  for (std::size_t v : p.support()) {
    g = poly_gcd(g, p.derivative(v));
    if (g.is_constant()) break;
  }
  return g;
}

Polynomial divide_or_throw(const Polynomial& a, const Polynomial& b) {
  auto q = exact_divide(a, b);
  if (!q) throw std::logic_error("factorization: inexact division");
  return *q;
}

/// Coefficients of p as a polynomial in `var`.
std::map<unsigned, Polynomial> coefficients_in(const Polynomial& p, std::size_t var) {
  std::map<unsigned, Polynomial> out;
  for (const auto& [m, c] : p.terms()) {
    Monomial rest = m;
    unsigned e = rest[var];
    rest[var] = 0;
    auto it = out.try_emplace(e, Polynomial(p.nvars())).first;
    it->second.add_term(rest, c);
  }
  return out;
}

/// gcd of the coefficients of p in `var` (content with respect to var).
Polynomial content_in(const Polynomial& p, std::size_t var) {
  Polynomial g(p.nvars());
  for (const auto& [e, c] : coefficients_in(p, var)) {
    g = poly_gcd(g, c);
    if (g.is_constant()) break;
  }
  return g;
}

/// Square root in Q[x] when p is a perfect square.
std::optional<Polynomial> polynomial_sqrt(const Polynomial& p) {
  const std::size_t n = p.nvars();
  if (p.is_zero()) return p;
  Rational content;
  auto layers = squarefree_decomposition(p, &content);
  if (content < 0) return std::nullopt;
  Integer num = content.get_num(), den = content.get_den();
  Integer rn, rd;
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return std::nullopt;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  Polynomial root = Polynomial::constant(n, Rational(rn, rd));
  for (std::size_t i = 0; i < layers.size(); ++i) {
    unsigned mult = static_cast<unsigned>(i + 1);
    if (layers[i].is_constant()) continue;
    if (mult % 2) return std::nullopt;
    root *= layers[i].pow(mult / 2);
  }
  return root;
}

class Splitter {
 public:
  explicit Splitter(std::size_t nvars) : n_(nvars), rng_(0x5eed) {}

  /// Splits a primitive squarefree polynomial into factors; sets flags on failure.
  void split(const Polynomial& p, std::vector<std::pair<Polynomial, bool>>& out) {
    if (p.is_constant()) return;
    if (p.degree() == 1) {
      out.emplace_back(p, false);
      return;
    }
    auto vars = p.support();
    if (vars.size() == 1) {
      split_univariate(p, vars[0], out);
      return;
    }
    // Content with respect to a variable is a proper factor.
    for (std::size_t v : vars) {
      Polynomial c = content_in(p, v);
      if (!c.is_constant()) {
        recurse_pair(p, c, out);
        return;
      }
    }
    // Primitive in every variable from here on.
    for (std::size_t v : vars)
      if (p.degree_in(v) == 1) {
        out.emplace_back(p, false);
        return;
      }
    for (std::size_t v : vars) {
      if (p.degree_in(v) != 2) continue;
      auto co = coefficients_in(p, v);
      Polynomial a = co.count(2) ? co[2] : Polynomial(n_);
      Polynomial b = co.count(1) ? co[1] : Polynomial(n_);
      Polynomial c = co.count(0) ? co[0] : Polynomial(n_);
      Polynomial disc = b * b - Polynomial::constant(n_, 4) * a * c;
      auto s = polynomial_sqrt(disc);
      if (!s) {
        out.emplace_back(p, false);
        return;
      }
      Polynomial lin = Polynomial::constant(n_, 2) * a * Polynomial::variable(n_, v) + b - *s;
      Polynomial f = poly_gcd(p, lin);
      if (f.is_constant() || f.degree() == p.degree()) throw std::logic_error("quadratic split failed");
      recurse_pair(p, f, out);
      return;
    }
    if (image_irreducible(p, vars)) {
      out.emplace_back(p, false);
      return;
    }
    if (auto f = affine_root_factor(p, vars)) {
      recurse_pair(p, *f, out);
      return;
    }
    out.emplace_back(p, true);
  }

 private:
  void recurse_pair(const Polynomial& p, Polynomial f, std::vector<std::pair<Polynomial, bool>>& out) {
    make_primitive(f);
    Polynomial rest = divide_or_throw(p, f);
    make_primitive(rest);
    split(f, out);
    split(rest, out);
  }

  void split_univariate(const Polynomial& p, std::size_t var, std::vector<std::pair<Polynomial, bool>>& out) {
    auto uf = factor_univariate(UPoly::from_polynomial(p, var));
    for (const auto& [f, m] : uf.factors) {
      Polynomial q = f.to_polynomial(n_, var);
      make_primitive(q);
      out.emplace_back(q, !uf.complete && uf.factors.size() == 1);
    }
    if (!uf.complete && uf.factors.size() > 1) {
      // Which piece is undecided is not tracked; flag the largest.
      auto it = std::max_element(out.end() - static_cast<long>(uf.factors.size()), out.end(),
                                 [](const auto& x, const auto& y) { return x.first.degree() < y.first.degree(); });
      it->second = true;
    }
  }

  std::vector<Rational> random_point() {
    std::uniform_int_distribution<int> dist(-7, 7);
    std::vector<Rational> pt(n_);
    for (auto& v : pt) v = dist(rng_);
    return pt;
  }

  /// Image of p with every variable but `var` fixed to `pt`.
  UPoly image(const Polynomial& p, std::size_t var, const std::vector<Rational>& pt) const {
    std::vector<Polynomial> subs;
    for (std::size_t i = 0; i < n_; ++i)
      subs.push_back(i == var ? Polynomial::variable(n_, var) : Polynomial::constant(n_, pt[i]));
    return UPoly::from_polynomial(p.substitute(subs), var);
  }

  /// Primitive p whose degree-preserving univariate image is irreducible is irreducible.
  bool image_irreducible(const Polynomial& p, const std::vector<std::size_t>& vars) {
    for (int attempt = 0; attempt < 6; ++attempt) {
      for (std::size_t v : vars) {
        auto pt = random_point();
        UPoly u = image(p, v, pt);
        if (u.degree() != p.degree_in(v)) continue;
        auto irr = is_irreducible_univariate(u);
        if (irr && *irr) return true;
      }
    }
    return false;
  }

  /// Looks for a factor var - g(others) with g affine, by interpolating rational roots of
  /// univariate images at a base point and its unit shifts.
  std::optional<Polynomial> affine_root_factor(const Polynomial& p, const std::vector<std::size_t>& vars) {
    for (std::size_t v : vars) {
      auto co = coefficients_in(p, v);
      if (!co.rbegin()->second.is_constant()) continue;
      std::vector<std::size_t> others;
      for (std::size_t u : vars)
        if (u != v) others.push_back(u);
      auto base = random_point();
      std::vector<std::vector<Rational>> roots;
      roots.push_back(rational_roots(image(p, v, base)));
      for (std::size_t u : others) {
        auto pt = base;
        pt[u] += 1;
        roots.push_back(rational_roots(image(p, v, pt)));
      }
      std::size_t combos = 1;
      bool empty = false;
      for (const auto& r : roots) {
        if (r.empty()) empty = true;
        combos *= std::max<std::size_t>(r.size(), 1);
      }
      if (empty || combos > 4096) continue;
      std::vector<std::size_t> idx(roots.size(), 0);
      for (std::size_t k = 0; k < combos; ++k) {
        // g(x) = r0 + sum_u (r_u - r0) (x_u - base_u)
        const Rational& r0 = roots[0][idx[0]];
        Polynomial g = Polynomial::constant(n_, r0);
        for (std::size_t j = 0; j < others.size(); ++j) {
          Rational slope = roots[j + 1][idx[j + 1]] - r0;
          g += slope * (Polynomial::variable(n_, others[j]) - Polynomial::constant(n_, base[others[j]]));
        }
        Polynomial cand = Polynomial::variable(n_, v) - g;
        if (exact_divide(p, cand)) return cand;
        for (std::size_t j = 0; j < idx.size(); ++j) {
          if (++idx[j] < roots[j].size()) break;
          idx[j] = 0;
        }
      }
    }
    return std::nullopt;
  }

  std::size_t n_;
  std::mt19937 rng_;
};

}  // namespace

std::vector<Polynomial> squarefree_decomposition(const Polynomial& p, Rational* content) {
  if (p.is_zero()) throw std::invalid_argument("squarefree decomposition of zero");
  Polynomial a = p;
  Rational unit = make_primitive(a);
  if (content) *content = unit;
  std::vector<Polynomial> layers;
  if (a.is_constant()) return layers;
  Polynomial b = gcd_with_gradient(a);
  Polynomial c = divide_or_throw(a, b);
  while (!c.is_constant()) {
    Polynomial y = poly_gcd(c, b);
    Polynomial layer = divide_or_throw(c, y);
    make_primitive(layer);
    layers.push_back(layer);
    b = divide_or_throw(b, y);
    c = y;
  }
  // Fix the unit so that p = unit * prod layer_i^i exactly.
  if (content) {
    Polynomial prod = Polynomial::constant(p.nvars(), 1);
    for (std::size_t i = 0; i < layers.size(); ++i) prod *= layers[i].pow(static_cast<unsigned>(i + 1));
    *content = p.terms().begin()->second / prod.coeff(p.terms().begin()->first);
  }
  return layers;
}

Polynomial squarefree_part(const Polynomial& p) {
  if (p.is_zero() || p.is_constant()) return p;
  Polynomial a = p;
  make_primitive(a);
  return divide_or_throw(a, gcd_with_gradient(a));
}

Factorization factor_bounded(const Polynomial& p) {
  Factorization result;
  const std::size_t n = p.nvars();
  if (p.is_zero()) {
    result.content = 0;
    return result;
  }
  Polynomial q = p;
  make_primitive(q);

  // Monomial factor.
  Monomial mono = q.terms().begin()->first;
  for (const auto& [m, c] : q.terms()) mono = gcd(mono, m);
  if (!mono.is_one()) q = divide_or_throw(q, Polynomial::term(mono, 1));

  std::vector<Factor> factors;
  for (std::size_t v = 0; v < n; ++v)
    if (mono[v]) factors.push_back({Polynomial::variable(n, v), mono[v], false});

  Splitter splitter(n);
  auto layers = squarefree_decomposition(q);
  for (std::size_t i = 0; i < layers.size(); ++i) {
    std::vector<std::pair<Polynomial, bool>> pieces;
    splitter.split(layers[i], pieces);
    for (auto& [f, flag] : pieces) factors.push_back({std::move(f), static_cast<unsigned>(i + 1), flag});
  }
  std::sort(factors.begin(), factors.end(), [](const Factor& a, const Factor& b) {
    if (a.poly.degree() != b.poly.degree()) return a.poly.degree() < b.poly.degree();
    return poly_format(a.poly) < poly_format(b.poly);
  });
  result.factors = std::move(factors);
  result.content = 1;
  // Exact content from the expanded product.
  Polynomial prod = result.expand(n);
  const auto& [m0, c0] = *p.terms().begin();
  result.content = c0 / prod.coeff(m0);
  return result;
}

}  // namespace singular_sos
