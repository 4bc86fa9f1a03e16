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

#include "singular_sos/hyperbolic.hpp"

#include <random>
#include <stdexcept>

namespace singular_sos {

void HyperbolicInstance::validate() const {
  if (e.size() != f.nvars()) throw std::invalid_argument("direction e has the wrong length");
  if (f.evaluate(e) == 0) throw std::invalid_argument("f(e) = 0: e is not a hyperbolicity direction");
}

void HyperbolicProgram::validate() const {
  instance.validate();
  const std::size_t n = instance.f.nvars();
  if (c.size() != n) throw std::invalid_argument("cost vector has the wrong length");
  if (A.size() != b.size()) throw std::invalid_argument("A and b have different row counts");
  for (const auto& row : A)
    if (row.size() != n) throw std::invalid_argument("row of A has the wrong length");
}

namespace {

/// f(t e - x) in the ring (x_1..x_n, t).
Polynomial shifted(const Polynomial& f, const std::vector<Rational>& e) {
  const std::size_t n = f.nvars(), N = n + 1;
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < n; ++i)
    images.push_back(Polynomial::variable(N, n) * e[i] - Polynomial::variable(N, i));
  return f.substitute(images);
}

}  // namespace

UPoly restrict_univariate(const Polynomial& f, const std::vector<Rational>& e, const std::vector<Rational>& a) {
  const std::size_t n = f.nvars();
  if (e.size() != n || a.size() != n) throw std::invalid_argument("restrict_univariate: vector length mismatch");
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < n; ++i)
    images.push_back(Polynomial::variable(1, 0) * e[i] - Polynomial::constant(1, a[i]));
  return UPoly::from_polynomial(f.substitute(images), 0);
}

std::vector<std::vector<Rational>> sample_points(std::size_t n, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::vector<Rational>> out;
  for (std::size_t s = 0; s < count; ++s) {
    std::vector<Rational> a;
    for (std::size_t i = 0; i < n; ++i) {
      long num = static_cast<long>(rng() % 21) - 10;
      long den = static_cast<long>(rng() % 6) + 1;
      Rational q(num, den);
      q.canonicalize();
      a.push_back(q);
    }
    out.push_back(std::move(a));
  }
  return out;
}

HyperbolicityCheck is_hyperbolic(const HyperbolicInstance& inst, std::size_t sample_count, std::uint64_t seed) {
  inst.validate();
  HyperbolicityCheck r;
  for (const auto& a : sample_points(inst.f.nvars(), sample_count, seed)) {
    ++r.samples;
    UPoly phi = restrict_univariate(inst.f, inst.e, a);
    if (phi.is_zero()) continue;
    if (!sturm_roots_status(phi).all_real) {
      r.witness = a;
      return r;
    }
  }
  r.certified_on_samples = true;
  return r;
}

const char* to_string(Membership m) {
  switch (m) {
    case Membership::member:
      return "member";
    case Membership::non_member:
      return "non-member";
    case Membership::degenerate:
      return "degenerate";
  }
  return "?";
}

Membership cone_membership(const HyperbolicInstance& inst, const std::vector<Rational>& a) {
  inst.validate();
  UPoly phi = restrict_univariate(inst.f, inst.e, a);
  if (phi.is_zero()) return Membership::degenerate;
  return sturm_roots_status(phi).distinct_negative == 0 ? Membership::member : Membership::non_member;
}

std::vector<Polynomial> vieta_conditions(const HyperbolicInstance& inst) {
  inst.validate();
  const std::size_t n = inst.f.nvars();
  Polynomial F = shifted(inst.f, inst.e);
  const int d = F.degree_in(n);
  std::vector<Polynomial> coef(static_cast<std::size_t>(std::max(d, 0)) + 1, Polynomial(n));
  for (const auto& [m, c] : F.terms()) {
    std::vector<unsigned> ex(m.exponents().begin(), m.exponents().begin() + static_cast<std::ptrdiff_t>(n));
    coef[m[n]].add_term(Monomial(ex), c);
  }
  const Polynomial& lead = coef[static_cast<std::size_t>(d)];
  if (!lead.is_constant() || lead.is_zero())
    throw std::invalid_argument("vieta_conditions: leading coefficient of f(te - x) depends on x");
  const bool flip = lead.constant_term() < 0;
  std::vector<Polynomial> out;
  for (int j = 0; j < d; ++j) {
    Polynomial g = coef[static_cast<std::size_t>(j)];
    if (((d - j) % 2 == 1) != flip) g = -g;
    out.push_back(std::move(g));
  }
  return out;
}

bool vieta_holds(const HyperbolicInstance& inst, const std::vector<Rational>& a) {
  for (const auto& g : vieta_conditions(inst))
    if (g.evaluate(a) < 0) return false;
  return true;
}

PopData hyperbolic_to_pop(const HyperbolicProgram& hp, std::size_t sample_count, std::uint64_t seed) {
  hp.validate();
  if (!hp.instance.trusted) {
    auto check = is_hyperbolic(hp.instance, sample_count, seed);
    if (check.witness) {
      std::string w;
      for (const auto& q : *check.witness) w += (w.empty() ? "" : ", ") + to_string(q);
      throw std::invalid_argument("f is not hyperbolic in direction e: f(te - a) has non-real roots at a = (" + w + ")");
    }
  }
  const std::size_t n = hp.instance.f.nvars();
  std::vector<Polynomial> conds;
  for (auto& g : vieta_conditions(hp.instance))
    if (!(g.is_constant() && g.constant_term() >= 0)) conds.push_back(std::move(g));
  PopData out;
  out.nx = n;
  out.slacks = conds.size();
  const std::size_t N = n + conds.size();
  out.variables = default_names(n);
  for (std::size_t j = 0; j < conds.size(); ++j) out.variables.push_back("z" + std::to_string(j + 1));
  out.h0 = Polynomial(N);
  for (std::size_t i = 0; i < n; ++i)
    if (hp.c[i] != 0) out.h0.add_term(Monomial::unit(N, i), hp.c[i]);
  for (std::size_t j = 0; j < conds.size(); ++j) {
    Polynomial z = Polynomial::variable(N, n + j);
    out.h.push_back(conds[j].extended(N) - z * z);
  }
  for (std::size_t r = 0; r < hp.A.size(); ++r) {
    Polynomial row = Polynomial::constant(N, -hp.b[r]);
    for (std::size_t i = 0; i < n; ++i)
      if (hp.A[r][i] != 0) row.add_term(Monomial::unit(N, i), hp.A[r][i]);
    out.h.push_back(std::move(row));
  }
  return out;
}

}  // namespace singular_sos
