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

#include "singular_sos/ideal.hpp"

#include <algorithm>
#include <numeric>

namespace singular_sos {

// ---------------------------------------------------------------- orders

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  const std::size_t n = a.nvars();
  auto lex = [&]() {
    for (std::size_t r = 0; r < n; ++r) {
      std::size_t v = var_at(r, n);
      if (a[v] != b[v]) return a[v] > b[v] ? 1 : -1;
    }
    return 0;
  };
  switch (kind_) {
    case OrderKind::lex:
      return lex();
    case OrderKind::grlex: {
      unsigned da = a.degree(), db = b.degree();
      if (da != db) return da > db ? 1 : -1;
      return lex();
    }
    case OrderKind::grevlex: {
      unsigned da = a.degree(), db = b.degree();
      if (da != db) return da > db ? 1 : -1;
      for (std::size_t r = n; r-- > 0;) {
        std::size_t v = var_at(r, n);
        if (a[v] != b[v]) return a[v] < b[v] ? 1 : -1;
      }
      return 0;
    }
  }
  return 0;
}

MonomialOrder MonomialOrder::eliminating(std::size_t nvars, std::size_t first) {
  std::vector<std::size_t> ranking{first};
  for (std::size_t i = 0; i < nvars; ++i)
    if (i != first) ranking.push_back(i);
  return MonomialOrder(OrderKind::lex, std::move(ranking));
}

// ---------------------------------------------------------------- sorted term vectors

namespace {

struct Term {
  Monomial m;
  Rational c;
};

/// Terms sorted ascending under the order; the leading term is at the back.
using TermVec = std::vector<Term>;

TermVec to_terms(const Polynomial& p, const MonomialOrder& ord) {
  TermVec v;
  v.reserve(p.size());
  for (const auto& [m, c] : p.terms()) v.push_back({m, c});
  std::sort(v.begin(), v.end(), [&](const Term& a, const Term& b) { return ord.compare(a.m, b.m) < 0; });
  return v;
}

Polynomial from_terms(const TermVec& v, std::size_t nvars) {
  Polynomial p(nvars);
  for (const auto& t : v) p.add_term(t.m, t.c);
  return p;
}

/// f - q * mono * g, merging two ascending vectors.
TermVec sub_mul(const TermVec& f, const Rational& q, const Monomial& mono, const TermVec& g,
                const MonomialOrder& ord) {
  TermVec out;
  out.reserve(f.size() + g.size());
  std::size_t i = 0, j = 0;
  while (i < f.size() || j < g.size()) {
    if (j == g.size()) {
      out.push_back(f[i++]);
      continue;
    }
    Monomial gm = g[j].m * mono;
    if (i == f.size()) {
      out.push_back({std::move(gm), -q * g[j].c});
      ++j;
      continue;
    }
    int cmp = ord.compare(f[i].m, gm);
    if (cmp < 0) {
      out.push_back(f[i++]);
    } else if (cmp > 0) {
      out.push_back({std::move(gm), -q * g[j].c});
      ++j;
    } else {
      Rational c = f[i].c - q * g[j].c;
      if (c != 0) out.push_back({f[i].m, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

void make_monic(TermVec& v) {
  if (v.empty()) return;
  Rational inv = 1 / v.back().c;
  for (auto& t : v) t.c *= inv;
}

struct Reducer {
  const TermVec* terms;
};

/// Full reduction of f by the reducer set.
TermVec reduce_full(TermVec f, const std::vector<const TermVec*>& reducers, const MonomialOrder& ord) {
  TermVec rem;
  while (!f.empty()) {
    const Term& top = f.back();
    const TermVec* hit = nullptr;
    for (const TermVec* g : reducers) {
      if (g->back().m.divides(top.m)) {
        hit = g;
        break;
      }
    }
    if (hit) {
      Rational q = top.c / hit->back().c;
      Monomial mono = top.m / hit->back().m;
      f = sub_mul(f, q, mono, *hit, ord);
    } else {
      rem.push_back(std::move(f.back()));
      f.pop_back();
    }
  }
  std::reverse(rem.begin(), rem.end());
  return rem;
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.nvars(); ++i)
    if (a[i] && b[i]) return false;
  return true;
}

struct Entry {
  TermVec p;
  unsigned sugar;
  bool active;
  const Monomial& lt() const { return p.back().m; }
};

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  unsigned sugar;
};

class Buchberger {
 public:
  Buchberger(std::size_t nvars, const MonomialOrder& ord, const GroebnerOptions& opt)
      : n_(nvars), ord_(ord), opt_(opt) {}

  std::vector<Polynomial> run(const std::vector<Polynomial>& gens) {
    for (const auto& g : gens) {
      if (g.nvars() != n_) throw std::invalid_argument("generator ring size mismatch");
      TermVec t = to_terms(g, ord_);
      t = reduce_full(std::move(t), active_reducers(), ord_);
      if (t.empty()) continue;
      make_monic(t);
      unsigned s = static_cast<unsigned>(std::max(g.degree(), 0));
      if (insert(std::move(t), s)) return {Polynomial::constant(n_, 1)};
    }
    std::size_t processed = 0;
    while (!pairs_.empty()) {
      if (++processed > opt_.max_pairs)
        throw ResourceLimitError("Groebner basis computation exceeded " + std::to_string(opt_.max_pairs) +
                                 " critical pairs");
      auto best = std::min_element(pairs_.begin(), pairs_.end(), [&](const Pair& a, const Pair& b) {
        if (a.sugar != b.sugar) return a.sugar < b.sugar;
        int c = ord_.compare(a.lcm, b.lcm);
        if (c != 0) return c < 0;
        if (a.j != b.j) return a.j < b.j;
        return a.i < b.i;
      });
      Pair pr = *best;
      pairs_.erase(best);
      TermVec s = spoly(pr.i, pr.j);
      s = reduce_full(std::move(s), active_reducers(), ord_);
      if (s.empty()) continue;
      make_monic(s);
      if (insert(std::move(s), pr.sugar)) return {Polynomial::constant(n_, 1)};
    }
    return finalize();
  }

 private:
  std::vector<const TermVec*> active_reducers() const {
    std::vector<const TermVec*> r;
    for (const auto& e : entries_)
      if (e.active) r.push_back(&e.p);
    return r;
  }

  TermVec spoly(std::size_t i, std::size_t j) const {
    const TermVec& f = entries_[i].p;
    const TermVec& g = entries_[j].p;
    Monomial l = lcm(f.back().m, g.back().m);
    Monomial mf = l / f.back().m;
    Monomial mg = l / g.back().m;
    TermVec a;
    a.reserve(f.size());
    for (const auto& t : f) a.push_back({t.m * mf, t.c});
    // both monic: a - mg * g
    return sub_mul(a, Rational(1), mg, g, ord_);
  }

  /// Gebauer-Moeller update. Returns true when the new element is a constant.
  bool insert(TermVec h, unsigned sugar) {
    if (h.back().m.is_one()) return true;
    std::size_t hi = entries_.size();
    entries_.push_back({std::move(h), sugar, true});
    const Monomial& lth = entries_[hi].lt();

    // Candidate pairs (h, g) for active g.
    std::vector<Pair> C;
    for (std::size_t g = 0; g < hi; ++g) {
      if (!entries_[g].active) continue;
      Monomial l = lcm(lth, entries_[g].lt());
      unsigned s = std::max(sugar + (l.degree() - lth.degree()),
                            entries_[g].sugar + (l.degree() - entries_[g].lt().degree()));
      C.push_back({g, hi, std::move(l), s});
    }
    // Chain criterion among the new pairs.
    std::vector<Pair> D;
    for (std::size_t a = 0; a < C.size(); ++a) {
      const Pair& p1 = C[a];
      bool keep = coprime(lth, entries_[p1.i].lt());
      if (!keep) {
        keep = true;
        for (std::size_t b = 0; b < C.size() && keep; ++b) {
          if (b == a) continue;
          if (C[b].lcm.divides(p1.lcm)) {
            // Ties broken by index so that exactly one of equal-lcm pairs survives.
            if (C[b].lcm == p1.lcm && b > a) continue;
            keep = false;
          }
        }
        // Also compare against already-accepted pairs in D.
        for (const auto& d : D)
          if (keep && d.lcm.divides(p1.lcm)) keep = false;
      }
      if (keep) D.push_back(p1);
    }
    // Product criterion.
    std::vector<Pair> E;
    for (auto& p : D)
      if (!coprime(lth, entries_[p.i].lt())) E.push_back(std::move(p));
    // Prune old pairs.
    std::vector<Pair> kept;
    for (auto& p : pairs_) {
      bool drop = lth.divides(p.lcm) && lcm(entries_[p.i].lt(), lth) != p.lcm &&
                  lcm(lth, entries_[p.j].lt()) != p.lcm;
      if (!drop) kept.push_back(std::move(p));
    }
    pairs_ = std::move(kept);
    for (auto& p : E) pairs_.push_back(std::move(p));
    // Retire elements whose leading monomial is divisible by LT(h).
    for (std::size_t g = 0; g < hi; ++g)
      if (entries_[g].active && lth.divides(entries_[g].lt())) entries_[g].active = false;
    return false;
  }

  std::vector<Polynomial> finalize() {
    std::vector<TermVec> minimal;
    for (const auto& e : entries_)
      if (e.active) minimal.push_back(e.p);
    // Minimal basis: drop elements whose LT is divisible by another LT.
    std::vector<TermVec> mb;
    for (std::size_t a = 0; a < minimal.size(); ++a) {
      bool redundant = false;
      for (std::size_t b = 0; b < minimal.size() && !redundant; ++b) {
        if (a == b) continue;
        if (minimal[b].back().m.divides(minimal[a].back().m)) {
          if (minimal[b].back().m != minimal[a].back().m || b < a) redundant = true;
        }
      }
      if (!redundant) mb.push_back(minimal[a]);
    }
    // Interreduce tails.
    for (std::size_t a = 0; a < mb.size(); ++a) {
      std::vector<const TermVec*> others;
      for (std::size_t b = 0; b < mb.size(); ++b)
        if (b != a) others.push_back(&mb[b]);
      Term lead = mb[a].back();
      TermVec tail(mb[a].begin(), mb[a].end() - 1);
      TermVec red = reduce_full(std::move(tail), others, ord_);
      red.push_back(std::move(lead));
      make_monic(red);
      mb[a] = std::move(red);
    }
    std::sort(mb.begin(), mb.end(),
              [&](const TermVec& x, const TermVec& y) { return ord_.compare(x.back().m, y.back().m) < 0; });
    std::vector<Polynomial> out;
    for (const auto& t : mb) out.push_back(from_terms(t, n_));
    return out;
  }

  std::size_t n_;
  MonomialOrder ord_;
  GroebnerOptions opt_;
  std::vector<Entry> entries_;
  std::vector<Pair> pairs_;
};

}  // namespace

// ---------------------------------------------------------------- Ideal

Ideal::Ideal(std::size_t nvars, std::vector<Polynomial> generators, MonomialOrder order, GroebnerOptions options)
    : nvars_(nvars),
      generators_(std::move(generators)),
      order_(std::move(order)),
      options_(options),
      cache_(std::make_shared<Cache>()) {
  for (const auto& g : generators_)
    if (g.nvars() != nvars_) throw std::invalid_argument("ideal generator lives in a different ring");
}

const std::vector<Polynomial>& Ideal::basis() const {
  std::call_once(cache_->once, [this] { cache_->basis = groebner_basis(generators_, nvars_, order_, options_); });
  return cache_->basis;
}

Ideal Ideal::extended_by(const std::vector<Polynomial>& extra) const {
  auto gens = generators_;
  gens.insert(gens.end(), extra.begin(), extra.end());
  return Ideal(nvars_, std::move(gens), order_, options_);
}

std::vector<Polynomial> groebner_basis(const Ideal& I) { return I.basis(); }

std::vector<Polynomial> groebner_basis(const std::vector<Polynomial>& gens, std::size_t nvars,
                                       const MonomialOrder& order, const GroebnerOptions& options) {
  return Buchberger(nvars, order, options).run(gens);
}

Monomial leading_monomial(const Polynomial& p, const MonomialOrder& order) {
  if (p.is_zero()) throw std::invalid_argument("leading monomial of zero");
  const Monomial* best = nullptr;
  for (const auto& [m, c] : p.terms())
    if (!best || order.compare(m, *best) > 0) best = &m;
  return *best;
}

Rational leading_coefficient(const Polynomial& p, const MonomialOrder& order) {
  return p.coeff(leading_monomial(p, order));
}

Polynomial reduce(const Polynomial& p, const std::vector<Polynomial>& divisors, const MonomialOrder& order) {
  std::vector<TermVec> ds;
  for (const auto& d : divisors)
    if (!d.is_zero()) ds.push_back(to_terms(d, order));
  std::vector<const TermVec*> ptrs;
  for (const auto& d : ds) ptrs.push_back(&d);
  return from_terms(reduce_full(to_terms(p, order), ptrs, order), p.nvars());
}

Polynomial normal_form(const Polynomial& p, const Ideal& I) {
  if (p.nvars() != I.nvars()) throw std::invalid_argument("normal_form: ring size mismatch");
  return reduce(p, I.basis(), I.order());
}

bool ideal_membership(const Polynomial& p, const Ideal& I) { return normal_form(p, I).is_zero(); }

bool is_trivial(const Ideal& I) {
  const auto& b = I.basis();
  return b.size() == 1 && b.front().is_constant() && !b.front().is_zero();
}

std::optional<int> ideal_dimension(const Ideal& I) {
  if (is_trivial(I)) return std::nullopt;
  const std::size_t n = I.nvars();
  if (n > 30) throw std::invalid_argument("ideal_dimension supports at most 30 variables");
  std::vector<std::uint32_t> supports;
  for (const auto& g : I.basis()) {
    Monomial lt = leading_monomial(g, I.order());
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (lt[i]) mask |= (1u << i);
    supports.push_back(mask);
  }
  int best = 0;
  const std::uint32_t full = n == 32 ? ~0u : ((1u << n) - 1);
  // Largest variable set S with no leading monomial supported inside S.
  for (std::uint32_t S = 0;; ++S) {
    int sz = __builtin_popcount(S);
    if (sz > best) {
      bool independent = true;
      for (auto m : supports)
        if ((m & ~S) == 0) {
          independent = false;
          break;
        }
      if (independent) best = sz;
    }
    if (S == full) break;
  }
  return best;
}

bool ideal_contains(const Ideal& I, const Ideal& J) {
  for (const auto& g : I.generators())
    if (!ideal_membership(g, J)) return false;
  return true;
}

bool same_ideal(const Ideal& I, const Ideal& J) {
  if (I.nvars() != J.nvars()) return false;
  Ideal Jo = J.with_order(I.order());
  return I.basis() == Jo.basis();
}

bool satisfies_buchberger_criterion(const std::vector<Polynomial>& basis, const MonomialOrder& order) {
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      const auto& f = basis[i];
      const auto& g = basis[j];
      Monomial lf = leading_monomial(f, order), lg = leading_monomial(g, order);
      Monomial l = lcm(lf, lg);
      Polynomial s = Polynomial::term(l / lf, Rational(1) / f.coeff(lf)) * f -
                     Polynomial::term(l / lg, Rational(1) / g.coeff(lg)) * g;
      if (!reduce(s, basis, order).is_zero()) return false;
    }
  return true;
}

std::optional<Polynomial> exact_divide(const Polynomial& p, const Polynomial& q) {
  if (q.is_zero()) throw std::domain_error("exact_divide by zero");
  MonomialOrder ord;
  TermVec f = to_terms(p, ord);
  TermVec g = to_terms(q, ord);
  Polynomial quot(p.nvars());
  while (!f.empty()) {
    const Term& top = f.back();
    if (!g.back().m.divides(top.m)) return std::nullopt;
    Rational c = top.c / g.back().c;
    Monomial mono = top.m / g.back().m;
    quot.add_term(mono, c);
    f = sub_mul(f, c, mono, g, ord);
  }
  return quot;
}

namespace {

Polynomial monic_grevlex(const Polynomial& p) {
  if (p.is_zero()) return p;
  return p * Rational(1 / leading_coefficient(p, MonomialOrder()));
}

int main_variable(const Polynomial& a, const Polynomial& b) {
  int v = -1;
  for (std::size_t i : a.support()) v = std::max(v, static_cast<int>(i));
  for (std::size_t i : b.support()) v = std::max(v, static_cast<int>(i));
  return v;
}

std::vector<Polynomial> coefficients_in(const Polynomial& p, std::size_t var) {
  std::vector<Polynomial> out(static_cast<std::size_t>(std::max(p.degree_in(var), 0)) + 1, Polynomial(p.nvars()));
  for (const auto& [m, c] : p.terms()) {
    Monomial rest = m;
    unsigned e = rest[var];
    rest[var] = 0;
    out[e].add_term(rest, c);
  }
  return out;
}

Polynomial gcd_rec(const Polynomial& a, const Polynomial& b);

Polynomial content_in(const Polynomial& p, std::size_t var) {
  Polynomial g(p.nvars());
  for (const auto& c : coefficients_in(p, var)) {
    if (c.is_zero()) continue;
    g = gcd_rec(g, c);
    if (g.is_constant()) break;
  }
  return g;
}

Polynomial primitive_part(const Polynomial& p, std::size_t var) {
  if (p.is_zero()) return p;
  return *exact_divide(p, content_in(p, var));
}

/// lc(b)^k * a reduced modulo b as polynomials in `var`.
Polynomial pseudo_remainder(Polynomial a, const Polynomial& b, std::size_t var) {
  const int db = b.degree_in(var);
  Polynomial lb = coefficients_in(b, var).back();
  while (!a.is_zero() && a.degree_in(var) >= db) {
    int da = a.degree_in(var);
    Polynomial la = coefficients_in(a, var).back();
    a = lb * a - la * Polynomial::term(Monomial::unit(a.nvars(), var, static_cast<unsigned>(da - db)), 1) * b;
  }
  return a;
}

/// Recursive primitive-PRS gcd, main variable = highest index present.
Polynomial gcd_rec(const Polynomial& a, const Polynomial& b) {
  const std::size_t n = a.nvars();
  if (a.is_zero()) return monic_grevlex(b);
  if (b.is_zero()) return monic_grevlex(a);
  if (a.is_constant() || b.is_constant()) return Polynomial::constant(n, 1);
  const auto v = static_cast<std::size_t>(main_variable(a, b));
  if (a.degree_in(v) <= 0) return gcd_rec(a, content_in(b, v));
  if (b.degree_in(v) <= 0) return gcd_rec(content_in(a, v), b);
  Polynomial ca = content_in(a, v), cb = content_in(b, v);
  Polynomial c = gcd_rec(ca, cb);
  Polynomial r0 = *exact_divide(a, ca), r1 = *exact_divide(b, cb);
  if (r0.degree_in(v) < r1.degree_in(v)) std::swap(r0, r1);
  Polynomial g(n);
  while (true) {
    Polynomial r = pseudo_remainder(r0, r1, v);
    if (r.is_zero()) {
      g = r1;
      break;
    }
    if (r.degree_in(v) <= 0) {
      g = Polynomial::constant(n, 1);
      break;
    }
    r0 = std::move(r1);
    r1 = primitive_part(r, v);
  }
  return monic_grevlex(c * primitive_part(g, v));
}

}  // namespace

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("poly_gcd: ring size mismatch");
  return gcd_rec(a, b);
}

}  // namespace singular_sos
