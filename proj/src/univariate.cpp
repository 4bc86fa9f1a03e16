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

#include "singular_sos/univariate.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace singular_sos {

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational UPoly::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double UPoly::evaluate(double x) const {
  double acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

UPoly UPoly::derivative() const {
  std::vector<Rational> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<unsigned long>(i));
  return UPoly(std::move(d));
}

UPoly UPoly::monic() const {
  if (c_.empty()) return *this;
  return *this * Rational(1 / c_.back());
}

UPoly& UPoly::operator+=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return UPoly();
  std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  return UPoly(std::move(r));
}

UPoly operator*(UPoly a, const Rational& s) {
  for (auto& c : a.c_) c *= s;
  a.trim();
  return a;
}

UPoly UPoly::operator-() const { return *this * Rational(-1); }

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& d) const {
  if (d.is_zero()) throw std::domain_error("univariate division by zero");
  std::vector<Rational> rem = c_;
  int dd = d.degree();
  if (degree() < dd) return {UPoly(), *this};
  std::vector<Rational> q(static_cast<std::size_t>(degree() - dd + 1), 0);
  Rational inv = 1 / d.leading();
  for (int k = degree() - dd; k >= 0; --k) {
    Rational f = rem[static_cast<std::size_t>(k + dd)] * inv;
    q[static_cast<std::size_t>(k)] = f;
    if (f == 0) continue;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(k + j)] -= f * d.c_[static_cast<std::size_t>(j)];
  }
  return {UPoly(std::move(q)), UPoly(std::move(rem))};
}

Polynomial UPoly::to_polynomial(std::size_t nvars, std::size_t var) const {
  Polynomial p(nvars);
  for (std::size_t i = 0; i < c_.size(); ++i) p.add_term(Monomial::unit(nvars, var, static_cast<unsigned>(i)), c_[i]);
  return p;
}

UPoly UPoly::from_polynomial(const Polynomial& p, std::size_t var) {
  std::vector<Rational> c;
  for (const auto& [m, v] : p.terms()) {
    for (std::size_t i = 0; i < m.nvars(); ++i)
      if (i != var && m[i] != 0) throw std::invalid_argument("polynomial is not univariate in the requested variable");
    std::size_t e = m[var];
    if (c.size() <= e) c.resize(e + 1, 0);
    c[e] += v;
  }
  return UPoly(std::move(c));
}

std::string UPoly::to_string(const std::string& var) const {
  return poly_format(to_polynomial(1, 0), {var});
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  while (!y.is_zero()) {
    UPoly r = x.divmod(y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

UPoly squarefree_part(const UPoly& p) {
  if (p.degree() <= 0) return p;
  UPoly g = gcd(p, p.derivative());
  return p.divmod(g).first.monic();
}

namespace {

/// Integer-coefficient primitive copy with positive leading coefficient.
std::vector<Integer> primitive_integer(const UPoly& p) {
  Integer l = lcm_of_denominators(p.coeffs());
  std::vector<Integer> out;
  Integer g = 0;
  for (const auto& c : p.coeffs()) {
    Rational s = c * l;
    out.push_back(s.get_num());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), s.get_num_mpz_t());
  }
  if (g == 0) return out;
  if (out.back() < 0) g = -g;
  for (auto& v : out) v /= g;
  return out;
}

UPoly from_integers(const std::vector<Integer>& c) {
  std::vector<Rational> r;
  for (const auto& v : c) r.emplace_back(v);
  return UPoly(std::move(r));
}

Rational cauchy_bound(const UPoly& p) {
  Rational m = 0;
  Rational lc = abs(p.leading());
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, Rational(abs(p.coeff(static_cast<std::size_t>(i))) / lc));
  return m + 1;
}

int sign_of(const Rational& q) { return q > 0 ? 1 : (q < 0 ? -1 : 0); }

std::size_t variations(const std::vector<UPoly>& seq, const std::optional<Rational>& x, bool minus_inf) {
  std::size_t v = 0;
  int last = 0;
  for (const auto& s : seq) {
    int sg;
    if (x) {
      sg = sign_of(s.evaluate(*x));
    } else {
      sg = sign_of(s.leading());
      if (minus_inf && s.degree() % 2 == 1) sg = -sg;
    }
    if (sg == 0) continue;
    if (last != 0 && sg != last) ++v;
    last = sg;
  }
  return v;
}

/// Simplest rational (smallest denominator) in the closed interval [lo, hi].
Rational simplest_between(Rational lo, Rational hi) {
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
  if (Rational(fl) == lo) return lo;
  if (Rational(fl + 1) <= hi) return Rational(fl + 1);
  // Both in (fl, fl+1): recurse on reciprocals of fractional parts.
  Rational a = lo - Rational(fl), b = hi - Rational(fl);
  Rational inner = simplest_between(1 / b, 1 / a);
  return Rational(fl) + 1 / inner;
}

/// Disjoint half-open intervals (lo, hi] each containing one root of squarefree p.
std::vector<std::pair<Rational, Rational>> isolate(const UPoly& sqf) {
  std::vector<std::pair<Rational, Rational>> out;
  if (sqf.degree() <= 0) return out;
  auto seq = sturm_sequence(sqf);
  Rational B = cauchy_bound(sqf);
  std::function<void(Rational, Rational, std::size_t)> rec = [&](Rational lo, Rational hi, std::size_t n) {
    if (n == 0) return;
    if (n == 1) {
      out.emplace_back(lo, hi);
      return;
    }
    Rational mid = (lo + hi) / 2;
    std::size_t left = count_real_roots(seq, lo, mid);
    rec(lo, mid, left);
    rec(mid, hi, n - left);
  };
  rec(-B, B, count_real_roots(seq, Rational(-B), Rational(B)));
  return out;
}

std::vector<Integer> divisors_of(Integer n, std::size_t cap) {
  if (n < 0) n = -n;
  std::vector<Integer> primes;
  std::vector<unsigned> mult;
  Integer m = n;
  for (Integer d = 2; d * d <= m; ++d) {
    if (d > 1000000) return {};
    unsigned k = 0;
    while (m % d == 0) {
      m /= d;
      ++k;
    }
    if (k) {
      primes.push_back(d);
      mult.push_back(k);
    }
  }
  if (m > 1) {
    primes.push_back(m);
    mult.push_back(1);
  }
  std::vector<Integer> divs{1};
  for (std::size_t i = 0; i < primes.size(); ++i) {
    std::size_t sz = divs.size();
    Integer pk = 1;
    for (unsigned k = 1; k <= mult[i]; ++k) {
      pk *= primes[i];
      for (std::size_t j = 0; j < sz; ++j) divs.push_back(divs[j] * pk);
      if (divs.size() > cap) return {};
    }
  }
  return divs;
}

/// Newton interpolation through (xs[i], ys[i]).
UPoly interpolate(const std::vector<Integer>& xs, const std::vector<Integer>& ys) {
  std::size_t n = xs.size();
  std::vector<Rational> dd(ys.begin(), ys.end());
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / Rational(xs[i] - xs[i - j]);
      if (i == j) break;
    }
  UPoly p = UPoly::constant(dd[n - 1]);
  for (std::size_t k = n - 1; k-- > 0;) {
    p = p * UPoly({Rational(-xs[k]), 1});
    p += UPoly::constant(dd[k]);
  }
  return p;
}

bool all_integer(const UPoly& p) {
  for (const auto& c : p.coeffs())
    if (c.get_den() != 1) return false;
  return true;
}

/// Kronecker search for a factor of degree m of the primitive integer polynomial f.
/// Returns: factor found, no factor exists, or undecided (budget).
enum class Search { found, none, undecided };

Search kronecker_factor(const UPoly& f, int m, UPoly& factor) {
  const std::size_t budget = 2000000;
  // Candidate evaluation points with small divisor counts.
  struct Pt {
    Integer x;
    Integer v;
    std::vector<Integer> divs;
  };
  std::vector<Pt> pts;
  for (int k = 0; pts.size() < static_cast<std::size_t>(3 * (m + 1)) && k < 200; ++k) {
    Integer x = (k % 2 == 0) ? Integer(k / 2) : Integer(-(k + 1) / 2);
    Rational v = f.evaluate(Rational(x));
    if (v == 0) {
      factor = UPoly::linear_root(Rational(x));
      return Search::found;
    }
    auto divs = divisors_of(v.get_num(), 4096);
    if (divs.empty()) continue;
    pts.push_back({x, v.get_num(), std::move(divs)});
  }
  if (pts.size() < static_cast<std::size_t>(m + 1)) return Search::undecided;
  std::stable_sort(pts.begin(), pts.end(), [](const Pt& a, const Pt& b) { return a.divs.size() < b.divs.size(); });
  pts.resize(static_cast<std::size_t>(m + 1));
  double combos = 1;
  for (std::size_t i = 0; i < pts.size(); ++i) combos *= static_cast<double>(pts[i].divs.size() * (i == 0 ? 1 : 2));
  if (combos > static_cast<double>(budget)) return Search::undecided;

  std::vector<Integer> xs, ys(pts.size());
  for (const auto& p : pts) xs.push_back(p.x);
  Integer lc = f.leading().get_num();
  std::vector<std::size_t> idx(pts.size(), 0);
  std::vector<int> sgn(pts.size(), 1);
  while (true) {
    for (std::size_t i = 0; i < pts.size(); ++i) ys[i] = pts[i].divs[idx[i]] * sgn[i];
    UPoly g = interpolate(xs, ys);
    if (g.degree() == m && all_integer(g) && lc % g.leading().get_num() == 0) {
      auto [q, r] = f.divmod(g);
      if (r.is_zero()) {
        factor = g;
        return Search::found;
      }
    }
    // Advance the mixed-radix counter (first point keeps a positive sign).
    std::size_t i = 0;
    for (; i < pts.size(); ++i) {
      if (++idx[i] < pts[i].divs.size()) break;
      idx[i] = 0;
      if (i > 0 && sgn[i] == 1) {
        sgn[i] = -1;
        break;
      }
      sgn[i] = 1;
    }
    if (i == pts.size()) break;
  }
  return Search::none;
}

/// Factor a squarefree primitive integer polynomial with positive leading coefficient.
void factor_squarefree(const UPoly& f, int max_degree, std::vector<UPoly>& out, bool& complete) {
  if (f.degree() <= 1) {
    if (f.degree() == 1) out.push_back(f);
    return;
  }
  for (const auto& r : rational_roots(f)) {
    UPoly lin = from_integers(primitive_integer(UPoly::linear_root(r)));
    auto [q, rem] = f.divmod(lin);
    out.push_back(lin);
    factor_squarefree(from_integers(primitive_integer(q)), max_degree, out, complete);
    return;
  }
  if (f.degree() <= 3) {  // no rational root => irreducible
    out.push_back(f);
    return;
  }
  if (f.degree() > max_degree) {
    out.push_back(f);
    complete = false;
    return;
  }
  for (int m = 2; m <= f.degree() / 2; ++m) {
    UPoly g;
    Search s = kronecker_factor(f, m, g);
    if (s == Search::undecided) {
      out.push_back(f);
      complete = false;
      return;
    }
    if (s == Search::found) {
      UPoly gp = from_integers(primitive_integer(g));
      factor_squarefree(gp, max_degree, out, complete);
      factor_squarefree(from_integers(primitive_integer(f.divmod(gp).first)), max_degree, out, complete);
      return;
    }
  }
  out.push_back(f);
}

}  // namespace

std::vector<Rational> rational_roots(const UPoly& p) {
  std::vector<Rational> roots;
  if (p.degree() <= 0) return roots;
  UPoly sqf = squarefree_part(p);
  auto ints = primitive_integer(sqf);
  Integer lc = ints.back();
  if (lc < 0) lc = -lc;
  Rational width_target = Rational(1, lc * lc * 2);
  for (auto [lo, hi] : isolate(sqf)) {
    if (sqf.evaluate(hi) == 0) {
      roots.push_back(hi);
      continue;
    }
    auto seq = sturm_sequence(sqf);
    while (hi - lo >= width_target) {
      Rational mid = (lo + hi) / 2;
      if (count_real_roots(seq, lo, mid) == 1) hi = mid;
      else lo = mid;
    }
    Rational cand = simplest_between(lo, hi);
    if (cand.get_den() <= lc && sqf.evaluate(cand) == 0) roots.push_back(cand);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

UFactorization factor_univariate(const UPoly& p, int max_degree) {
  if (p.is_zero()) throw std::invalid_argument("cannot factor the zero polynomial");
  UFactorization result;
  if (p.degree() == 0) {
    result.unit = p.leading();
    return result;
  }
  // Yun squarefree decomposition over Q.
  UPoly a = p.monic();
  UPoly b = a.derivative();
  UPoly c = gcd(a, b);
  UPoly w = a.divmod(c).first;
  UPoly y = b.divmod(c).first;
  UPoly z = y - w.derivative();
  unsigned mult = 1;
  while (w.degree() > 0) {
    UPoly g = gcd(w, z);
    if (g.degree() > 0) {
      std::vector<UPoly> pieces;
      factor_squarefree(from_integers(primitive_integer(g)), max_degree, pieces, result.complete);
      for (auto& piece : pieces) result.factors.emplace_back(std::move(piece), mult);
    }
    w = w.divmod(g).first;
    y = z.divmod(g).first;
    z = y - w.derivative();
    ++mult;
  }
  // Unit so that p = unit * prod f_i^m_i.
  Rational prod_lc = 1;
  for (const auto& [f, m] : result.factors) prod_lc *= singular_sos::pow(f.leading(), m);
  result.unit = p.leading() / prod_lc;
  std::sort(result.factors.begin(), result.factors.end(), [](const auto& x, const auto& y2) {
    if (x.first.degree() != y2.first.degree()) return x.first.degree() < y2.first.degree();
    return x.first.coeffs() < y2.first.coeffs();
  });
  return result;
}

std::optional<bool> is_irreducible_univariate(const UPoly& p, int max_degree) {
  if (p.degree() <= 0) return false;
  auto f = factor_univariate(p, max_degree);
  if (f.factors.size() == 1 && f.factors[0].second == 1) {
    if (f.complete) return true;
    return std::nullopt;
  }
  return false;
}

std::vector<UPoly> sturm_sequence(const UPoly& p) {
  std::vector<UPoly> seq;
  if (p.is_zero()) return seq;
  seq.push_back(p);
  UPoly d = p.derivative();
  if (d.is_zero()) return seq;
  seq.push_back(d);
  while (true) {
    UPoly r = seq[seq.size() - 2].divmod(seq.back()).second;
    if (r.is_zero()) break;
    seq.push_back(-r);
  }
  return seq;
}

std::size_t count_real_roots(const std::vector<UPoly>& sturm, const std::optional<Rational>& a,
                             const std::optional<Rational>& b) {
  std::size_t va = variations(sturm, a, true);
  std::size_t vb = variations(sturm, b, false);
  return va >= vb ? va - vb : 0;
}

RootStatus sturm_roots_status(const UPoly& phi) {
  if (phi.is_zero()) throw std::invalid_argument("root status of the zero polynomial");
  RootStatus st;
  st.degree = static_cast<std::size_t>(phi.degree());
  st.zero_is_root = phi.coeff(0) == 0;
  UPoly sqf = squarefree_part(phi);
  auto seq = sturm_sequence(sqf);
  st.distinct_real = count_real_roots(seq, std::nullopt, std::nullopt);
  std::size_t nonpos = count_real_roots(seq, std::nullopt, Rational(0));
  st.distinct_negative = nonpos - (st.zero_is_root ? 1 : 0);
  st.distinct_positive = st.distinct_real - nonpos;
  // Multiplicity-aware: all roots real iff every squarefree layer is real-rooted.
  bool all_real = true;
  UPoly rest = phi.monic();
  while (rest.degree() > 0) {
    UPoly layer = squarefree_part(rest);
    auto lseq = sturm_sequence(layer);
    if (count_real_roots(lseq, std::nullopt, std::nullopt) != static_cast<std::size_t>(layer.degree())) {
      all_real = false;
      break;
    }
    rest = rest.divmod(layer).first;
  }
  st.all_real = all_real;
  st.all_nonnegative = st.distinct_negative == 0;
  return st;
}

std::vector<double> real_roots_approx(const UPoly& p, double tol) {
  std::vector<double> out;
  if (p.degree() <= 0) return out;
  UPoly sqf = squarefree_part(p);
  auto seq = sturm_sequence(sqf);
  for (auto [lo, hi] : isolate(sqf)) {
    if (sqf.evaluate(hi) == 0) {
      out.push_back(hi.get_d());
      continue;
    }
    while (Rational(hi - lo).get_d() > tol) {
      Rational mid = (lo + hi) / 2;
      if (count_real_roots(seq, lo, mid) == 1) hi = mid;
      else lo = mid;
    }
    out.push_back(Rational((lo + hi) / 2).get_d());
  }
  return out;
}

}  // namespace singular_sos
