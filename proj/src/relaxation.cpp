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

#include "singular_sos/relaxation.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <set>

namespace singular_sos {

namespace {

void enumerate(std::size_t n, unsigned d, std::size_t var, std::vector<unsigned>& cur, std::vector<Monomial>& out) {
  if (var == n) {
    out.emplace_back(cur);
    return;
  }
  for (unsigned e = 0; e <= d; ++e) {
    cur[var] = e;
    enumerate(n, d - e, var + 1, cur, out);
  }
  cur[var] = 0;
}

unsigned half_degree(const Polynomial& p) {
  int d = p.degree();
  return d <= 0 ? 0u : static_cast<unsigned>((d + 1) / 2);
}

void check_order(const Polynomial& h0, const std::vector<Polynomial>& h, unsigned k) {
  if (k == 0) throw OrderTooSmallError("relaxation order must be at least 1");
  auto need = [&](const Polynomial& p, const char* what) {
    if (p.degree() > static_cast<int>(2 * k))
      throw OrderTooSmallError(std::string("order ") + std::to_string(k) + " is too small for the " + what +
                               " of degree " + std::to_string(p.degree()));
  };
  need(h0, "objective");
  for (const auto& g : h) {
    if (g.nvars() != h0.nvars()) throw std::invalid_argument("relaxation: ring size mismatch");
    need(g, "constraint");
  }
}

}  // namespace

std::vector<Monomial> monomial_basis(std::size_t n, unsigned d) {
  std::vector<Monomial> out;
  std::vector<unsigned> cur(n, 0);
  enumerate(n, d, 0, cur, out);
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return graded_lex_greater(a, b);
  });
  return out;
}

MomentIndex::MomentIndex(std::size_t n, unsigned degree) : monomials_(monomial_basis(n, degree)) {
  for (std::size_t i = 0; i < monomials_.size(); ++i) lookup_.emplace(monomials_[i], i);
}

std::size_t MomentIndex::index(const Monomial& m) const {
  auto it = lookup_.find(m);
  if (it == lookup_.end()) throw std::out_of_range("monomial outside the moment range");
  return it->second;
}

unsigned minimal_order(const Polynomial& h0, const std::vector<Polynomial>& h) {
  unsigned k = std::max(1u, half_degree(h0));
  for (const auto& g : h) k = std::max(k, half_degree(g));
  return k;
}

RelaxationProblem assemble_primal(const Polynomial& h0, const std::vector<Polynomial>& h, unsigned k) {
  check_order(h0, h, k);
  RelaxationProblem R;
  R.nvars = h0.nvars();
  R.order = k;
  R.moments = MomentIndex(R.nvars, 2 * k);
  R.basis = monomial_basis(R.nvars, k);
  R.objective.assign(R.moments.size(), Rational(0));
  for (const auto& [m, c] : h0.terms()) R.objective[R.moments.index(m)] = c;
  for (const auto& g : h) {
    if (g.is_zero()) continue;
    for (const auto& gamma : monomial_basis(R.nvars, 2 * (k - half_degree(g)))) {
      std::vector<std::pair<std::size_t, Rational>> row;
      for (const auto& [m, c] : g.terms()) row.emplace_back(R.moments.index(m * gamma), c);
      std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      R.localizing.push_back(std::move(row));
    }
  }
  return R;
}

SDPProblem RelaxationProblem::to_sdp() const {
  SDPProblem p;
  p.block_sizes = {basis.size()};
  p.num_free = moments.size();
  p.free_objective.resize(moments.size());
  for (std::size_t i = 0; i < objective.size(); ++i) p.free_objective[i] = to_double(objective[i]);
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = a; b < basis.size(); ++b) {
      SDPConstraint c;
      c.entries.push_back({0, a, b, 1.0});
      c.free_coeffs.emplace_back(moments.index(basis[a] * basis[b]), -1.0);
      p.constraints.push_back(std::move(c));
    }
  for (const auto& row : localizing) {
    SDPConstraint c;
    for (const auto& [i, v] : row) c.free_coeffs.emplace_back(i, to_double(v));
    p.constraints.push_back(std::move(c));
  }
  SDPConstraint normalize;
  normalize.free_coeffs.emplace_back(moments.index(Monomial(nvars)), 1.0);
  normalize.rhs = 1.0;
  p.constraints.push_back(std::move(normalize));
  return p;
}

DualRelaxation assemble_dual(const Polynomial& h0, const std::vector<Polynomial>& h, unsigned k) {
  check_order(h0, h, k);
  DualRelaxation D;
  D.nvars = h0.nvars();
  D.order = k;
  D.basis = monomial_basis(D.nvars, k);
  D.generators = h;
  MomentIndex rows(D.nvars, 2 * k);
  auto& p = D.sdp;
  p.block_sizes = {D.basis.size()};
  p.constraints.resize(rows.size());
  for (const auto& [m, c] : h0.terms()) p.constraints[rows.index(m)].rhs = to_double(c);
  for (std::size_t a = 0; a < D.basis.size(); ++a)
    for (std::size_t b = a; b < D.basis.size(); ++b)
      p.constraints[rows.index(D.basis[a] * D.basis[b])].entries.push_back({0, a, b, a == b ? 1.0 : 2.0});
  std::size_t next_free = 1;
  p.constraints[rows.index(Monomial(D.nvars))].free_coeffs.emplace_back(0, 1.0);
  for (const auto& g : h) {
    D.multiplier_offset.push_back(next_free);
    if (g.is_zero()) {
      D.multiplier_basis.emplace_back();
      continue;
    }
    D.multiplier_basis.push_back(monomial_basis(D.nvars, 2 * (k - half_degree(g))));
    for (const auto& gamma : D.multiplier_basis.back()) {
      for (const auto& [m, c] : g.terms())
        p.constraints[rows.index(m * gamma)].free_coeffs.emplace_back(next_free, to_double(c));
      ++next_free;
    }
  }
  p.num_free = next_free;
  p.free_objective.assign(next_free, 0.0);
  p.free_objective[0] = -1.0;
  return D;
}

Polynomial Certificate::sos_part() const {
  Polynomial s(nvars);
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = 0; b < basis.size(); ++b)
      if (gram[a][b] != 0) s.add_term(basis[a] * basis[b], gram[a][b]);
  return s;
}

Polynomial extract_gram(const Eigen::MatrixXd& G, const std::vector<Monomial>& basis) {
  if (G.rows() != static_cast<Eigen::Index>(basis.size()) || G.cols() != G.rows())
    throw std::invalid_argument("extract_gram: Gram size does not match the basis");
  std::size_t n = basis.empty() ? 0 : basis.front().nvars();
  Polynomial s(n);
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = 0; b < basis.size(); ++b)
      if (G(a, b) != 0) s.add_term(basis[a] * basis[b], Rational(G(a, b)));
  return s;
}

Polynomial extract_gram(const SDPSolution& sol, const std::vector<Monomial>& basis) {
  if (sol.X.size() != 1) throw std::invalid_argument("extract_gram: expected a single-block solution");
  return extract_gram(sol.X[0], basis);
}

Certificate extract_certificate(const SDPSolution& sol, const DualRelaxation& D) {
  if (sol.status != SDPStatus::optimal && sol.status != SDPStatus::stalled)
    throw std::invalid_argument(std::string("extract_certificate: solve status is ") + to_string(sol.status));
  if (sol.X.size() != 1 || static_cast<std::size_t>(sol.X[0].rows()) != D.basis.size() ||
      static_cast<std::size_t>(sol.x_free.size()) != D.sdp.num_free)
    throw std::invalid_argument("extract_certificate: solution does not belong to this relaxation");
  Certificate c;
  c.nvars = D.nvars;
  c.numeric = true;
  c.xi = Rational(sol.x_free[0]);
  c.basis = D.basis;
  const auto& G = sol.X[0];
  c.gram.assign(D.basis.size(), std::vector<Rational>(D.basis.size()));
  for (std::size_t a = 0; a < D.basis.size(); ++a)
    for (std::size_t b = 0; b < D.basis.size(); ++b) c.gram[a][b] = Rational(G(a, b));
  for (std::size_t t = 0; t < D.generators.size(); ++t) {
    Polynomial u(D.nvars);
    for (std::size_t i = 0; i < D.multiplier_basis[t].size(); ++i) {
      double v = sol.x_free[D.multiplier_offset[t] + i];
      if (v != 0) u.add_term(D.multiplier_basis[t][i], Rational(v));
    }
    c.multipliers.push_back(std::move(u));
  }
  return c;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::exact:
      return "exact";
    case Verdict::numeric_within_tol:
      return "numeric-within-tol";
    case Verdict::failed:
      return "failed";
  }
  return "?";
}

bool is_psd_exact(const std::vector<std::vector<Rational>>& M0) {
  const std::size_t n = M0.size();
  for (const auto& row : M0)
    if (row.size() != n) throw std::invalid_argument("is_psd_exact: matrix is not square");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (M0[i][j] != M0[j][i]) return false;
  auto M = M0;
  std::vector<std::size_t> active(n);
  for (std::size_t i = 0; i < n; ++i) active[i] = i;
  while (!active.empty()) {
    std::size_t pick = active.size();
    for (std::size_t a = 0; a < active.size(); ++a) {
      const Rational& d = M[active[a]][active[a]];
      if (d < 0) return false;
      if (d > 0 && pick == active.size()) pick = a;
    }
    if (pick == active.size()) {
      for (std::size_t i : active)
        for (std::size_t j : active)
          if (M[i][j] != 0) return false;
      return true;
    }
    const std::size_t k = active[pick];
    active.erase(active.begin() + static_cast<std::ptrdiff_t>(pick));
    const Rational piv = M[k][k];
    for (std::size_t i : active) {
      if (M[i][k] == 0) continue;
      Rational f = M[i][k] / piv;
      for (std::size_t j : active) M[i][j] -= f * M[k][j];
    }
  }
  return true;
}

VerifyResult verify_certificate(const Polynomial& h0, const Certificate& cert, const Ideal& I, double tol) {
  const std::size_t n = I.nvars();
  if (h0.nvars() != n || cert.nvars != n) throw std::invalid_argument("verify_certificate: variable count mismatch");
  if (cert.gram.size() != cert.basis.size()) throw std::invalid_argument("verify_certificate: Gram size does not match the basis");
  for (const auto& row : cert.gram)
    if (row.size() != cert.basis.size()) throw std::invalid_argument("verify_certificate: Gram matrix is not square");
  for (const auto& m : cert.basis)
    if (m.nvars() != n) throw std::invalid_argument("verify_certificate: basis monomial in the wrong ring");

  VerifyResult r;
  const std::size_t s = cert.basis.size();
  bool symmetric = true;
  double asym = 0;
  Eigen::MatrixXd G(s, s);
  for (std::size_t a = 0; a < s; ++a)
    for (std::size_t b = 0; b < s; ++b) {
      G(a, b) = to_double(cert.gram[a][b]);
      if (cert.gram[a][b] != cert.gram[b][a]) {
        symmetric = false;
        asym = std::max(asym, std::abs(to_double(cert.gram[a][b] - cert.gram[b][a])));
      }
    }
  if (s > 0) {
    Eigen::MatrixXd Gs = (G + G.transpose()) / 2;
    r.min_eigenvalue = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(Gs, Eigen::EigenvaluesOnly).eigenvalues().minCoeff();
  }
  Polynomial diff = h0 - Polynomial::constant(n, cert.xi) - cert.sos_part();
  r.residual = normal_form(diff, I);
  for (const auto& [m, c] : r.residual.terms()) r.residual_max = std::max(r.residual_max, std::abs(to_double(c)));

  if (!cert.numeric) {
    r.psd = is_psd_exact(cert.gram);
    if (r.psd && r.residual.is_zero()) {
      r.verdict = Verdict::exact;
      r.message = "Gram matrix is PSD (exact LDL) and h0 - xi - sigma reduces to 0 modulo the ideal";
      return r;
    }
  } else {
    r.psd = symmetric && r.min_eigenvalue >= -tol;
  }
  bool numeric_ok = r.min_eigenvalue >= -tol && asym <= tol && r.residual_max <= tol;
  if (numeric_ok) {
    r.verdict = Verdict::numeric_within_tol;
    r.message = "residual coefficients and negative eigenvalues within tolerance";
  } else {
    r.verdict = Verdict::failed;
    std::string why;
    if (r.min_eigenvalue < -tol) why += "Gram minimum eigenvalue " + std::to_string(r.min_eigenvalue) + "; ";
    if (asym > tol) why += "Gram matrix not symmetric (" + std::to_string(asym) + "); ";
    if (r.residual_max > tol)
      why += "residual normal form has coefficient " + std::to_string(r.residual_max) + " (" +
             poly_format(r.residual) + "); ";
    if (why.empty()) why = "exact check failed; ";
    r.message = why.substr(0, why.size() - 2);
  }
  return r;
}

Certificate rationalize_certificate(const Certificate& cert, const Integer& max_den) {
  Certificate out = cert;
  out.numeric = false;
  out.xi = rationalize(to_double(cert.xi), max_den);
  const std::size_t s = cert.basis.size();
  for (std::size_t a = 0; a < s; ++a)
    for (std::size_t b = a; b < s; ++b) {
      Rational v = rationalize(to_double((cert.gram[a][b] + cert.gram[b][a]) / 2), max_den);
      out.gram[a][b] = v;
      out.gram[b][a] = v;
    }
  for (auto& u : out.multipliers) {
    Polynomial q(u.nvars());
    for (const auto& [m, c] : u.terms()) q.add_term(m, rationalize(to_double(c), max_den));
    u = std::move(q);
  }
  return out;
}

std::vector<Polynomial> lagrange_interpolants(const Polynomial& h0, const std::vector<Rational>& values) {
  if (values.empty()) throw std::invalid_argument("lagrange_interpolants: no values");
  std::set<Rational> seen(values.begin(), values.end());
  if (seen.size() != values.size()) throw std::invalid_argument("lagrange_interpolants: duplicate values");
  const std::size_t n = h0.nvars();
  std::vector<Polynomial> p;
  for (std::size_t j = 0; j < values.size(); ++j) {
    Polynomial pj = Polynomial::constant(n, 1);
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (i == j) continue;
      Rational denom = values[j] - values[i];
      pj *= (h0 - Polynomial::constant(n, values[i])) * Rational(1 / denom);
    }
    p.push_back(std::move(pj));
  }
  return p;
}

Polynomial finite_value_certificate(const Polynomial& h0, const std::vector<Rational>& values) {
  for (const auto& t : values)
    if (t < 0) throw std::invalid_argument("finite_value_certificate: negative value " + to_string(t));
  auto p = lagrange_interpolants(h0, values);
  Polynomial sigma(h0.nvars());
  for (std::size_t i = 0; i < values.size(); ++i)
    if (values[i] != 0) sigma += p[i] * p[i] * values[i];
  return sigma;
}

}  // namespace singular_sos
