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

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "singular_sos/ideal.hpp"
#include "singular_sos/polynomial.hpp"
#include "singular_sos/sdp.hpp"

namespace singular_sos {

/// All monomials of degree <= d in n variables: by degree, then graded-lex descending
/// within a degree (1, x1, x2, x1^2, x1*x2, x2^2, ...).
std::vector<Monomial> monomial_basis(std::size_t n, unsigned d);

/// Bijection between monomials of degree <= 2k and flat moment indices.
class MomentIndex {
 public:
  MomentIndex() = default;
  MomentIndex(std::size_t n, unsigned degree);

  std::size_t size() const { return monomials_.size(); }
  const std::vector<Monomial>& monomials() const { return monomials_; }
  const Monomial& monomial(std::size_t i) const { return monomials_[i]; }
  /// Throws std::out_of_range for monomials above the degree.
  std::size_t index(const Monomial& m) const;
  bool contains(const Monomial& m) const { return lookup_.count(m) != 0; }

 private:
  std::vector<Monomial> monomials_;
  std::map<Monomial, std::size_t> lookup_;
};

class OrderTooSmallError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Smallest admissible order: max(1, ceil(deg h0 / 2), ceil(deg h_t / 2)).
unsigned minimal_order(const Polynomial& h0, const std::vector<Polynomial>& h);

/// Moment relaxation tau_k: minimize L_y(h0) subject to M_k(y) PSD,
/// L_y(h_t x^gamma) = 0 for |gamma| <= 2(k - r_t), and y_0 = 1.
struct RelaxationProblem {
  std::size_t nvars = 0;
  unsigned order = 0;
  MomentIndex moments;
  std::vector<Monomial> basis;  ///< indexes the moment matrix
  std::vector<Rational> objective;  ///< coefficient of each y
  std::vector<std::vector<std::pair<std::size_t, Rational>>> localizing;  ///< rows equal to 0

  /// Block SDP with y as free variables and X_ab = y_{a+b}.
  SDPProblem to_sdp() const;
};

RelaxationProblem assemble_primal(const Polynomial& h0, const std::vector<Polynomial>& h, unsigned k);

/// SOS relaxation rho_k as an SDP in (xi, G, u_t): minimize -xi subject to
/// h0 - xi = v' G v + sum_t h_t u_t coefficient by coefficient.
struct DualRelaxation {
  std::size_t nvars = 0;
  unsigned order = 0;
  std::vector<Monomial> basis;                      ///< v_k
  std::vector<std::vector<Monomial>> multiplier_basis;  ///< per generator
  std::vector<std::size_t> multiplier_offset;       ///< first free index per generator (xi is 0)
  std::vector<Polynomial> generators;
  SDPProblem sdp;
};

DualRelaxation assemble_dual(const Polynomial& h0, const std::vector<Polynomial>& h, unsigned k);

/// h0 - xi = v' G v + sum_t h_t * multipliers[t]. Rational entries; `numeric` marks data
/// that came from a floating-point solve.
struct Certificate {
  std::size_t nvars = 0;
  Rational xi;
  std::vector<Monomial> basis;
  std::vector<std::vector<Rational>> gram;
  std::vector<Polynomial> multipliers;
  bool numeric = false;

  Polynomial sos_part() const;
};

/// v' G v expanded for a numeric Gram matrix (entries converted exactly from doubles).
Polynomial extract_gram(const Eigen::MatrixXd& G, const std::vector<Monomial>& basis);
Polynomial extract_gram(const SDPSolution& sol, const std::vector<Monomial>& basis);

/// Certificate read off an optimal solve of an assembled dual relaxation.
Certificate extract_certificate(const SDPSolution& sol, const DualRelaxation& relaxation);

enum class Verdict { exact, numeric_within_tol, failed };
const char* to_string(Verdict v);

struct VerifyResult {
  Verdict verdict = Verdict::failed;
  bool psd = false;
  double min_eigenvalue = 0;
  Polynomial residual;  ///< normal form of h0 - xi - sigma modulo the ideal
  double residual_max = 0;
  std::string message;
};

/// Exact check (exact LDL for PSD, normal form for the residual) for rational data,
/// otherwise a numeric check of the residual coefficients against tol.
VerifyResult verify_certificate(const Polynomial& h0, const Certificate& cert, const Ideal& I, double tol = 1e-6);

/// Rounds xi and Gram entries by continued fractions (denominators <= max_den); the
/// result is marked exact.
Certificate rationalize_certificate(const Certificate& cert, const Integer& max_den = Integer(1000000));

/// Exact PSD test by symmetric elimination with diagonal pivoting.
bool is_psd_exact(const std::vector<std::vector<Rational>>& M);

/// Interpolants p_j = prod_{i != j} (h0 - t_i) / (t_j - t_i).
std::vector<Polynomial> lagrange_interpolants(const Polynomial& h0, const std::vector<Rational>& values);

/// sigma = sum_i t_i p_i^2 for distinct non-negative values; sigma = t_j wherever h0 = t_j.
Polynomial finite_value_certificate(const Polynomial& h0, const std::vector<Rational>& values);

}  // namespace singular_sos
