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

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "singular_sos/polynomial.hpp"
#include "singular_sos/rational.hpp"

namespace singular_sos {

/// Dense univariate polynomial over Q, coefficients stored from degree 0 upward.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs);
  static UPoly constant(const Rational& c) { return UPoly({c}); }
  /// x - r
  static UPoly linear_root(const Rational& r) { return UPoly({-r, 1}); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

  Rational evaluate(const Rational& x) const;
  double evaluate(double x) const;
  UPoly derivative() const;
  UPoly monic() const;

  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(UPoly a, const Rational& s);
  UPoly operator-() const;
  bool operator==(const UPoly&) const = default;

  /// Quotient and remainder; throws on division by zero.
  std::pair<UPoly, UPoly> divmod(const UPoly& d) const;

  /// Embeds as a polynomial in variable `var` of an nvars-ring.
  Polynomial to_polynomial(std::size_t nvars, std::size_t var) const;
  /// Requires p to involve at most variable `var`.
  static UPoly from_polynomial(const Polynomial& p, std::size_t var);

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Monic gcd (zero if both are zero).
UPoly gcd(const UPoly& a, const UPoly& b);
UPoly squarefree_part(const UPoly& p);

/// Distinct rational roots, ascending.
std::vector<Rational> rational_roots(const UPoly& p);

/// Factorization over Q into irreducible factors with multiplicities (primitive integer
/// factors up to a rational unit). Complete for squarefree pieces of degree <= max_degree;
/// larger pieces without rational roots come back with `complete = false`.
struct UFactorization {
  Rational unit;
  std::vector<std::pair<UPoly, unsigned>> factors;
  bool complete = true;
};
UFactorization factor_univariate(const UPoly& p, int max_degree = 8);

/// True when p (nonconstant) is irreducible over Q; nullopt when undecided.
std::optional<bool> is_irreducible_univariate(const UPoly& p, int max_degree = 8);

/// Sturm sequence p, p', -rem(...), ...
std::vector<UPoly> sturm_sequence(const UPoly& p);

/// Number of distinct real roots of p in the half-open interval (a, b]; use
/// std::nullopt for -inf (a) or +inf (b).
std::size_t count_real_roots(const std::vector<UPoly>& sturm, const std::optional<Rational>& a,
                             const std::optional<Rational>& b);

/// Real-root bookkeeping for a nonzero univariate polynomial.
struct RootStatus {
  bool all_real = false;         ///< every complex root (with multiplicity) is real
  bool all_nonnegative = false;  ///< every real root is >= 0
  std::size_t degree = 0;
  std::size_t distinct_real = 0;
  std::size_t distinct_negative = 0;
  std::size_t distinct_positive = 0;
  bool zero_is_root = false;
};
RootStatus sturm_roots_status(const UPoly& phi);

/// Isolating intervals refined by bisection; returns approximations of all distinct
/// real roots, ascending.
std::vector<double> real_roots_approx(const UPoly& p, double tol = 1e-12);

}  // namespace singular_sos
