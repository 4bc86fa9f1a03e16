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

#include <compare>
#include <cstddef>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "singular_sos/rational.hpp"

namespace singular_sos {

/// Exponent vector x^alpha. Comparison operators give plain lexicographic order on
/// exponents; monomial orders used by Groebner bases live in ideal.hpp.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<unsigned> exps) : exps_(std::move(exps)) {}

  static Monomial unit(std::size_t nvars, std::size_t var, unsigned power = 1) {
    Monomial m(nvars);
    m.exps_.at(var) = power;
    return m;
  }

  std::size_t nvars() const { return exps_.size(); }
  unsigned operator[](std::size_t i) const { return exps_[i]; }
  unsigned& operator[](std::size_t i) { return exps_[i]; }
  const std::vector<unsigned>& exponents() const { return exps_; }

  unsigned degree() const;
  bool is_one() const { return degree() == 0; }
  bool divides(const Monomial& other) const;
  /// Appends zero exponents up to `nvars`.
  Monomial extended(std::size_t nvars) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Exact quotient; requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend Monomial gcd(const Monomial& a, const Monomial& b);

  auto operator<=>(const Monomial&) const = default;
  bool operator==(const Monomial&) const = default;

 private:
  std::vector<unsigned> exps_;
};

/// Graded-lex "greater" comparison used for canonical printing and monomial bases.
bool graded_lex_greater(const Monomial& a, const Monomial& b);

/// Sparse multivariate polynomial with exact rational coefficients. Never stores zeros.
class Polynomial {
 public:
  using Terms = std::map<Monomial, Rational>;

  Polynomial() = default;
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, const Rational& c);
  static Polynomial variable(std::size_t nvars, std::size_t var);
  static Polynomial term(const Monomial& m, const Rational& c);

  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  int degree_in(std::size_t var) const;
  Rational coeff(const Monomial& m) const;
  Rational constant_term() const { return coeff(Monomial(nvars_)); }
  /// Variables that occur with a positive exponent.
  std::vector<std::size_t> support() const;

  /// Adds c*m to the polynomial (erasing on cancellation).
  void add_term(const Monomial& m, const Rational& c);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  Polynomial operator-() const;

  Polynomial pow(unsigned e) const;
  Polynomial derivative(std::size_t var) const;

  Rational evaluate(std::span<const Rational> point) const;
  double evaluate(std::span<const double> point) const;

  /// Same polynomial viewed in a larger ring (new variables appended).
  Polynomial extended(std::size_t nvars) const;
  /// Replaces x_i by images[i]; all images must share one ring.
  Polynomial substitute(const std::vector<Polynomial>& images) const;

  bool operator==(const Polynomial& other) const = default;

 private:
  void check_ring(const Polynomial& other) const;

  std::size_t nvars_ = 0;
  Terms terms_;
};

/// Rectangular grid of polynomials (row-major).
struct PolyMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Polynomial> entries;

  PolyMatrix() = default;
  PolyMatrix(std::size_t r, std::size_t c, std::size_t nvars)
      : rows(r), cols(c), entries(r * c, Polynomial(nvars)) {}

  Polynomial& operator()(std::size_t r, std::size_t c) { return entries[r * cols + c]; }
  const Polynomial& operator()(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Default variable names x1..xn.
std::vector<std::string> default_names(std::size_t nvars);

/// Parses an expression over `vars` using + - * / ^, parentheses, integer and decimal
/// literals. Division is only allowed by nonzero constants.
Polynomial poly_parse(std::string_view text, const std::vector<std::string>& vars);

/// Canonical form: terms by descending graded-lex order, e.g. "x1^3 - 3/2*x1*x2 + 1".
std::string poly_format(const Polynomial& p, const std::vector<std::string>& vars);
std::string poly_format(const Polynomial& p);

std::vector<Polynomial> gradient(const Polynomial& p);

/// n x l matrix with entry (t, j) = d h_j / d x_t.
PolyMatrix jacobian(const std::vector<Polynomial>& h);
PolyMatrix jacobian(const std::vector<Polynomial>& h, std::size_t nvars);

/// Determinant by expansion over column subsets; the matrix must be square.
Polynomial determinant(const PolyMatrix& m);

/// All t x t minors of jacobian(h): row subsets major, column subsets minor, both
/// enumerated in lexicographic order.
std::vector<Polynomial> minors(const std::vector<Polynomial>& h, std::size_t t);
std::vector<Polynomial> minors(const std::vector<Polynomial>& h, std::size_t t, std::size_t nvars);

/// Lexicographically ordered k-subsets of {0..n-1}.
std::vector<std::vector<std::size_t>> k_subsets(std::size_t n, std::size_t k);

}  // namespace singular_sos
