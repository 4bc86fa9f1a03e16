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

#include "singular_sos/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace singular_sos {

// ---------------------------------------------------------------- Monomial

unsigned Monomial::degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0u); }

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::extended(std::size_t nvars) const {
  Monomial m = *this;
  m.exps_.resize(nvars, 0);
  return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m = a;
  for (std::size_t i = 0; i < m.exps_.size(); ++i) m.exps_[i] += b.exps_[i];
  return m;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial m = a;
  for (std::size_t i = 0; i < m.exps_.size(); ++i) m.exps_[i] -= b.exps_[i];
  return m;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial m = a;
  for (std::size_t i = 0; i < m.exps_.size(); ++i) m.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
  return m;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  Monomial m = a;
  for (std::size_t i = 0; i < m.exps_.size(); ++i) m.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
  return m;
}

bool graded_lex_greater(const Monomial& a, const Monomial& b) {
  unsigned da = a.degree(), db = b.degree();
  if (da != db) return da > db;
  return a.exponents() > b.exponents();
}

// ---------------------------------------------------------------- Polynomial

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
  Polynomial p(nvars);
  p.add_term(Monomial(nvars), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t var) {
  if (var >= nvars) throw std::out_of_range("variable index out of range");
  Polynomial p(nvars);
  p.add_term(Monomial::unit(nvars, var), 1);
  return p;
}

Polynomial Polynomial::term(const Monomial& m, const Rational& c) {
  Polynomial p(m.nvars());
  p.add_term(m, c);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.degree()));
  return d;
}

int Polynomial::degree_in(std::size_t var) const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m[var]));
  return d;
}

Rational Polynomial::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::vector<std::size_t> Polynomial::support() const {
  std::vector<bool> used(nvars_, false);
  for (const auto& [m, c] : terms_)
    for (std::size_t i = 0; i < nvars_; ++i)
      if (m[i] > 0) used[i] = true;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < nvars_; ++i)
    if (used[i]) out.push_back(i);
  return out;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (m.nvars() != nvars_) throw std::invalid_argument("monomial/ring size mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Polynomial::check_ring(const Polynomial& other) const {
  if (other.nvars_ != nvars_)
    throw std::invalid_argument("polynomials live in rings of different sizes (" +
                                std::to_string(nvars_) + " vs " + std::to_string(other.nvars_) + ")");
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_ring(other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_ring(other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_ring(b);
  Polynomial r(a.nvars_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) { return *this = *this * other; }

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [m, v] : r.terms_) v = -v;
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(nvars_, 1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  Polynomial r(nvars_);
  for (const auto& [m, c] : terms_) {
    if (m[var] == 0) continue;
    Monomial d = m;
    d[var] -= 1;
    r.add_term(d, c * m[var]);
  }
  return r;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != nvars_)
    throw std::invalid_argument("evaluation point has " + std::to_string(point.size()) +
                                " coordinates, expected " + std::to_string(nvars_));
  Rational sum = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < nvars_; ++i)
      if (m[i] > 0) t *= singular_sos::pow(point[i], m[i]);
    sum += t;
  }
  return sum;
}

double Polynomial::evaluate(std::span<const double> point) const {
  if (point.size() != nvars_) throw std::invalid_argument("evaluation point dimension mismatch");
  double sum = 0;
  for (const auto& [m, c] : terms_) {
    double t = c.get_d();
    for (std::size_t i = 0; i < nvars_; ++i)
      for (unsigned k = 0; k < m[i]; ++k) t *= point[i];
    sum += t;
  }
  return sum;
}

Polynomial Polynomial::extended(std::size_t nvars) const {
  if (nvars < nvars_) throw std::invalid_argument("cannot shrink a polynomial ring");
  Polynomial r(nvars);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m.extended(nvars), c);
  return r;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
  if (images.size() != nvars_) throw std::invalid_argument("substitution needs one image per variable");
  std::size_t target = images.empty() ? 0 : images.front().nvars();
  for (const auto& im : images)
    if (im.nvars() != target) throw std::invalid_argument("substitution images in different rings");
  // Cache powers of each image.
  std::vector<std::vector<Polynomial>> powers(nvars_);
  Polynomial r(target);
  for (const auto& [m, c] : terms_) {
    Polynomial t = constant(target, c);
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (m[i] == 0) continue;
      auto& cache = powers[i];
      if (cache.empty()) cache.push_back(constant(target, 1));
      while (cache.size() <= m[i]) cache.push_back(cache.back() * images[i]);
      t *= cache[m[i]];
    }
    r += t;
  }
  return r;
}

// ---------------------------------------------------------------- parsing

namespace {

class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string>& vars) : text_(text), vars_(vars) {}

  Polynomial parse() {
    skip_ws();
    if (at_end()) throw ParseError("empty expression", pos_);
    Polynomial p = expr();
    skip_ws();
    if (!at_end()) throw ParseError(std::string("unexpected character '") + text_[pos_] + "'", pos_);
    return p;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_ws();
    if (!at_end() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    Polynomial acc = term();
    while (true) {
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else return acc;
    }
  }

  Polynomial term() {
    Polynomial acc = unary();
    while (true) {
      skip_ws();
      if (!at_end() && text_[pos_] == '*' && !(pos_ + 1 < text_.size() && text_[pos_ + 1] == '*')) {
        ++pos_;
        acc *= unary();
      } else if (accept('/')) {
        std::size_t where = pos_;
        Polynomial d = unary();
        if (!d.is_constant() || d.is_zero())
          throw ParseError("division is only allowed by a nonzero constant", where);
        acc *= Rational(1 / d.constant_term());
      } else {
        return acc;
      }
    }
  }

  Polynomial unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Polynomial power() {
    Polynomial base = primary();
    skip_ws();
    bool caret = accept('^');
    if (!caret && pos_ + 1 < text_.size() && text_[pos_] == '*' && text_[pos_ + 1] == '*') {
      pos_ += 2;
      caret = true;
    }
    if (!caret) return base;
    skip_ws();
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected a non-negative integer exponent", start);
    unsigned long e = std::stoul(std::string(text_.substr(start, pos_ - start)));
    if (e > 10000) throw ParseError("exponent too large", start);
    return base.pow(static_cast<unsigned>(e));
  }

  Polynomial primary() {
    skip_ws();
    if (at_end()) throw ParseError("unexpected end of expression", pos_);
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      auto it = std::find(vars_.begin(), vars_.end(), name);
      if (it == vars_.end()) throw ParseError("unknown variable '" + name + "'", start);
      return Polynomial::variable(vars_.size(), static_cast<std::size_t>(it - vars_.begin()));
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  Polynomial number() {
    std::size_t start = pos_;
    std::string digits;
    std::string frac;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) digits += text_[pos_++];
    if (!at_end() && text_[pos_] == '.') {
      ++pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) frac += text_[pos_++];
    }
    if (digits.empty() && frac.empty()) throw ParseError("malformed number", start);
    Integer num(digits.empty() ? std::string("0") : digits);
    Integer den = 1;
    for (char f : frac) {
      num = num * 10 + (f - '0');
      den *= 10;
    }
    Rational q(num, den);
    q.canonicalize();
    return Polynomial::constant(vars_.size(), q);
  }

  std::string_view text_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<std::string> default_names(std::size_t nvars) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < nvars; ++i) names.push_back("x" + std::to_string(i + 1));
  return names;
}

Polynomial poly_parse(std::string_view text, const std::vector<std::string>& vars) {
  return Parser(text, vars).parse();
}

std::string poly_format(const Polynomial& p, const std::vector<std::string>& vars) {
  if (vars.size() != p.nvars()) throw std::invalid_argument("name list does not match ring size");
  if (p.is_zero()) return "0";
  std::vector<std::pair<Monomial, Rational>> terms(p.terms().begin(), p.terms().end());
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return graded_lex_greater(a.first, b.first); });
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (m.is_one() || mag != 1) {
      out << to_string(mag);
      wrote = true;
    }
    for (std::size_t i = 0; i < m.nvars(); ++i) {
      if (m[i] == 0) continue;
      if (wrote) out << "*";
      out << vars[i];
      if (m[i] > 1) out << "^" << m[i];
      wrote = true;
    }
  }
  return out.str();
}

std::string poly_format(const Polynomial& p) { return poly_format(p, default_names(p.nvars())); }

// ---------------------------------------------------------------- calculus

std::vector<Polynomial> gradient(const Polynomial& p) {
  std::vector<Polynomial> g;
  g.reserve(p.nvars());
  for (std::size_t i = 0; i < p.nvars(); ++i) g.push_back(p.derivative(i));
  return g;
}

PolyMatrix jacobian(const std::vector<Polynomial>& h) {
  if (h.empty()) throw std::invalid_argument("jacobian of an empty system");
  return jacobian(h, h.front().nvars());
}

PolyMatrix jacobian(const std::vector<Polynomial>& h, std::size_t nvars) {
  PolyMatrix J(nvars, h.size(), nvars);
  for (std::size_t j = 0; j < h.size(); ++j) {
    if (h[j].nvars() != nvars) throw std::invalid_argument("jacobian: mixed rings");
    for (std::size_t t = 0; t < nvars; ++t) J(t, j) = h[j].derivative(t);
  }
  return J;
}

Polynomial determinant(const PolyMatrix& m) {
  if (m.rows != m.cols) throw std::invalid_argument("determinant of a non-square matrix");
  std::size_t n = m.rows;
  std::size_t nv = m.entries.empty() ? 0 : m.entries.front().nvars();
  if (n == 0) return Polynomial::constant(nv, 1);
  if (n > 20) throw std::invalid_argument("determinant: matrix too large for subset expansion");
  // dets[mask] = det of rows 0..popcount(mask)-1 restricted to the columns in mask.
  std::vector<Polynomial> dets(std::size_t(1) << n, Polynomial(nv));
  dets[0] = Polynomial::constant(nv, 1);
  for (std::size_t mask = 1; mask < dets.size(); ++mask) {
    std::size_t row = static_cast<std::size_t>(__builtin_popcountll(mask)) - 1;
    Polynomial acc(nv);
    for (std::size_t c = 0; c < n; ++c) {
      if (!(mask & (std::size_t(1) << c))) continue;
      const Polynomial& e = m(row, c);
      std::size_t rest = mask & ~(std::size_t(1) << c);
      // Expansion along the last row: sign is (-1)^(number of selected columns after c).
      int higher = __builtin_popcountll(mask >> (c + 1));
      if (!e.is_zero() && !dets[rest].is_zero()) {
        Polynomial t = e * dets[rest];
        if (higher % 2) acc -= t;
        else acc += t;
      }
    }
    dets[mask] = std::move(acc);
  }
  return dets.back();
}

std::vector<std::vector<std::size_t>> k_subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    out.push_back(idx);
    if (k == 0) break;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

std::vector<Polynomial> minors(const std::vector<Polynomial>& h, std::size_t t) {
  if (h.empty()) throw std::invalid_argument("minors of an empty system");
  return minors(h, t, h.front().nvars());
}

std::vector<Polynomial> minors(const std::vector<Polynomial>& h, std::size_t t, std::size_t nvars) {
  if (t == 0 || t > std::min(nvars, h.size()))
    throw std::out_of_range("minor size " + std::to_string(t) + " out of range for a " +
                            std::to_string(nvars) + "x" + std::to_string(h.size()) + " Jacobian");
  PolyMatrix J = jacobian(h, nvars);
  auto rows = k_subsets(nvars, t);
  auto cols = k_subsets(h.size(), t);
  std::vector<Polynomial> out;
  out.reserve(rows.size() * cols.size());
  for (const auto& rs : rows) {
    for (const auto& cs : cols) {
      PolyMatrix sub(t, t, nvars);
      for (std::size_t a = 0; a < t; ++a)
        for (std::size_t b = 0; b < t; ++b) sub(a, b) = J(rs[a], cs[b]);
      out.push_back(determinant(sub));
    }
  }
  return out;
}

}  // namespace singular_sos
