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
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <vector>

#include "singular_sos/polynomial.hpp"

namespace singular_sos {

enum class OrderKind { grevlex, grlex, lex };

/// Monomial order over a fixed variable ranking. `ranking[0]` is the largest variable;
/// an empty ranking means x1 > x2 > ... > xn.
class MonomialOrder {
 public:
  MonomialOrder() = default;
  explicit MonomialOrder(OrderKind kind, std::vector<std::size_t> ranking = {})
      : kind_(kind), ranking_(std::move(ranking)) {}

  OrderKind kind() const { return kind_; }
  const std::vector<std::size_t>& ranking() const { return ranking_; }

  /// Three-way comparison: positive when a > b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  /// Lex order with `first` ranked above every other variable (elimination order).
  static MonomialOrder eliminating(std::size_t nvars, std::size_t first);

 private:
  std::size_t var_at(std::size_t rank, std::size_t n) const { return ranking_.empty() ? rank : ranking_[rank]; }

  OrderKind kind_ = OrderKind::grevlex;
  std::vector<std::size_t> ranking_;
};

class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GroebnerOptions {
  std::size_t max_pairs = 1000000;
};

/// Polynomial ideal with a lazily computed, cached reduced Groebner basis. Copies share
/// the cache; the cache is filled at most once and is safe to read concurrently.
class Ideal {
 public:
  Ideal() : Ideal(0, {}) {}
  Ideal(std::size_t nvars, std::vector<Polynomial> generators, MonomialOrder order = MonomialOrder(),
        GroebnerOptions options = GroebnerOptions());

  std::size_t nvars() const { return nvars_; }
  const std::vector<Polynomial>& generators() const { return generators_; }
  const MonomialOrder& order() const { return order_; }
  const GroebnerOptions& options() const { return options_; }

  const std::vector<Polynomial>& basis() const;

  /// Same generators under a different order (fresh cache).
  Ideal with_order(const MonomialOrder& order) const { return Ideal(nvars_, generators_, order, options_); }
  /// Ideal generated by these generators plus `extra`.
  Ideal extended_by(const std::vector<Polynomial>& extra) const;

 private:
  struct Cache {
    std::once_flag once;
    std::vector<Polynomial> basis;
  };

  std::size_t nvars_;
  std::vector<Polynomial> generators_;
  MonomialOrder order_;
  GroebnerOptions options_;
  std::shared_ptr<Cache> cache_;
};

/// Reduced Groebner basis of I (sorted by ascending leading monomial). Throws
/// ResourceLimitError when the pair budget is exhausted.
std::vector<Polynomial> groebner_basis(const Ideal& I);
std::vector<Polynomial> groebner_basis(const std::vector<Polynomial>& gens, std::size_t nvars,
                                       const MonomialOrder& order, const GroebnerOptions& options = {});

Monomial leading_monomial(const Polynomial& p, const MonomialOrder& order);
Rational leading_coefficient(const Polynomial& p, const MonomialOrder& order);

/// Remainder of p modulo the reduced basis of I.
Polynomial normal_form(const Polynomial& p, const Ideal& I);
/// Remainder of full reduction by an arbitrary divisor list (not necessarily a basis).
Polynomial reduce(const Polynomial& p, const std::vector<Polynomial>& divisors, const MonomialOrder& order);

bool ideal_membership(const Polynomial& p, const Ideal& I);
/// True iff 1 is in I.
bool is_trivial(const Ideal& I);
/// Krull dimension, or nullopt for the unit ideal (empty variety).
std::optional<int> ideal_dimension(const Ideal& I);
/// True iff I is a subset of J, i.e. every generator of I reduces to zero modulo J.
/// This certifies that the variety of I contains the variety of J.
bool ideal_contains(const Ideal& I, const Ideal& J);
/// Equal ideals (same reduced basis under I's order).
bool same_ideal(const Ideal& I, const Ideal& J);

/// Buchberger criterion check: every S-polynomial of `basis` reduces to zero.
bool satisfies_buchberger_criterion(const std::vector<Polynomial>& basis, const MonomialOrder& order);

/// Quotient when q divides p exactly.
std::optional<Polynomial> exact_divide(const Polynomial& p, const Polynomial& q);
/// Monic (under grevlex) multivariate gcd over Q; gcd(0, 0) = 0.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

}  // namespace singular_sos
