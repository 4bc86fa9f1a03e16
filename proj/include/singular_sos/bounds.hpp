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

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "singular_sos/rational.hpp"

namespace singular_sos {

/// Number of bits of d; bit(0) = 1.
unsigned bit(const Integer& d);

/// d (2d - 1)^(n + s - 1). Requires d >= 1 and n + s >= 1.
Integer c_bound(long n, long d, long s);

class IncomparableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Guaranteed enclosure of a positive quantity x at iterated-log level k:
/// log2^(k)(x) lies in [lo, hi]. Bounds are decimal strings of 128-bit MPFR values.
struct Magnitude {
  int level = 0;
  std::string lo;
  std::string hi;
};

/// Symbolic integer expression built from big-integer leaves. Immutable; copies share
/// nodes.
class BoundExpr {
 public:
  enum class Kind { leaf, sum, product, power, halve, bit, max };

  BoundExpr(const Integer& value);  // NOLINT: implicit from integers is intended
  BoundExpr(long value) : BoundExpr(Integer(value)) {}

  Kind kind() const;
  const std::vector<BoundExpr>& children() const;
  /// Leaf value; throws for other kinds.
  const Integer& leaf_value() const;

  friend BoundExpr operator+(const BoundExpr& a, const BoundExpr& b);
  friend BoundExpr operator*(const BoundExpr& a, const BoundExpr& b);
  friend BoundExpr pow(const BoundExpr& base, const BoundExpr& exponent);
  friend BoundExpr halve(const BoundExpr& a);
  friend BoundExpr bit(const BoundExpr& a);
  friend BoundExpr max(const BoundExpr& a, const BoundExpr& b);

  /// Infix rendering, e.g. "2^(2^(65536 + 17179869184))".
  std::string to_string() const;

  struct Node;

 private:
  explicit BoundExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
  friend struct BoundOps;
};

/// Exact value when it has at most `max_digits` decimal digits, nullopt otherwise.
std::optional<Integer> evaluate_exact(const BoundExpr& e, double max_digits = 1e6);

/// Enclosure at the lowest iterated-log level that does not overflow.
Magnitude magnitude(const BoundExpr& e);

/// Decimal-digit count of the value: exact when evaluable, otherwise an enclosure of
/// log10(digits) or of the digit count itself.
struct DigitEstimate {
  bool exact = false;
  std::string digits;          ///< exact count, or empty
  std::string digits_lo;       ///< enclosure of the digit count (level <= 1 values)
  std::string digits_hi;
  std::string log10_digits_lo; ///< enclosure of log10(digit count) (deeper towers)
  std::string log10_digits_hi;
};
DigitEstimate digit_estimate(const BoundExpr& e);

enum class CompareMode { automatic, force_log };

/// Three-way comparison (-1, 0, 1). In force_log mode the iterated-log enclosures decide
/// and only ties fall back to exact evaluation. Throws IncomparableError when undecided.
int compare(const BoundExpr& a, const BoundExpr& b, CompareMode mode = CompareMode::automatic);

/// Inner exponent sum 2^(D^(4^n)) + s^(2^n) D^(16^n bit(d)) with D = max{2, d}.
BoundExpr b_exponent(long n, const BoundExpr& d, const BoundExpr& s);
/// b(n, d, s) = 2^(2^(inner exponent)).
BoundExpr b_bound(long n, const BoundExpr& d, const BoundExpr& s);

enum class OrderCase { kkt, finite, rep_kkt_w, rep_finite_w, alg_xi_kkt, alg_xi_finite };

/// Parses "kkt", "finite", "rep-kkt-w", "rep-finite-w", "alg-xi-kkt", "alg-xi-finite".
OrderCase parse_order_case(const std::string& name);
std::string to_string(OrderCase c);

/// n variables, l generators (r for the alg-* cases), degree d.
struct OrderParams {
  long n = 0;
  long l = 0;
  long d = 2;
};

/// The degree bound for the chosen case; max{...} resolved by guaranteed comparison.
BoundExpr theoretical_order(OrderCase c, const OrderParams& p);

}  // namespace singular_sos
