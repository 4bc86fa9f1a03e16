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

#include "singular_sos/bounds.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>

namespace singular_sos {

unsigned bit(const Integer& d) {
  if (d < 0) throw std::invalid_argument("bit: negative argument");
  if (d == 0) return 1;
  return static_cast<unsigned>(mpz_sizeinbase(d.get_mpz_t(), 2));
}

Integer c_bound(long n, long d, long s) {
  if (d < 1 || n + s < 1 || n < 0 || s < 0) throw std::domain_error("c_bound requires d >= 1 and n + s >= 1");
  Integer base = 2 * d - 1;
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(n + s - 1));
  return out * d;
}

// ---------------------------------------------------------------- expression nodes

struct BoundExpr::Node {
  Kind kind;
  Integer value;
  std::vector<BoundExpr> kids;
};

BoundExpr::BoundExpr(const Integer& value) {
  if (value < 0) throw std::domain_error("bound expressions are non-negative");
  node_ = std::make_shared<const Node>(Node{Kind::leaf, value, {}});
}

BoundExpr::Kind BoundExpr::kind() const { return node_->kind; }
const std::vector<BoundExpr>& BoundExpr::children() const { return node_->kids; }
const Integer& BoundExpr::leaf_value() const {
  if (node_->kind != Kind::leaf) throw std::logic_error("not a leaf");
  return node_->value;
}

struct BoundOps {
  static BoundExpr make(BoundExpr::Kind k, std::vector<BoundExpr> kids) {
    return BoundExpr(std::make_shared<const BoundExpr::Node>(BoundExpr::Node{k, 0, std::move(kids)}));
  }
};

namespace {
bool is_leaf(const BoundExpr& e) { return e.kind() == BoundExpr::Kind::leaf; }
}  // namespace

BoundExpr operator+(const BoundExpr& a, const BoundExpr& b) {
  if (is_leaf(a) && is_leaf(b)) return BoundExpr(a.leaf_value() + b.leaf_value());
  if (is_leaf(b) && b.leaf_value() == 0) return a;
  if (is_leaf(a) && a.leaf_value() == 0) return b;
  return BoundOps::make(BoundExpr::Kind::sum, {a, b});
}

BoundExpr operator*(const BoundExpr& a, const BoundExpr& b) {
  if (is_leaf(a) && is_leaf(b)) return BoundExpr(a.leaf_value() * b.leaf_value());
  if (is_leaf(a) && a.leaf_value() == 0) return a;
  if (is_leaf(b) && b.leaf_value() == 0) return b;
  if (is_leaf(a) && a.leaf_value() == 1) return b;
  if (is_leaf(b) && b.leaf_value() == 1) return a;
  return BoundOps::make(BoundExpr::Kind::product, {a, b});
}

BoundExpr pow(const BoundExpr& base, const BoundExpr& exponent) {
  if (is_leaf(exponent)) {
    const Integer& e = exponent.leaf_value();
    if (e == 0) return BoundExpr(1);
    if (e == 1) return base;
    if (is_leaf(base)) {
      const Integer& b = base.leaf_value();
      if (b <= 1) return base;
      if (e.fits_ulong_p() && static_cast<double>(bit(b)) * e.get_d() <= 65536.0) {
        Integer out;
        mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), e.get_ui());
        return BoundExpr(out);
      }
    }
  }
  if (is_leaf(base) && base.leaf_value() <= 1) return base;
  return BoundOps::make(BoundExpr::Kind::power, {base, exponent});
}

BoundExpr halve(const BoundExpr& a) {
  if (is_leaf(a)) {
    if (a.leaf_value() % 2 != 0) throw std::domain_error("halve of an odd integer");
    return BoundExpr(Integer(a.leaf_value() / 2));
  }
  return BoundOps::make(BoundExpr::Kind::halve, {a});
}

BoundExpr bit(const BoundExpr& a) {
  if (is_leaf(a)) return BoundExpr(Integer(bit(a.leaf_value())));
  return BoundOps::make(BoundExpr::Kind::bit, {a});
}

BoundExpr max(const BoundExpr& a, const BoundExpr& b) {
  if (is_leaf(a) && is_leaf(b)) return a.leaf_value() >= b.leaf_value() ? a : b;
  return BoundOps::make(BoundExpr::Kind::max, {a, b});
}

namespace {

bool needs_parens(const BoundExpr& e) {
  using K = BoundExpr::Kind;
  return e.kind() == K::sum || e.kind() == K::product || e.kind() == K::power;
}

std::string wrap(const BoundExpr& e) { return needs_parens(e) ? "(" + e.to_string() + ")" : e.to_string(); }

}  // namespace

std::string BoundExpr::to_string() const {
  const auto& k = node_->kids;
  switch (node_->kind) {
    case Kind::leaf:
      return node_->value.get_str();
    case Kind::sum:
      return k[0].to_string() + " + " + k[1].to_string();
    case Kind::product: {
      auto side = [](const BoundExpr& e) {
        return e.kind() == Kind::sum ? "(" + e.to_string() + ")" : e.to_string();
      };
      return side(k[0]) + "*" + side(k[1]);
    }
    case Kind::power:
      return wrap(k[0]) + "^" + wrap(k[1]);
    case Kind::halve:
      return "1/2*" + wrap(k[0]);
    case Kind::bit:
      return "bit(" + k[0].to_string() + ")";
    case Kind::max:
      return "max{" + k[0].to_string() + ", " + k[1].to_string() + "}";
  }
  return "?";
}

// ---------------------------------------------------------------- interval machinery

namespace {

constexpr mpfr_prec_t kPrec = 128;

void ensure_exponent_range() {
  // MPFR keeps the exponent range per thread.
  thread_local bool done = false;
  if (!done) {
    mpfr_set_emax(mpfr_get_emax_max());
    mpfr_set_emin(mpfr_get_emin_min());
    done = true;
  }
}

class Mp {
 public:
  Mp() {
    mpfr_init2(v, kPrec);
    mpfr_set_zero(v, 1);
  }
  explicit Mp(double d) : Mp() { mpfr_set_d(v, d, MPFR_RNDN); }
  Mp(const Mp& o) : Mp() { mpfr_set(v, o.v, MPFR_RNDN); }
  Mp& operator=(const Mp& o) {
    if (this != &o) mpfr_set(v, o.v, MPFR_RNDN);
    return *this;
  }
  ~Mp() { mpfr_clear(v); }
  mpfr_t v;
};

struct Value {
  int level = 0;
  Mp lo, hi;
};

Mp mp_min(const Mp& a, const Mp& b) { return mpfr_cmp(a.v, b.v) <= 0 ? a : b; }
Mp mp_max(const Mp& a, const Mp& b) { return mpfr_cmp(a.v, b.v) >= 0 ? a : b; }

Value point(const Integer& z) {
  Value r;
  mpfr_set_z(r.lo.v, z.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(r.hi.v, z.get_mpz_t(), MPFR_RNDU);
  return r;
}

bool is_zero(const Value& v) { return v.level == 0 && mpfr_zero_p(v.hi.v); }
bool is_one(const Value& v) {
  return v.level == 0 && mpfr_cmp_ui(v.lo.v, 1) == 0 && mpfr_cmp_ui(v.hi.v, 1) == 0;
}

void log2_interval(Mp& lo, Mp& hi) {
  if (mpfr_sgn(hi.v) <= 0) {
    mpfr_set_inf(lo.v, -1);
    mpfr_set_inf(hi.v, -1);
    return;
  }
  if (mpfr_sgn(lo.v) <= 0) mpfr_set_inf(lo.v, -1);
  else mpfr_log2(lo.v, lo.v, MPFR_RNDD);
  mpfr_log2(hi.v, hi.v, MPFR_RNDU);
}

Value lift(Value v, int k) {
  while (v.level < k) {
    log2_interval(v.lo, v.hi);
    ++v.level;
  }
  return v;
}

/// log2 of the value, one level down.
Value log_down(const Value& v) {
  if (v.level >= 1) {
    Value r = v;
    --r.level;
    return r;
  }
  Value r = v;
  log2_interval(r.lo, r.hi);
  return r;
}

/// 2^S.
Value raise(const Value& s) {
  if (s.level == 0 && mpfr_cmp_d(s.hi.v, 1e18) < 0) {
    Value r;
    mpfr_exp2(r.lo.v, s.lo.v, MPFR_RNDD);
    mpfr_exp2(r.hi.v, s.hi.v, MPFR_RNDU);
    return r;
  }
  Value r = s;
  ++r.level;
  return r;
}

/// Perturbation bound at level k for an additive change of size <= 1 at level 1, given
/// the lower bound `lower_k` of the quantity at level k.
Mp propagated_delta(int k, const Mp& lower_k) {
  Mp delta(1.0);
  if (k <= 1) return delta;
  std::vector<Mp> lower(static_cast<std::size_t>(k + 1));
  lower[static_cast<std::size_t>(k)] = lower_k;
  for (int j = k; j > 2; --j)
    mpfr_exp2(lower[static_cast<std::size_t>(j - 1)].v, lower[static_cast<std::size_t>(j)].v, MPFR_RNDD);
  Mp ln2;
  mpfr_const_log2(ln2.v, MPFR_RNDD);
  for (int j = 2; j <= k; ++j) {
    Mp f;
    mpfr_neg(f.v, lower[static_cast<std::size_t>(j)].v, MPFR_RNDU);
    mpfr_exp2(f.v, f.v, MPFR_RNDU);
    mpfr_mul_ui(f.v, f.v, 2, MPFR_RNDU);
    mpfr_div(f.v, f.v, ln2.v, MPFR_RNDU);
    mpfr_mul(delta.v, delta.v, f.v, MPFR_RNDU);
  }
  if (mpfr_zero_p(delta.v)) mpfr_nextabove(delta.v);
  return delta;
}

Value add(const Value& a, const Value& b) {
  if (a.level == 0 && b.level == 0) {
    Value r;
    mpfr_add(r.lo.v, a.lo.v, b.lo.v, MPFR_RNDD);
    mpfr_add(r.hi.v, a.hi.v, b.hi.v, MPFR_RNDU);
    if (!mpfr_inf_p(r.hi.v)) return r;
  }
  if (is_zero(a)) return b;
  if (is_zero(b)) return a;
  int k = std::max({a.level, b.level, 1});
  Value A = lift(a, k), B = lift(b, k);
  Value r;
  r.level = k;
  r.lo = mp_max(A.lo, B.lo);
  Mp m = mp_max(A.hi, B.hi);
  Mp delta = propagated_delta(k, r.lo);
  mpfr_add(r.hi.v, m.v, delta.v, MPFR_RNDU);
  return r;
}

Value mul(const Value& a, const Value& b) {
  if (is_zero(a) || is_zero(b)) return point(0);
  if (a.level == 0 && b.level == 0) {
    Value r;
    mpfr_mul(r.lo.v, a.lo.v, b.lo.v, MPFR_RNDD);
    mpfr_mul(r.hi.v, a.hi.v, b.hi.v, MPFR_RNDU);
    if (!mpfr_inf_p(r.hi.v)) return r;
  }
  return raise(add(log_down(a), log_down(b)));
}

Value power(const Value& a, const Value& b) {
  if (is_zero(b)) return point(1);
  if (is_zero(a) || is_one(a)) return a;
  return raise(mul(b, log_down(a)));
}

Value half(const Value& a) {
  Value r = a;
  if (a.level == 0) {
    mpfr_div_ui(r.lo.v, a.lo.v, 2, MPFR_RNDD);
    mpfr_div_ui(r.hi.v, a.hi.v, 2, MPFR_RNDU);
  } else if (a.level == 1) {
    mpfr_sub_ui(r.lo.v, a.lo.v, 1, MPFR_RNDD);
    mpfr_sub_ui(r.hi.v, a.hi.v, 1, MPFR_RNDU);
  } else {
    Mp delta = propagated_delta(a.level, a.lo);
    mpfr_sub(r.lo.v, a.lo.v, delta.v, MPFR_RNDD);
  }
  return r;
}

Value bit_of(const Value& a) {
  // log2 x <= bit(x) <= log2 x + 1 for x >= 1.
  Value x = log_down(a);
  Value unit;
  mpfr_set_ui(unit.lo.v, 0, MPFR_RNDD);
  mpfr_set_ui(unit.hi.v, 1, MPFR_RNDU);
  Value r = add(x, unit);
  if (r.level == 0 && mpfr_cmp_ui(r.lo.v, 1) < 0) mpfr_set_ui(r.lo.v, 1, MPFR_RNDD);
  return r;
}

int compare_values(const Value& a, const Value& b, int min_level) {
  int k = std::max({a.level, b.level, min_level});
  Value A = lift(a, k), B = lift(b, k);
  if (mpfr_cmp(A.hi.v, B.lo.v) < 0) return -1;
  if (mpfr_cmp(A.lo.v, B.hi.v) > 0) return 1;
  return 0;  // undecided
}

Value value_max(const Value& a, const Value& b) {
  int c = compare_values(a, b, 0);
  if (c > 0) return a;
  if (c < 0) return b;
  int k = std::max(a.level, b.level);
  Value A = lift(a, k), B = lift(b, k);
  Value r;
  r.level = k;
  r.lo = mp_max(A.lo, B.lo);
  r.hi = mp_max(A.hi, B.hi);
  return r;
}

struct MagnitudeContext {
  bool fold_small = true;
};

std::optional<Integer> exact_rec(const BoundExpr& e, double max_bits);

Value mag(const BoundExpr& e, const MagnitudeContext& ctx) {
  ensure_exponent_range();
  using K = BoundExpr::Kind;
  const auto& k = e.children();
  Value r;
  switch (e.kind()) {
    case K::leaf:
      return point(e.leaf_value());
    case K::sum:
      r = add(mag(k[0], ctx), mag(k[1], ctx));
      break;
    case K::product:
      r = mul(mag(k[0], ctx), mag(k[1], ctx));
      break;
    case K::power:
      r = power(mag(k[0], ctx), mag(k[1], ctx));
      break;
    case K::halve:
      r = half(mag(k[0], ctx));
      break;
    case K::bit:
      r = bit_of(mag(k[0], ctx));
      break;
    case K::max:
      r = value_max(mag(k[0], ctx), mag(k[1], ctx));
      break;
  }
  if (ctx.fold_small && r.level == 0 && mpfr_cmp_d(r.hi.v, 1e300) < 0) {
    if (auto z = exact_rec(e, 4096)) return point(*z);
  }
  return r;
}

/// Upper bound on log2 of the value, or +inf when it does not fit in a double.
double log2_upper(const Value& v) {
  if (v.level == 0) {
    if (mpfr_sgn(v.hi.v) <= 0) return 0;
    Mp t;
    mpfr_log2(t.v, v.hi.v, MPFR_RNDU);
    return mpfr_get_d(t.v, MPFR_RNDU);
  }
  if (v.level == 1) return mpfr_get_d(v.hi.v, MPFR_RNDU);
  return INFINITY;
}

std::optional<Integer> exact_rec(const BoundExpr& e, double max_bits) {
  using K = BoundExpr::Kind;
  const auto& k = e.children();
  switch (e.kind()) {
    case K::leaf:
      return e.leaf_value();
    case K::sum: {
      auto a = exact_rec(k[0], max_bits);
      auto b = a ? exact_rec(k[1], max_bits) : std::nullopt;
      if (!a || !b) return std::nullopt;
      return Integer(*a + *b);
    }
    case K::product: {
      auto a = exact_rec(k[0], max_bits);
      if (a && *a == 0) return Integer(0);
      auto b = exact_rec(k[1], max_bits);
      if (b && *b == 0) return Integer(0);
      if (!a || !b) return std::nullopt;
      return Integer(*a * *b);
    }
    case K::power: {
      auto b = exact_rec(k[0], max_bits);
      if (!b) return std::nullopt;
      if (*b <= 1) return *b;
      auto x = exact_rec(k[1], max_bits);
      if (!x) return std::nullopt;
      if (*x == 0) return Integer(1);
      if (!x->fits_ulong_p() || static_cast<double>(bit(*b)) * x->get_d() > max_bits + 64) return std::nullopt;
      Integer out;
      mpz_pow_ui(out.get_mpz_t(), b->get_mpz_t(), x->get_ui());
      return out;
    }
    case K::halve: {
      auto a = exact_rec(k[0], max_bits);
      if (!a) return std::nullopt;
      if (*a % 2 != 0) throw std::domain_error("halve of an odd integer");
      return Integer(*a / 2);
    }
    case K::bit: {
      if (auto a = exact_rec(k[0], max_bits)) return Integer(bit(*a));
      // bit(x) = floor(log2 x) + 1 is exact when the log enclosure pins the floor.
      Value v = mag(k[0], MagnitudeContext{false});
      Value l = log_down(v);
      if (l.level != 0) return std::nullopt;
      Mp flo, fhi;
      mpfr_floor(flo.v, l.lo.v);
      mpfr_floor(fhi.v, l.hi.v);
      if (!mpfr_equal_p(flo.v, fhi.v) || mpfr_inf_p(flo.v)) return std::nullopt;
      Integer z;
      mpfr_get_z(z.get_mpz_t(), flo.v, MPFR_RNDN);
      return Integer(z + 1);
    }
    case K::max: {
      auto a = exact_rec(k[0], max_bits);
      auto b = exact_rec(k[1], max_bits);
      if (a && b) return *a >= *b ? *a : *b;
      return std::nullopt;
    }
  }
  return std::nullopt;
}

std::string fmt(const Mp& x, bool up) {
  char* s = nullptr;
  mpfr_asprintf(&s, up ? "%.15RUg" : "%.15RDg", x.v);
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

Magnitude to_magnitude(const Value& v) { return Magnitude{v.level, fmt(v.lo, false), fmt(v.hi, true)}; }

}  // namespace

std::optional<Integer> evaluate_exact(const BoundExpr& e, double max_digits) {
  ensure_exponent_range();
  Value v = mag(e, MagnitudeContext{true});
  double max_bits = max_digits * std::log2(10.0);
  if (log2_upper(v) > max_bits + 4) return std::nullopt;
  return exact_rec(e, max_bits);
}

Magnitude magnitude(const BoundExpr& e) { return to_magnitude(mag(e, MagnitudeContext{true})); }

DigitEstimate digit_estimate(const BoundExpr& e) {
  ensure_exponent_range();
  DigitEstimate d;
  if (auto z = evaluate_exact(e)) {
    d.exact = true;
    d.digits = std::to_string(*z == 0 ? 1 : z->get_str().size());
    d.digits_lo = d.digits_hi = d.digits;
    return d;
  }
  Value v = mag(e, MagnitudeContext{true});
  Value l = log_down(v);  // log2 x
  Mp l10;
  if (l.level == 0) {
    // digits = floor(log10 x) + 1 with log10 x = log2 x * log10 2
    Mp lo, hi, c;
    mpfr_set_ui(c.v, 2, MPFR_RNDN);
    mpfr_log10(c.v, c.v, MPFR_RNDD);
    mpfr_mul(lo.v, l.lo.v, c.v, MPFR_RNDD);
    mpfr_set_ui(c.v, 2, MPFR_RNDN);
    mpfr_log10(c.v, c.v, MPFR_RNDU);
    mpfr_mul(hi.v, l.hi.v, c.v, MPFR_RNDU);
    mpfr_floor(lo.v, lo.v);
    mpfr_floor(hi.v, hi.v);
    mpfr_add_ui(lo.v, lo.v, 1, MPFR_RNDD);
    mpfr_add_ui(hi.v, hi.v, 1, MPFR_RNDU);
    d.digits_lo = fmt(lo, false);
    d.digits_hi = fmt(hi, true);
    Mp a = lo, b = hi;
    mpfr_log10(a.v, a.v, MPFR_RNDD);
    mpfr_log10(b.v, b.v, MPFR_RNDU);
    d.log10_digits_lo = fmt(a, false);
    d.log10_digits_hi = fmt(b, true);
    return d;
  }
  if (l.level == 1) {
    // log10(digits) ~ log10(log2 x) + log10(log10 2), with log2 log2 x = [lo, hi].
    Mp c, lo, hi;
    mpfr_set_ui(c.v, 2, MPFR_RNDN);
    mpfr_log10(c.v, c.v, MPFR_RNDD);
    mpfr_mul(lo.v, l.lo.v, c.v, MPFR_RNDD);
    mpfr_set_ui(c.v, 2, MPFR_RNDN);
    mpfr_log10(c.v, c.v, MPFR_RNDU);
    mpfr_mul(hi.v, l.hi.v, c.v, MPFR_RNDU);
    Mp adj;
    mpfr_set_ui(adj.v, 2, MPFR_RNDN);
    mpfr_log10(adj.v, adj.v, MPFR_RNDD);
    mpfr_log10(adj.v, adj.v, MPFR_RNDD);
    mpfr_add(lo.v, lo.v, adj.v, MPFR_RNDD);
    // +1 digit and floor only raise the count by a factor below 2 for huge counts.
    mpfr_add_d(hi.v, hi.v, 0.31, MPFR_RNDU);
    d.log10_digits_lo = fmt(lo, false);
    d.log10_digits_hi = fmt(hi, true);
    return d;
  }
  return d;
}

int compare(const BoundExpr& a, const BoundExpr& b, CompareMode mode) {
  ensure_exponent_range();
  if (mode == CompareMode::automatic) {
    auto ea = evaluate_exact(a), eb = ea ? evaluate_exact(b) : std::nullopt;
    if (ea && eb) return *ea < *eb ? -1 : (*ea > *eb ? 1 : 0);
  }
  MagnitudeContext ctx{mode == CompareMode::automatic};
  Value va = mag(a, ctx), vb = mag(b, ctx);
  int c = compare_values(va, vb, mode == CompareMode::force_log ? 2 : 0);
  if (c != 0) return c;
  auto ea = evaluate_exact(a), eb = evaluate_exact(b);
  if (ea && eb) return *ea < *eb ? -1 : (*ea > *eb ? 1 : 0);
  throw IncomparableError("bound comparison undecided: " + a.to_string() + " vs " + b.to_string());
}

// ---------------------------------------------------------------- formulas

BoundExpr b_exponent(long n, const BoundExpr& d, const BoundExpr& s) {
  if (n < 0) throw std::domain_error("b_bound requires n >= 0");
  BoundExpr D = max(BoundExpr(2), d);
  BoundExpr four_n = pow(BoundExpr(4), BoundExpr(n));
  BoundExpr two_n = pow(BoundExpr(2), BoundExpr(n));
  BoundExpr sixteen_n = pow(BoundExpr(16), BoundExpr(n));
  return pow(BoundExpr(2), pow(D, four_n)) + pow(s, two_n) * pow(D, sixteen_n * bit(d));
}

BoundExpr b_bound(long n, const BoundExpr& d, const BoundExpr& s) {
  return pow(BoundExpr(2), pow(BoundExpr(2), b_exponent(n, d, s)));
}

OrderCase parse_order_case(const std::string& name) {
  if (name == "kkt") return OrderCase::kkt;
  if (name == "finite") return OrderCase::finite;
  if (name == "rep-kkt-w") return OrderCase::rep_kkt_w;
  if (name == "rep-finite-w") return OrderCase::rep_finite_w;
  if (name == "alg-xi-kkt") return OrderCase::alg_xi_kkt;
  if (name == "alg-xi-finite") return OrderCase::alg_xi_finite;
  throw std::invalid_argument("unknown bound case '" + name + "'");
}

std::string to_string(OrderCase c) {
  switch (c) {
    case OrderCase::kkt:
      return "kkt";
    case OrderCase::finite:
      return "finite";
    case OrderCase::rep_kkt_w:
      return "rep-kkt-w";
    case OrderCase::rep_finite_w:
      return "rep-finite-w";
    case OrderCase::alg_xi_kkt:
      return "alg-xi-kkt";
    case OrderCase::alg_xi_finite:
      return "alg-xi-finite";
  }
  return "?";
}

namespace {

BoundExpr resolved_max(const BoundExpr& a, const BoundExpr& b) { return compare(a, b) >= 0 ? a : b; }

/// max{d (c(N, d, S) - 1), b(N, d, T)/2 + d}
BoundExpr w_formula(long N, long d, long S, long T) {
  BoundExpr left = BoundExpr(Integer(d * (c_bound(N, d, S) - 1)));
  BoundExpr right = halve(b_bound(N, BoundExpr(d), BoundExpr(T))) + BoundExpr(d);
  return resolved_max(left, right);
}

/// b(N, 2w, T)/2 + d
BoundExpr r_formula(long N, const BoundExpr& w, long T, long d) {
  return halve(b_bound(N, BoundExpr(2) * w, BoundExpr(T))) + BoundExpr(d);
}

}  // namespace

BoundExpr theoretical_order(OrderCase c, const OrderParams& p) {
  const long n = p.n, l = p.l, d = p.d;
  if (n < 0 || l < 0 || d < 1) throw std::domain_error("theoretical_order requires n, l >= 0 and d >= 1");
  switch (c) {
    case OrderCase::rep_kkt_w:
    case OrderCase::alg_xi_kkt: {
      BoundExpr w = w_formula(n + l, d, n + l, l + n + 1);
      if (c == OrderCase::rep_kkt_w) return w;
      return r_formula(n + l, w, l + n + 1, d);
    }
    case OrderCase::kkt:
      return r_formula(n + l, w_formula(n + l, d, n + l, l + n + 1), l + n + 1, d);
    case OrderCase::rep_finite_w:
    case OrderCase::alg_xi_finite: {
      BoundExpr w = w_formula(n, d, l, l + 1);
      if (c == OrderCase::rep_finite_w) return w;
      return r_formula(n, w, l + 1, d);
    }
    case OrderCase::finite:
      return r_formula(n, w_formula(n, d, l, l + 1), l + 1, d);
  }
  throw std::invalid_argument("unknown bound case");
}

}  // namespace singular_sos
