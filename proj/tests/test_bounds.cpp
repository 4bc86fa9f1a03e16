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

#include "doctest.h"
#include "singular_sos/bounds.hpp"
#include "support.hpp"

using namespace testing;

namespace {

Integer ipow(const Integer& b, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

}  // namespace

TEST_CASE("bit") {
  CHECK(bit(Integer(0)) == 1);
  CHECK(bit(Integer(1)) == 1);
  CHECK(bit(Integer(5)) == 3);
  for (long d = 1; d <= 1000000; d += (d < 5000 ? 1 : 997)) {
    unsigned k = bit(Integer(d));
    CHECK((Integer(1) << (k - 1)) <= d);
    CHECK(d < (Integer(1) << k));
  }
}

TEST_CASE("c bound") {
  CHECK(c_bound(2, 2, 2) == 54);
  CHECK(c_bound(4, 1, 3) == 1);
  CHECK(c_bound(1, 2, 1) == 6);
  CHECK(c_bound(10, 2, 18) == 2 * ipow(3, 27));
  CHECK(c_bound(10, 2, 18) == Integer("15251194969974"));
  CHECK_THROWS(c_bound(1, 0, 1));
  CHECK_THROWS(c_bound(0, 2, 0));
  for (long n = 0; n <= 4; ++n)
    for (long d = 1; d <= 4; ++d)
      for (long s = 1; s <= 4; ++s) {
        CHECK(c_bound(n + 1, d, s) >= c_bound(n, d, s));
        CHECK(c_bound(n, d + 1, s) >= c_bound(n, d, s));
        CHECK(c_bound(n, d, s + 1) >= c_bound(n, d, s));
      }
}

TEST_CASE("b bound") {
  auto inner = evaluate_exact(b_exponent(1, 2, 2));
  REQUIRE(inner.has_value());
  CHECK(*inner == Integer(65536) + Integer("17179869184"));
  CHECK(*inner == Integer("17179934720"));
  CHECK_FALSE(evaluate_exact(b_bound(1, 2, 2)).has_value());
  CHECK(compare(b_bound(1, 2, 2), b_bound(1, 2, 3)) < 0);

  // n = d = s = 0: D = 2, 2^(2^1) + 0^1 * 2^(1 * bit(0)) = 4, b = 2^(2^4).
  auto b000 = evaluate_exact(b_bound(0, 0, 0));
  REQUIRE(b000.has_value());
  CHECK(*b000 == 65536);
}

TEST_CASE("tower comparisons agree with exact values") {
  std::vector<BoundExpr> pool;
  for (long b : {2, 3, 5, 10})
    for (long e : {1, 2, 3, 7, 20, 60, 150}) pool.push_back(pow(BoundExpr(b), BoundExpr(e)));
  pool.push_back(pow(BoundExpr(2), pow(BoundExpr(2), BoundExpr(5))));
  pool.push_back(pow(BoundExpr(2), pow(BoundExpr(2), BoundExpr(8))));
  pool.push_back(pow(BoundExpr(3), pow(BoundExpr(2), BoundExpr(6))) + BoundExpr(1));
  pool.push_back(halve(pow(BoundExpr(10), BoundExpr(99))) * BoundExpr(3));
  pool.push_back(max(BoundExpr(7) * BoundExpr(11), pow(BoundExpr(4), BoundExpr(3))));
  pool.push_back(BoundExpr(Integer(c_bound(10, 2, 18))));
  pool.push_back(bit(pow(BoundExpr(2), BoundExpr(40))));
  Integer limit = ipow(10, 100);
  int compared = 0;
  for (const auto& a : pool)
    for (const auto& b : pool) {
      auto va = evaluate_exact(a), vb = evaluate_exact(b);
      REQUIRE(va.has_value());
      REQUIRE(vb.has_value());
      if (*va >= limit || *vb >= limit) continue;
      int exact = *va < *vb ? -1 : (*va > *vb ? 1 : 0);
      if (exact == 0 && &a != &b) continue;
      if (&a == &b) {
        CHECK(compare(a, b) == 0);
        continue;
      }
      CHECK(compare(a, b, CompareMode::force_log) == exact);
      ++compared;
    }
  CHECK(compared > 500);
}

TEST_CASE("theoretical orders") {
  // rep-finite-w with n = 1, d = 2, l = 1: max{2 * (c(1,2,1) - 1), b/2 + 2} is the tower.
  BoundExpr w = theoretical_order(OrderCase::rep_finite_w, {1, 1, 2});
  CHECK(compare(w, BoundExpr(10)) > 0);
  CHECK_FALSE(evaluate_exact(w).has_value());

  for (long d = 1; d <= 3; ++d) {
    BoundExpr kkt = theoretical_order(OrderCase::kkt, {2, 1, d});
    BoundExpr wk = theoretical_order(OrderCase::rep_kkt_w, {2, 1, d});
    CHECK(compare(kkt, wk) >= 0);
  }
  CHECK(parse_order_case("alg-xi-finite") == OrderCase::alg_xi_finite);
  CHECK(to_string(OrderCase::rep_kkt_w) == "rep-kkt-w");
  CHECK_THROWS(parse_order_case("bogus"));

  DigitEstimate est = digit_estimate(pow(BoundExpr(2), BoundExpr(1000)));
  CHECK(est.exact);
  CHECK(est.digits == "302");
  DigitEstimate tower = digit_estimate(b_bound(1, 2, 2));
  CHECK_FALSE(tower.exact);
  Magnitude m = magnitude(b_bound(1, 2, 2));
  CHECK(m.level >= 1);
}
