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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "singular_sos/polynomial.hpp"
#include "singular_sos/univariate.hpp"

namespace singular_sos {

struct HyperbolicInstance {
  Polynomial f;
  std::vector<Rational> e;
  /// Caller asserts hyperbolicity (known families); skips sampling in conversions.
  bool trusted = false;

  int degree() const { return f.degree(); }
  /// Throws std::invalid_argument when e has the wrong length or f(e) = 0.
  void validate() const;
};

/// inf c'x subject to A x = b and x in the hyperbolic cone of (f, e).
struct HyperbolicProgram {
  std::vector<std::vector<Rational>> A;
  std::vector<Rational> b;
  std::vector<Rational> c;
  HyperbolicInstance instance;

  void validate() const;
};

/// phi_a(t) = f(t e - a).
UPoly restrict_univariate(const Polynomial& f, const std::vector<Rational>& e, const std::vector<Rational>& a);

struct HyperbolicityCheck {
  bool certified_on_samples = false;  ///< no counterexample among the samples (not a proof)
  std::optional<std::vector<Rational>> witness;  ///< a with f(te - a) not real-rooted
  std::size_t samples = 0;
};

/// Seeded pseudo-random rational directions (numerators in [-10, 10], denominators in
/// [1, 6]); identical for identical (n, count, seed).
std::vector<std::vector<Rational>> sample_points(std::size_t n, std::size_t count, std::uint64_t seed);

HyperbolicityCheck is_hyperbolic(const HyperbolicInstance& inst, std::size_t sample_count = 100, std::uint64_t seed = 1);

enum class Membership { member, non_member, degenerate };
const char* to_string(Membership m);

/// Exact Sturm test: every real root of phi_a is >= 0. `degenerate` when phi_a is the zero
/// polynomial.
Membership cone_membership(const HyperbolicInstance& inst, const std::vector<Rational>& a);

/// Vieta sign polynomials (-1)^(d-j) phi^(j)(x), j = 0..d-1, after normalizing the
/// leading coefficient of phi to be positive. Points with real-rooted phi lie in the
/// cone iff all of them are >= 0.
std::vector<Polynomial> vieta_conditions(const HyperbolicInstance& inst);
bool vieta_holds(const HyperbolicInstance& inst, const std::vector<Rational>& a);

struct PopData {
  Polynomial h0;
  std::vector<Polynomial> h;
  std::vector<std::string> variables;
  std::size_t nx = 0;     ///< original variables x1..xn
  std::size_t slacks = 0; ///< one z per non-trivial Vieta condition
};

/// Objective c'x, Vieta conditions as g - z^2 = 0, then the rows A x - b = 0.
/// Rejects instances refuted by sampling unless trusted.
PopData hyperbolic_to_pop(const HyperbolicProgram& hp, std::size_t sample_count = 100, std::uint64_t seed = 1);

}  // namespace singular_sos
