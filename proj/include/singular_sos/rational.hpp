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

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace singular_sos {

/// Exact rational scalar used by every symbolic layer.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "-p" or "p/q" into a canonical rational. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// Canonical decimal form: "p" or "p/q".
std::string to_string(const Rational& q);

inline double to_double(const Rational& q) { return q.get_d(); }

/// Best rational approximation of `x` by continued fractions with denominator at most `max_den`.
Rational rationalize(double x, const Integer& max_den = Integer(1000000));

Integer lcm_of_denominators(const std::vector<Rational>& values);

inline Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

/// Integer power of a rational.
Rational pow(const Rational& base, unsigned exponent);

}  // namespace singular_sos
