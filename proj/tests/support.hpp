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

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "singular_sos/polynomial.hpp"

namespace testing {

using namespace singular_sos;

inline Polynomial P(const std::string& text, const std::vector<std::string>& vars) { return poly_parse(text, vars); }

inline std::vector<Polynomial> Ps(const std::vector<std::string>& texts, const std::vector<std::string>& vars) {
  std::vector<Polynomial> out;
  for (const auto& t : texts) out.push_back(poly_parse(t, vars));
  return out;
}

inline std::vector<std::string> names(std::size_t n) { return default_names(n); }

inline Rational random_rational(std::mt19937_64& rng, int num_range = 5, int den_max = 4) {
  std::uniform_int_distribution<int> num(-num_range, num_range), den(1, den_max);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

inline std::vector<Rational> random_point(std::mt19937_64& rng, std::size_t n, int num_range = 5, int den_max = 4) {
  std::vector<Rational> a;
  for (std::size_t i = 0; i < n; ++i) a.push_back(random_rational(rng, num_range, den_max));
  return a;
}

/// Random polynomial with up to `terms` terms of total degree <= deg and small integer
/// coefficients.
inline Polynomial random_poly(std::mt19937_64& rng, std::size_t n, unsigned deg, int terms = 5) {
  Polynomial p(n);
  std::uniform_int_distribution<int> coef(-5, 5);
  for (int t = 0; t < terms; ++t) {
    std::vector<unsigned> ex(n, 0);
    unsigned left = std::uniform_int_distribution<unsigned>(0, deg)(rng);
    for (std::size_t i = 0; i < n && left > 0; ++i) {
      unsigned k = std::uniform_int_distribution<unsigned>(0, left)(rng);
      ex[i] = k;
      left -= k;
    }
    std::shuffle(ex.begin(), ex.end(), rng);
    int c = coef(rng);
    if (c != 0) p.add_term(Monomial(ex), Rational(c));
  }
  return p;
}

inline std::vector<double> to_doubles(const std::vector<Rational>& a) {
  std::vector<double> out;
  for (const auto& q : a) out.push_back(q.get_d());
  return out;
}

}  // namespace testing
