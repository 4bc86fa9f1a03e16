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

#include <vector>

#include "singular_sos/polynomial.hpp"
#include "singular_sos/rational.hpp"

namespace singular_sos {

struct Factor {
  Polynomial poly;          ///< primitive integer coefficients, positive grevlex leading coefficient
  unsigned multiplicity = 1;
  bool maybe_reducible = false;
};

/// p = content * prod(f_i ^ m_i).
struct Factorization {
  Rational content;
  std::vector<Factor> factors;

  bool complete() const {
    for (const auto& f : factors)
      if (f.maybe_reducible) return false;
    return true;
  }
  Polynomial expand(std::size_t nvars) const;
};

/// Factorization over Q within a supported class: content and monomial factors,
/// squarefree decomposition, univariate factors, factors linear or quadratic in some
/// variable, irreducibility by univariate images, and factors linear in one variable
/// with affine coefficients. Anything the oracle cannot refine is returned whole with
/// `maybe_reducible` set. Factors are sorted deterministically.
Factorization factor_bounded(const Polynomial& p);

/// Distinct irreducible factors times the content sign (radical of a principal ideal).
Polynomial squarefree_part(const Polynomial& p);

/// Squarefree decomposition p = c * prod(P_i ^ i); entry i-1 holds P_i (possibly 1).
std::vector<Polynomial> squarefree_decomposition(const Polynomial& p, Rational* content = nullptr);

/// Rational multiple making p primitive with integer coefficients and positive
/// grevlex leading coefficient; returns the removed unit.
Rational make_primitive(Polynomial& p);

}  // namespace singular_sos
