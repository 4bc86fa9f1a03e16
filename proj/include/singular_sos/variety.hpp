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

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "singular_sos/ideal.hpp"
#include "singular_sos/polynomial.hpp"

namespace singular_sos {

enum class NodeKind { positive_dim, zero_dim, empty };

const char* to_string(NodeKind kind);

/// One step of a node's history: the singular-locus depth at which it was produced and
/// the id of the node whose singular locus it came from (-1 for the input variety).
struct Provenance {
  int depth = 0;
  int parent = -1;
};

struct VarietyNode {
  Ideal ideal;
  std::optional<int> dim;  ///< nullopt for the empty variety
  NodeKind kind = NodeKind::empty;
  std::vector<Provenance> provenance;
  int id = -1;
  bool incomplete = false;  ///< an undecided factor was met while splitting

  int depth() const { return provenance.empty() ? 0 : provenance.back().depth; }
};

/// Node over `I` with dimension and kind filled in.
VarietyNode make_node(const Ideal& I, std::vector<Provenance> provenance = {});
VarietyNode make_node(std::size_t nvars, const std::vector<Polynomial>& generators);

/// Raised when a singular locus fails to drop dimension, which happens for non-radical
/// generators such as (q^2).
class LoopGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RadicalOptions {
  /// Replace basis elements by their squarefree parts.
  bool squarefree = true;
  /// Real-zero rules: a same-sign sum of even monomials forces every monomial to vanish,
  /// so the product of each monomial's variables is added.
  bool real_rules = true;
};

/// Ideal with the same real zero set, enlarged by the enabled rules until stable.
Ideal radicalize(const Ideal& I, const RadicalOptions& options = {});

/// Ideal generated by (g, all (n-d)x(n-d) Jacobian minors of g) where g is the radicalized
/// basis of V and d = dim V. Throws LoopGuardError when the dimension does not drop.
VarietyNode singular_locus(const VarietyNode& V, const RadicalOptions& options = {});

struct ComponentSplit {
  std::vector<VarietyNode> components;
  std::vector<std::string> warnings;
};

/// Splits V by factoring basis elements; components are pairwise non-contained and
/// sorted by (dimension descending, basis text).
ComponentSplit irreducible_components(const VarietyNode& V, const RadicalOptions& options = {});

struct Decomposition {
  std::vector<VarietyNode> A;  ///< positive-dimensional components
  std::vector<VarietyNode> B;  ///< zero-dimensional components
  std::vector<std::string> diagnostics;
  std::vector<std::string> warnings;
};

/// Recursive decomposition of singular loci. Nodes are produced breadth first by depth;
/// empty singular loci and duplicate nodes are dropped and recorded in diagnostics.
Decomposition decompose_singular_loci(const VarietyNode& V, const RadicalOptions& options = {});

/// (h, grad h0 - sum_j lambda_j grad h_j) in variables (x_1..x_n, lambda_1..lambda_l).
struct KKTSystem {
  std::size_t nx = 0;
  std::size_t nl = 0;
  std::vector<Polynomial> polynomials;

  std::size_t nvars() const { return nx + nl; }
  std::vector<std::string> variable_names(const std::vector<std::string>& x_names) const;
};

KKTSystem kkt_system(const Polynomial& h0, const std::vector<Polynomial>& h);
KKTSystem kkt_system(const Polynomial& h0, const VarietyNode& V);

/// Generators of a node in display form (its reduced basis).
std::vector<std::string> format_generators(const VarietyNode& V, const std::vector<std::string>& names);

}  // namespace singular_sos
