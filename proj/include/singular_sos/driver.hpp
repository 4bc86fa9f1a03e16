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
#include <string>
#include <vector>

#include "singular_sos/relaxation.hpp"
#include "singular_sos/sdp.hpp"
#include "singular_sos/variety.hpp"

namespace singular_sos {

struct SolveOptions {
  /// Highest relaxation order tried per node; default k_min + 4.
  std::optional<unsigned> max_order;
  double tol = 1e-8;         ///< SDP tolerance
  double value_tol = 1e-7;   ///< stabilization tolerance between consecutive orders
  bool audit = false;        ///< symbolic value enumeration on B-nodes, SDP on trivial KKT nodes
  unsigned threads = 0;      ///< 0: SINGULAR_SOS_THREADS or the hardware count
  /// Orders whose relaxation exceeds these sizes are skipped (recorded in notes).
  std::size_t max_basis = 84;
  std::size_t max_moments = 1000;
  bool certificates = true;
  bool direct_check = true;  ///< direct relaxation of (h0, h) for the advisories
  RadicalOptions radical;
  std::vector<std::string> variables;  ///< display names (default x1..xn)
};

enum class ValueKind { finite, plus_infinity, minus_infinity, unknown };
const char* to_string(ValueKind k);

struct OrderResult {
  unsigned order = 0;
  double value = 0;  ///< rho_k; +-inf for certified infeasibility
  ValueKind kind = ValueKind::finite;
  SDPStatus status = SDPStatus::optimal;
  bool reliable = true;
  double gap = 0;
  double min_eigenvalue = 0;
  int iterations = 0;
  double seconds = 0;
};

/// rho_k(h0, gens): sup xi such that h0 - xi is SOS of degree 2k plus an element of the
/// truncated ideal. Dual infeasibility of the SDP maps to +inf, primal infeasibility to
/// -inf.
struct RhoResult {
  OrderResult summary;
  std::optional<Certificate> certificate;
  SDPSolution solution;
};
RhoResult rho_k(const Polynomial& h0, const std::vector<Polynomial>& gens, unsigned k, const SolveOptions& opts = {});

enum class Branch { kkt, finite };
const char* to_string(Branch b);

/// Positive-dimensional nodes use the KKT branch, zero-dimensional nodes the finite one.
/// Throws std::invalid_argument for empty nodes.
Branch optimality_branch(const Polynomial& h0, const VarietyNode& node);

struct NodeRecord {
  int node_id = -1;
  Branch branch = Branch::kkt;
  int depth = 0;
  std::optional<int> dim;
  std::vector<std::string> generators;
  std::size_t relaxation_vars = 0;
  std::vector<std::string> relaxation_variables;
  std::vector<std::string> relaxation_generators;  ///< KKT system or node basis
  std::vector<OrderResult> orders;
  double value = 0;
  ValueKind kind = ValueKind::unknown;
  std::string emptiness;  ///< "groebner-trivial", "sdp-dual-infeasible" or empty
  bool stabilized = false;
  std::string theoretical_case;
  std::string theoretical_order;
  std::string theoretical_digits;  ///< size of the theoretical order in decimal digits
  std::optional<Certificate> certificate;
  std::optional<VerifyResult> verification;
  std::vector<double> audit_values;  ///< real values of h0 on the node (B audit)
  std::vector<std::string> notes;
};

struct SolveReport {
  double value = 0;
  ValueKind kind = ValueKind::unknown;
  std::string value_rational;  ///< continued-fraction rounding of a finite value
  std::vector<std::string> variables;
  std::vector<NodeRecord> nodes;
  std::vector<OrderResult> direct;  ///< direct relaxation of (h0, h)
  std::vector<std::string> diagnostics;
  std::vector<std::string> warnings;
  std::vector<std::string> advisories;
  bool non_attainment = false;
  bool unbounded_below = false;
  double seconds = 0;

  /// Exit code contract: 0 clean, 2 when advisories or warnings are present.
  int exit_code() const { return advisories.empty() && warnings.empty() ? 0 : 2; }
};

SolveReport solve_pop(const Polynomial& h0, const std::vector<Polynomial>& h, const SolveOptions& opts = {});

struct MinimizerResult {
  bool ok = false;
  std::vector<Rational> point;
  std::vector<Rational> xi;          ///< squared-distance minima, rationalized
  std::vector<double> xi_numeric;
  std::vector<std::vector<Rational>> anchors;
  std::vector<double> residuals;     ///< |h_t(x*)| per generator
  double objective_error = 0;        ///< |h0(x*) - hstar|
  std::string message;
};

/// Spherical-constraint extraction: xi_t = min ||x - a_t||^2 over V(h, h0 - hstar) with
/// the earlier spheres added, anchors origin and unit vectors, then an exact linear solve.
MinimizerResult extract_minimizer(const Polynomial& h0, const std::vector<Polynomial>& h, const Rational& hstar,
                                  const SolveOptions& opts = {});

/// Worker count: SINGULAR_SOS_THREADS when set to a positive integer, else the hardware
/// concurrency.
unsigned default_thread_count();

}  // namespace singular_sos
