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

#include <Eigen/Dense>

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace singular_sos {

/// Coefficient of X_ij in block `block` (i <= j; an off-diagonal entry v contributes v*X_ij
/// once, i.e. the symmetric coefficient matrix holds v/2 at (i,j) and (j,i)).
struct SDPEntry {
  std::size_t block = 0;
  std::size_t i = 0;
  std::size_t j = 0;
  double value = 0;
};

/// sum(entries . X) + sum(free_coeffs . x) = rhs
struct SDPConstraint {
  std::vector<SDPEntry> entries;
  std::vector<std::pair<std::size_t, double>> free_coeffs;
  double rhs = 0;
};

/// minimize <C, X> + c_f' x + offset subject to the constraints, X block-diagonal PSD,
/// x free.
struct SDPProblem {
  std::vector<std::size_t> block_sizes;
  std::size_t num_free = 0;
  std::vector<SDPEntry> objective;
  std::vector<double> free_objective;
  double objective_offset = 0;
  std::vector<SDPConstraint> constraints;

  /// Throws std::invalid_argument on out-of-range references or non-finite data.
  void validate() const;
};

enum class SDPStatus { optimal, primal_infeasible, dual_infeasible, stalled, iteration_limit };

const char* to_string(SDPStatus s);

struct SDPOptions {
  double tol = 1e-8;
  int max_iter = 100;
  /// Iterations without improvement of the optimality error before reporting a stall.
  int stall_iterations = 30;
};

struct SDPSolution {
  SDPStatus status = SDPStatus::stalled;
  double primal_value = 0;
  double dual_value = 0;
  double gap = 0;              ///< |primal - dual| / (1 + |primal|)
  double primal_residual = 0;  ///< relative equality residual
  double dual_residual = 0;    ///< relative residual of the free-variable dual rows
  double min_eig_X = 0;
  double min_eig_Z = 0;
  int iterations = 0;
  std::vector<Eigen::MatrixXd> X;
  std::vector<Eigen::MatrixXd> Z;
  Eigen::VectorXd x_free;
  Eigen::VectorXd y;
  std::string message;
};

/// Homogeneous self-dual interior-point method with Nesterov-Todd scaling and Mehrotra
/// predictor-corrector steps, computing in `Scalar` (double or long double). Free
/// variables are eliminated through a null-space basis of their columns. Deterministic.
template <typename Scalar>
SDPSolution solve_sdp(const SDPProblem& problem, const SDPOptions& options = {});

inline SDPSolution solve_sdp(const SDPProblem& problem, const SDPOptions& options = {}) {
  return solve_sdp<double>(problem, options);
}

/// Sparse text dump:
///   sdp 1
///   blocks <count> <size>...
///   free <count>
///   offset <value>
///   c <block> <i> <j> <value>      objective entry
///   cf <index> <value>             free objective
///   row <rhs>                      starts a constraint
///   a <block> <i> <j> <value>      entry of the current constraint
///   af <index> <value>             free coefficient of the current constraint
/// Indices are zero-based.
void write_sdp(std::ostream& os, const SDPProblem& p);
SDPProblem read_sdp(std::istream& is);

}  // namespace singular_sos
