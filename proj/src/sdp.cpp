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

#include "singular_sos/sdp.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <Eigen/Sparse>

#include <algorithm>
#include <cmath>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace singular_sos {

void SDPProblem::validate() const {
  auto check_entry = [&](const SDPEntry& e) {
    if (e.block >= block_sizes.size()) throw std::invalid_argument("SDP entry refers to a missing block");
    if (e.i > e.j || e.j >= block_sizes[e.block]) throw std::invalid_argument("SDP entry index out of range (need i <= j < size)");
    if (!std::isfinite(e.value)) throw std::invalid_argument("SDP entry is not finite");
  };
  for (std::size_t s : block_sizes)
    if (s == 0) throw std::invalid_argument("SDP block of size 0");
  for (const auto& e : objective) check_entry(e);
  if (free_objective.size() > num_free) throw std::invalid_argument("free objective longer than the free variables");
  for (double v : free_objective)
    if (!std::isfinite(v)) throw std::invalid_argument("free objective is not finite");
  if (!std::isfinite(objective_offset)) throw std::invalid_argument("objective offset is not finite");
  for (const auto& c : constraints) {
    for (const auto& e : c.entries) check_entry(e);
    for (const auto& [k, v] : c.free_coeffs) {
      if (k >= num_free) throw std::invalid_argument("constraint refers to a missing free variable");
      if (!std::isfinite(v)) throw std::invalid_argument("free coefficient is not finite");
    }
    if (!std::isfinite(c.rhs)) throw std::invalid_argument("constraint right-hand side is not finite");
  }
}

const char* to_string(SDPStatus s) {
  switch (s) {
    case SDPStatus::optimal:
      return "optimal";
    case SDPStatus::primal_infeasible:
      return "primal-infeasible";
    case SDPStatus::dual_infeasible:
      return "dual-infeasible";
    case SDPStatus::stalled:
      return "stalled";
    case SDPStatus::iteration_limit:
      return "iteration-limit";
  }
  return "?";
}

namespace sdp_detail {

struct Layout {
  std::vector<std::size_t> sizes;
  std::vector<std::size_t> offsets;
  std::size_t total = 0;  // sum of squared sizes
  std::size_t nu = 0;     // sum of sizes

  explicit Layout(const std::vector<std::size_t>& s) : sizes(s) {
    for (std::size_t b : s) {
      offsets.push_back(total);
      total += b * b;
      nu += b;
    }
  }
  std::size_t index(std::size_t b, std::size_t i, std::size_t j) const { return offsets[b] + i + j * sizes[b]; }
};

template <typename F>
void scatter(const Layout& L, const std::vector<SDPEntry>& entries, F&& add) {
  for (const auto& e : entries) {
    if (e.i == e.j) {
      add(L.index(e.block, e.i, e.i), e.value);
    } else {
      add(L.index(e.block, e.i, e.j), e.value / 2);
      add(L.index(e.block, e.j, e.i), e.value / 2);
    }
  }
}

/// Solves the consistent part of R^T v = rhs for a trapezoidal R of rank r (as produced
/// by column-pivoted QR). Returns false when the remaining rows disagree.
template <typename Mat, typename Vec>
bool trapezoidal_solve(const Mat& R, Eigen::Index r, const Vec& rhs, Vec& v, double tol) {
  const Eigen::Index p = rhs.size();
  v = Vec::Zero(r);
  if (r > 0) v = R.topLeftCorner(r, r).transpose().template triangularView<Eigen::Lower>().solve(rhs.head(r));
  if (p > r) {
    Vec rest = R.block(0, r, r, p - r).transpose() * v - rhs.tail(p - r);
    double scale = 1.0 + static_cast<double>(rhs.template lpNorm<Eigen::Infinity>());
    if (static_cast<double>(rest.template lpNorm<Eigen::Infinity>()) > tol * scale) return false;
  }
  return true;
}

template <typename S>
struct Engine {
  using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
  using RowMat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  using Vec = Eigen::Matrix<S, Eigen::Dynamic, 1>;
  using Map = Eigen::Map<Mat>;
  using CMap = Eigen::Map<const Mat>;

  const Layout& L;
  const RowMat& A;  // m x total, rows are vectorized symmetric matrices
  const Vec& b;
  const Vec& C;
  const SDPOptions& opt;
  // Conversion back to original units for the stopping test.
  S obj_scale = 1;
  S obj_offset = 0;
  Vec row_unscale;  // residual multiplier per row
  S b_norm_orig = 0;
  S dual_scale = 1;
  S c_norm_orig = 0;

  Vec x, z, y;
  S tau = 1, kappa = 1;

  struct BlockScaling {
    Mat G, Ginv, W;
    Vec lam;
  };
  std::vector<BlockScaling> sc;

  struct Direction {
    Vec dx, dz, dy;
    S dtau = 0, dkappa = 0;
    std::vector<Mat> dxs, dzs;  // scaled
    S alpha = 0;
  };

  Engine(const Layout& layout, const RowMat& A_, const Vec& b_, const Vec& C_, const SDPOptions& o)
      : L(layout), A(A_), b(b_), C(C_), opt(o) {}

  Map blk(Vec& v, std::size_t k) const { return Map(v.data() + L.offsets[k], L.sizes[k], L.sizes[k]); }
  CMap blk(const Vec& v, std::size_t k) const { return CMap(v.data() + L.offsets[k], L.sizes[k], L.sizes[k]); }

  Vec identity() const {
    Vec v = Vec::Zero(L.total);
    for (std::size_t k = 0; k < L.sizes.size(); ++k)
      for (std::size_t i = 0; i < L.sizes[k]; ++i) v[L.index(k, i, i)] = 1;
    return v;
  }

  S mu() const { return (x.dot(z) + tau * kappa) / S(L.nu + 1); }

  bool compute_scaling() {
    sc.resize(L.sizes.size());
    for (std::size_t k = 0; k < L.sizes.size(); ++k) {
      Eigen::LLT<Mat> lx(blk(x, k)), lz(blk(z, k));
      if (lx.info() != Eigen::Success || lz.info() != Eigen::Success) return false;
      Mat Lx = lx.matrixL(), Lz = lz.matrixL();
      Eigen::JacobiSVD<Mat> svd(Lz.transpose() * Lx, Eigen::ComputeFullU | Eigen::ComputeFullV);
      Vec s = svd.singularValues();
      if (s.minCoeff() <= S(0)) return false;
      Vec s_half = s.cwiseSqrt();
      auto& B = sc[k];
      B.lam = s;
      B.G = Lx * svd.matrixV() * s_half.cwiseInverse().asDiagonal();
      Mat LxInv = Lx.template triangularView<Eigen::Lower>().solve(Mat::Identity(L.sizes[k], L.sizes[k]));
      B.Ginv = s_half.asDiagonal() * svd.matrixV().transpose() * LxInv;
      B.W = B.G * B.G.transpose();
    }
    return true;
  }

  Vec congruence_W(const Vec& v) const {
    Vec out(L.total);
    for (std::size_t k = 0; k < L.sizes.size(); ++k) {
      Map o(out.data() + L.offsets[k], L.sizes[k], L.sizes[k]);
      o.noalias() = sc[k].W * blk(v, k) * sc[k].W;
    }
    return out;
  }

  Mat M;
  Eigen::LLT<Mat> M_llt;
  Eigen::LDLT<Mat> M_ldlt;
  bool use_ldlt = false;
  Vec u, WCW;
  S cw = 0;

  void build_schur() {
    const Eigen::Index m = A.rows();
    WCW = congruence_W(C);
    cw = C.dot(WCW);
    u = A * WCW;
    Mat BW(static_cast<Eigen::Index>(L.total), m);
    for (Eigen::Index j = 0; j < m; ++j) {
      Vec row = A.row(j).transpose();
      BW.col(j) = congruence_W(row);
    }
    M = A * BW;
    M = (M + M.transpose()) / S(2);
    use_ldlt = false;
    if (m == 0) return;
    M_llt.compute(M);
    if (M_llt.info() != Eigen::Success) {
      S reg = std::max(S(1e-14) * M.diagonal().cwiseAbs().maxCoeff(), std::numeric_limits<S>::min());
      M.diagonal().array() += reg;
      M_ldlt.compute(M);
      use_ldlt = true;
    }
  }

  Vec schur_solve(const Vec& r) const {
    if (r.size() == 0) return r;
    return use_ldlt ? Vec(M_ldlt.solve(r)) : Vec(M_llt.solve(r));
  }

  // Largest step keeping Lambda + alpha * D positive semidefinite.
  static S max_step(const Vec& lam, const Mat& D) {
    Vec ih = lam.cwiseSqrt().cwiseInverse();
    Mat T = ih.asDiagonal() * D * ih.asDiagonal();
    T = (T + T.transpose()) / S(2);
    Eigen::SelfAdjointEigenSolver<Mat> es(T, Eigen::EigenvaluesOnly);
    S mn = es.eigenvalues().minCoeff();
    return mn < S(0) ? S(-1) / mn : std::numeric_limits<S>::infinity();
  }

  Direction direction(S sigma, const std::vector<Mat>* corr, S corr_tau, const Vec& rp, const Vec& rd, S rg) {
    const S m_ = mu();
    const S eta = S(1) - sigma;
    Direction d;
    Vec P(L.total);
    for (std::size_t k = 0; k < L.sizes.size(); ++k) {
      const auto& B = sc[k];
      const Eigen::Index s = static_cast<Eigen::Index>(L.sizes[k]);
      Mat T = -Mat(B.lam.cwiseProduct(B.lam).asDiagonal());
      T.diagonal().array() += sigma * m_;
      if (corr) T -= (*corr)[k];
      Mat R(s, s);
      for (Eigen::Index i = 0; i < s; ++i)
        for (Eigen::Index j = 0; j < s; ++j) R(i, j) = S(2) * T(i, j) / (B.lam[i] + B.lam[j]);
      Map Pk(P.data() + L.offsets[k], s, s);
      Pk.noalias() = B.G * R * B.G.transpose();
    }
    Vec WrdW = congruence_W(rd);
    Vec q1 = eta * rp - A * (P + eta * WrdW);
    S q2 = eta * rg + C.dot(P) + eta * WCW.dot(rd) + (sigma * m_ - tau * kappa - corr_tau) / tau;
    Vec v1 = schur_solve(q1);
    Vec ub = u + b;
    Vec v2 = schur_solve(ub);
    Vec bu = b - u;
    S denom = bu.dot(v2) + cw + kappa / tau;
    d.dtau = (q2 - bu.dot(v1)) / denom;
    d.dy = v1 + d.dtau * v2;
    d.dz = -(A.transpose() * d.dy) + C * d.dtau - eta * rd;
    d.dx = P - congruence_W(d.dz);
    d.dkappa = (sigma * m_ - tau * kappa - corr_tau - kappa * d.dtau) / tau;

    S amax = std::numeric_limits<S>::infinity();
    d.dxs.resize(L.sizes.size());
    d.dzs.resize(L.sizes.size());
    for (std::size_t k = 0; k < L.sizes.size(); ++k) {
      const auto& B = sc[k];
      d.dxs[k] = B.Ginv * blk(d.dx, k) * B.Ginv.transpose();
      d.dzs[k] = B.G.transpose() * blk(d.dz, k) * B.G;
      amax = std::min({amax, max_step(B.lam, d.dxs[k]), max_step(B.lam, d.dzs[k])});
    }
    if (d.dtau < S(0)) amax = std::min(amax, -tau / d.dtau);
    if (d.dkappa < S(0)) amax = std::min(amax, -kappa / d.dkappa);
    d.alpha = amax;
    return d;
  }

  void symmetrize(Vec& v) {
    for (std::size_t k = 0; k < L.sizes.size(); ++k) {
      Map B = blk(v, k);
      Mat t = (B + B.transpose()) / S(2);
      B = t;
    }
  }

  struct Check {
    double pres, dres, gap;
    bool pinf = false, dinf = false;
  };

  Check check() const {
    Check c{};
    Vec Ax = A * x;
    Vec rp_scaled = (Ax / tau - b).cwiseProduct(row_unscale);
    c.pres = static_cast<double>(rp_scaled.norm() / (S(1) + b_norm_orig));
    Vec rd = A.transpose() * y / tau + z / tau - C;
    c.dres = static_cast<double>(dual_scale * rd.norm() / (S(1) + c_norm_orig));
    S pobj = C.dot(x) / tau, dobj = b.dot(y) / tau;
    S p_orig = obj_scale * pobj + obj_offset;
    c.gap = static_cast<double>(obj_scale * std::abs(pobj - dobj) / (S(1) + std::abs(p_orig)));
    const double tol = opt.tol;
    S by = b.dot(y);
    if (by > S(0) && static_cast<double>((A.transpose() * y + z).norm() / by) <= tol) c.pinf = true;
    S cx = C.dot(x);
    if (cx < S(0) && static_cast<double>(Ax.norm() / -cx) <= tol) c.dinf = true;
    return c;
  }

  SDPStatus run(int& iterations, std::string& message) {
    const Eigen::Index m = A.rows();
    x = identity();
    z = identity();
    y = Vec::Zero(m);
    tau = kappa = 1;
    double best_err = std::numeric_limits<double>::infinity();
    int best_iter = 0;
    Vec bx = x, bz = z, by_ = y;
    S btau = tau, bkappa = kappa;
    SDPStatus status = SDPStatus::iteration_limit;
    for (int it = 0;; ++it) {
      iterations = it;
      Check c = check();
      if (c.pinf) return SDPStatus::primal_infeasible;
      if (c.dinf) return SDPStatus::dual_infeasible;
      double err = std::max({c.pres, c.dres, c.gap});
      if (err <= opt.tol) return SDPStatus::optimal;
      if (err < best_err * (1 - 1e-3)) {
        best_err = err;
        best_iter = it;
        bx = x, bz = z, by_ = y, btau = tau, bkappa = kappa;
      }
      if (it - best_iter >= opt.stall_iterations) {
        status = SDPStatus::stalled;
        message = "no progress in " + std::to_string(opt.stall_iterations) + " iterations";
        break;
      }
      if (it >= opt.max_iter) break;
      if (!compute_scaling()) {
        status = SDPStatus::stalled;
        message = "iterate lost positive definiteness";
        break;
      }
      build_schur();
      Vec rp = b * tau - A * x;
      Vec rd = A.transpose() * y - C * tau + z;
      S rg = C.dot(x) - b.dot(y) + kappa;

      Direction aff = direction(S(0), nullptr, S(0), rp, rd, rg);
      S a_aff = std::min(S(1), aff.alpha);
      Vec xa = x + a_aff * aff.dx, za = z + a_aff * aff.dz;
      S mu_aff = (xa.dot(za) + (tau + a_aff * aff.dtau) * (kappa + a_aff * aff.dkappa)) / S(L.nu + 1);
      S ratio = std::max(S(0), mu_aff / mu());
      S sigma = std::min(S(1), ratio * ratio * ratio);
      std::vector<Mat> corr(L.sizes.size());
      for (std::size_t k = 0; k < L.sizes.size(); ++k) {
        Mat prod = aff.dxs[k] * aff.dzs[k];
        corr[k] = (prod + prod.transpose()) / S(2);
      }
      Direction d = direction(sigma, &corr, aff.dtau * aff.dkappa, rp, rd, rg);
      S alpha = std::min(S(1), S(0.98) * d.alpha);
      if (!(alpha > S(1e-12))) {
        status = SDPStatus::stalled;
        message = "step length vanished";
        break;
      }
      x += alpha * d.dx;
      z += alpha * d.dz;
      y += alpha * d.dy;
      tau += alpha * d.dtau;
      kappa += alpha * d.dkappa;
      symmetrize(x);
      symmetrize(z);
    }
    x = bx, z = bz, y = by_, tau = btau, kappa = bkappa;
    return status;
  }
};

template <typename Mat>
double min_eigenvalue(const Mat& M) {
  if (M.size() == 0) return 0;
  Eigen::SelfAdjointEigenSolver<Mat> es(M, Eigen::EigenvaluesOnly);
  return static_cast<double>(es.eigenvalues().minCoeff());
}

}  // namespace sdp_detail

using namespace sdp_detail;

template <typename S>
SDPSolution solve_sdp(const SDPProblem& problem, const SDPOptions& options) {
  using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
  using RowMat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  using Vec = Eigen::Matrix<S, Eigen::Dynamic, 1>;
  using Sparse = Eigen::SparseMatrix<S, Eigen::RowMajor>;

  problem.validate();
  const Layout L(problem.block_sizes);
  const Eigen::Index m = static_cast<Eigen::Index>(problem.constraints.size());
  const Eigen::Index p = static_cast<Eigen::Index>(problem.num_free);
  const Eigen::Index n = static_cast<Eigen::Index>(L.total);
  const double tol = options.tol;

  Sparse A(m, n);
  {
    std::vector<Eigen::Triplet<S>> trip;
    for (Eigen::Index i = 0; i < m; ++i)
      scatter(L, problem.constraints[i].entries,
              [&](std::size_t idx, double v) { trip.emplace_back(i, static_cast<Eigen::Index>(idx), S(v)); });
    A.setFromTriplets(trip.begin(), trip.end());
  }
  Vec C = Vec::Zero(n);
  scatter(L, problem.objective, [&](std::size_t idx, double v) { C[idx] += S(v); });
  Mat Af = Mat::Zero(m, p);
  Vec b(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    b[i] = S(problem.constraints[i].rhs);
    for (const auto& [k, v] : problem.constraints[i].free_coeffs) Af(i, static_cast<Eigen::Index>(k)) += S(v);
  }
  Vec cf = Vec::Zero(p);
  for (std::size_t k = 0; k < problem.free_objective.size(); ++k) cf[k] = S(problem.free_objective[k]);

  SDPSolution sol;
  auto blocks_of = [&](const Vec& v) {
    std::vector<Eigen::MatrixXd> out;
    for (std::size_t k = 0; k < L.sizes.size(); ++k)
      out.push_back(Eigen::Map<const Mat>(v.data() + L.offsets[k], L.sizes[k], L.sizes[k]).template cast<double>());
    return out;
  };

  // Free variables: dual rows Af' y = cf, parametrized as y = w + N y_red.
  Vec w = Vec::Zero(m);
  Mat N = Mat::Identity(m, m);
  if (p > 0) {
    Eigen::ColPivHouseholderQR<Mat> qr(Af);
    qr.setThreshold(1e-11);
    const Eigen::Index r = qr.rank();
    Mat Q = qr.householderQ() * Mat::Identity(m, m);
    Mat R = qr.matrixR().topRows(std::min(m, p)).template triangularView<Eigen::Upper>();
    Vec cfp = qr.colsPermutation().transpose() * cf;
    Vec zr;
    if (!trapezoidal_solve(R, r, cfp, zr, 1e-9)) {
      sol.status = SDPStatus::dual_infeasible;
      sol.message = "free-variable dual rows are inconsistent; the objective is unbounded along a free direction if feasible";
      sol.primal_value = -std::numeric_limits<double>::infinity();
      sol.dual_value = -std::numeric_limits<double>::infinity();
      return sol;
    }
    w = Q.leftCols(r) * zr;
    N = Q.rightCols(m - r);
  }
  const Eigen::Index mr = N.cols();
  Mat AredT = Mat(A.transpose() * N);  // n x mr
  Vec bred = N.transpose() * b;
  Vec Cred = C - A.transpose() * w;
  S offset = S(problem.objective_offset) + b.dot(w);

  // Independent rows and consistency of the equality system.
  std::vector<Eigen::Index> kept;
  Vec row_norm(mr);
  for (Eigen::Index i = 0; i < mr; ++i) row_norm[i] = AredT.col(i).norm();
  {
    S maxn = mr ? row_norm.maxCoeff() : S(0);
    Mat scaledT = AredT;
    for (Eigen::Index i = 0; i < mr; ++i)
      if (row_norm[i] > S(0)) scaledT.col(i) /= row_norm[i];
    Vec bs = bred;
    for (Eigen::Index i = 0; i < mr; ++i)
      if (row_norm[i] > S(0)) bs[i] /= row_norm[i];
    if (mr > 0 && maxn > S(0)) {
      Eigen::ColPivHouseholderQR<Mat> qr(scaledT);
      qr.setThreshold(1e-10);
      const Eigen::Index r = qr.rank();
      Mat R = qr.matrixR().topRows(std::min(n, mr)).template triangularView<Eigen::Upper>();
      Vec bp = qr.colsPermutation().transpose() * bs;
      Vec v;
      if (!trapezoidal_solve(R, r, bp, v, 1e-8)) {
        sol.status = SDPStatus::primal_infeasible;
        sol.message = "equality constraints are inconsistent";
        sol.primal_value = std::numeric_limits<double>::infinity();
        sol.dual_value = std::numeric_limits<double>::infinity();
        return sol;
      }
      for (Eigen::Index i = 0; i < r; ++i) kept.push_back(qr.colsPermutation().indices()[i]);
      std::sort(kept.begin(), kept.end());
    } else if (mr > 0 && bred.template lpNorm<Eigen::Infinity>() > S(1e-9) * (S(1) + b.norm())) {
      sol.status = SDPStatus::primal_infeasible;
      sol.message = "equality constraints are inconsistent";
      sol.primal_value = std::numeric_limits<double>::infinity();
      sol.dual_value = std::numeric_limits<double>::infinity();
      return sol;
    }
  }

  const Eigen::Index mk = static_cast<Eigen::Index>(kept.size());
  RowMat Ah(mk, n);
  Vec bh(mk), unscale(mk);
  for (Eigen::Index i = 0; i < mk; ++i) {
    S d = row_norm[kept[i]];
    Ah.row(i) = AredT.col(kept[i]).transpose() / d;
    bh[i] = bred[kept[i]] / d;
    unscale[i] = d;
  }
  S sb = std::max(S(1), bh.norm());
  S scc = std::max(S(1), Cred.norm());
  bh /= sb;
  Vec Ch = Cred / scc;

  Engine<S> eng(L, Ah, bh, Ch, options);
  eng.obj_scale = sb * scc;
  eng.obj_offset = offset;
  eng.row_unscale = unscale * sb;
  eng.b_norm_orig = b.norm();
  eng.dual_scale = scc;
  eng.c_norm_orig = C.norm();
  sol.status = eng.run(sol.iterations, sol.message);

  const S tau = eng.tau;
  Vec X, yfull, Z;
  if (sol.status == SDPStatus::primal_infeasible || sol.status == SDPStatus::dual_infeasible) {
    // Report the normalized certificate rather than an iterate.
    S by = bh.dot(eng.y), cx = -Ch.dot(eng.x);
    X = eng.x / (cx > S(0) ? cx : S(1));
    Vec yr = Vec::Zero(mr);
    for (Eigen::Index i = 0; i < mk; ++i) yr[kept[i]] = eng.y[i] / (unscale[i] * (by > S(0) ? by : S(1)));
    yfull = N * yr;
    Z = eng.z / (by > S(0) ? by : S(1));
    sol.X = blocks_of(X);
    sol.Z = blocks_of(Z);
    sol.y = yfull.template cast<double>();
    sol.x_free = Eigen::VectorXd::Zero(p);
    bool pinf = sol.status == SDPStatus::primal_infeasible;
    sol.primal_value = pinf ? std::numeric_limits<double>::infinity() : -std::numeric_limits<double>::infinity();
    sol.dual_value = sol.primal_value;
    sol.min_eig_X = std::numeric_limits<double>::infinity();
    sol.min_eig_Z = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < L.sizes.size(); ++k) {
      sol.min_eig_X = std::min(sol.min_eig_X, min_eigenvalue(sol.X[k]));
      sol.min_eig_Z = std::min(sol.min_eig_Z, min_eigenvalue(sol.Z[k]));
    }
    if (sol.message.empty())
      sol.message = pinf ? "certificate: b'y > 0 with -A*y positive semidefinite" : "certificate: improving ray with <C,X> < 0";
    return sol;
  }

  X = eng.x * (sb / tau);
  Vec yr = Vec::Zero(mr);
  for (Eigen::Index i = 0; i < mk; ++i) yr[kept[i]] = eng.y[i] * scc / (unscale[i] * tau);
  yfull = w + N * yr;
  Vec Ax = A * X;
  Vec xf = Vec::Zero(p);
  if (p > 0) xf = Af.completeOrthogonalDecomposition().solve(b - Ax);
  Z = C - A.transpose() * yfull;
  Vec Z_ipm = eng.z * (scc / tau);

  S pv = C.dot(X) + cf.dot(xf) + S(problem.objective_offset);
  S dv = b.dot(yfull) + S(problem.objective_offset);
  sol.primal_value = static_cast<double>(pv);
  sol.dual_value = static_cast<double>(dv);
  sol.gap = static_cast<double>(std::abs(pv - dv) / (S(1) + std::abs(pv)));
  sol.primal_residual = static_cast<double>((Ax + Af * xf - b).norm() / (S(1) + b.norm()));
  S free_res = p > 0 ? (Af.transpose() * yfull - cf).norm() / (S(1) + cf.norm()) : S(0);
  S conic_res = (Z - Z_ipm).norm() / (S(1) + C.norm());
  sol.dual_residual = static_cast<double>(std::max(free_res, conic_res));
  sol.X = blocks_of(X);
  sol.Z = blocks_of(Z);
  sol.x_free = xf.template cast<double>();
  sol.y = yfull.template cast<double>();
  sol.min_eig_X = std::numeric_limits<double>::infinity();
  sol.min_eig_Z = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < L.sizes.size(); ++k) {
    sol.min_eig_X = std::min(sol.min_eig_X, min_eigenvalue(sol.X[k]));
    sol.min_eig_Z = std::min(sol.min_eig_Z, min_eigenvalue(sol.Z[k]));
  }
  if (L.sizes.empty()) sol.min_eig_X = sol.min_eig_Z = 0;
  return sol;
}

template SDPSolution solve_sdp<double>(const SDPProblem&, const SDPOptions&);
template SDPSolution solve_sdp<long double>(const SDPProblem&, const SDPOptions&);

void write_sdp(std::ostream& os, const SDPProblem& p) {
  os.precision(17);
  os << "sdp 1\nblocks " << p.block_sizes.size();
  for (std::size_t s : p.block_sizes) os << ' ' << s;
  os << "\nfree " << p.num_free << "\noffset " << p.objective_offset << '\n';
  for (const auto& e : p.objective) os << "c " << e.block << ' ' << e.i << ' ' << e.j << ' ' << e.value << '\n';
  for (std::size_t k = 0; k < p.free_objective.size(); ++k)
    if (p.free_objective[k] != 0) os << "cf " << k << ' ' << p.free_objective[k] << '\n';
  for (const auto& c : p.constraints) {
    os << "row " << c.rhs << '\n';
    for (const auto& e : c.entries) os << "a " << e.block << ' ' << e.i << ' ' << e.j << ' ' << e.value << '\n';
    for (const auto& [k, v] : c.free_coeffs) os << "af " << k << ' ' << v << '\n';
  }
}

SDPProblem read_sdp(std::istream& is) {
  SDPProblem p;
  std::string line;
  int lineno = 0;
  bool header = false;
  auto fail = [&](const std::string& what) {
    throw std::invalid_argument("sdp dump line " + std::to_string(lineno) + ": " + what);
  };
  while (std::getline(is, line)) {
    ++lineno;
    std::istringstream in(line);
    std::string tag;
    if (!(in >> tag) || tag[0] == '#') continue;
    if (!header) {
      int version = 0;
      if (tag != "sdp" || !(in >> version) || version != 1) fail("expected 'sdp 1'");
      header = true;
      continue;
    }
    if (tag == "blocks") {
      std::size_t count = 0;
      if (!(in >> count)) fail("bad block count");
      p.block_sizes.resize(count);
      for (auto& s : p.block_sizes)
        if (!(in >> s)) fail("missing block size");
    } else if (tag == "free") {
      if (!(in >> p.num_free)) fail("bad free count");
      p.free_objective.assign(p.num_free, 0.0);
    } else if (tag == "offset") {
      if (!(in >> p.objective_offset)) fail("bad offset");
    } else if (tag == "c" || tag == "a") {
      SDPEntry e;
      if (!(in >> e.block >> e.i >> e.j >> e.value)) fail("bad entry");
      if (tag == "c") p.objective.push_back(e);
      else if (p.constraints.empty()) fail("entry before any row");
      else p.constraints.back().entries.push_back(e);
    } else if (tag == "cf") {
      std::size_t k = 0;
      double v = 0;
      if (!(in >> k >> v) || k >= p.free_objective.size()) fail("bad free objective");
      p.free_objective[k] = v;
    } else if (tag == "row") {
      SDPConstraint c;
      if (!(in >> c.rhs)) fail("bad row");
      p.constraints.push_back(std::move(c));
    } else if (tag == "af") {
      std::size_t k = 0;
      double v = 0;
      if (!(in >> k >> v)) fail("bad free coefficient");
      if (p.constraints.empty()) fail("coefficient before any row");
      p.constraints.back().free_coeffs.emplace_back(k, v);
    } else {
      fail("unknown tag '" + tag + "'");
    }
  }
  if (!header) throw std::invalid_argument("sdp dump: empty input");
  p.validate();
  return p;
}

}  // namespace singular_sos
