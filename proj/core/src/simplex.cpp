// Copyright 2026 The lgmr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lgmr/simplex.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include <Eigen/QR>

namespace lgmr {

// Standard form over z = (x, u, w, a):
//   sign_i (A_i x - u_i) + a_i = sign_i (b_i - band)    i < m
//   u_i + w_i = 2 band
// with every variable nonnegative and phase-1 cost sum(a).
SimplexResult phase1_feasibility(const RealMatrix& a, const RealVector& b,
                                 const SimplexOptions& options) {
  const Eigen::Index m = a.rows();
  const Eigen::Index n = a.cols();
  if (b.size() != m) throw std::invalid_argument("phase1_feasibility: A and b disagree");
  if (m == 0 || n == 0) throw std::invalid_argument("phase1_feasibility: empty system");
  const double band = options.band;
  const Eigen::Index u0 = n;
  const Eigen::Index w0 = n + m;
  const Eigen::Index a0 = n + 2 * m;
  const Eigen::Index cols = n + 3 * m;
  const Eigen::Index rows = 2 * m;

  RealMatrix t = RealMatrix::Zero(rows, cols);
  RealVector rhs(rows);
  std::vector<double> sign(static_cast<std::size_t>(m));
  std::vector<Eigen::Index> basis(static_cast<std::size_t>(rows));
  for (Eigen::Index i = 0; i < m; ++i) {
    const double s = b(i) - band >= 0.0 ? 1.0 : -1.0;
    sign[static_cast<std::size_t>(i)] = s;
    t.row(i).head(n) = s * a.row(i);
    t(i, u0 + i) = -s;
    t(i, a0 + i) = 1.0;
    rhs(i) = s * (b(i) - band);
    basis[static_cast<std::size_t>(i)] = a0 + i;

    t(m + i, u0 + i) = 1.0;
    t(m + i, w0 + i) = 1.0;
    rhs(m + i) = 2.0 * band;
    basis[static_cast<std::size_t>(m + i)] = w0 + i;
  }
  RealVector cost = RealVector::Zero(cols);
  cost.tail(m).setOnes();
  // Reduced costs d = c - c_B^T T, kept in step with the tableau.
  RealVector d = cost - t.topRows(m).colwise().sum().transpose();

  SimplexResult result;
  while (true) {
    Eigen::Index enter = -1;
    for (Eigen::Index j = 0; j < cols; ++j) {
      if (d(j) < -options.pivot_tol) {
        enter = j;
        break;
      }
    }
    if (enter < 0) break;
    Eigen::Index leave = -1;
    double best = 0.0;
    for (Eigen::Index i = 0; i < rows; ++i) {
      const double piv = t(i, enter);
      if (piv <= options.pivot_tol) continue;
      const double ratio = rhs(i) / piv;
      if (leave < 0 || ratio < best - 1e-15 ||
          (ratio <= best + 1e-15 &&
           basis[static_cast<std::size_t>(i)] < basis[static_cast<std::size_t>(leave)])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave < 0) throw std::runtime_error("phase1_feasibility: unbounded phase-1 problem");
    if (++result.pivots > options.max_pivots) {
      throw std::runtime_error("phase1_feasibility: pivot limit reached");
    }
    const double piv = t(leave, enter);
    t.row(leave) /= piv;
    rhs(leave) /= piv;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == leave) continue;
      const double f = t(i, enter);
      if (f == 0.0) continue;
      t.row(i) -= f * t.row(leave);
      rhs(i) -= f * rhs(leave);
    }
    d -= d(enter) * t.row(leave).transpose();
    basis[static_cast<std::size_t>(leave)] = enter;
  }

  double objective = 0.0;
  for (Eigen::Index i = 0; i < rows; ++i) {
    if (basis[static_cast<std::size_t>(i)] >= a0) objective += rhs(i);
  }
  result.phase1_objective = objective;
  result.feasible = objective <= options.feasibility_tol;
  if (result.feasible) {
    result.x = RealVector::Zero(n);
    for (Eigen::Index i = 0; i < rows; ++i) {
      const Eigen::Index j = basis[static_cast<std::size_t>(i)];
      if (j < n) result.x(j) = rhs(i);
    }
  } else {
    // Duals y_i = c_k - d_k over each row's starting identity column k.
    result.certificate.resize(m);
    for (Eigen::Index i = 0; i < m; ++i) {
      result.certificate(i) = sign[static_cast<std::size_t>(i)] * (1.0 - d(a0 + i));
    }
  }
  return result;
}

bool polish_solution(const RealMatrix& a, const RealVector& b, RealVector& x, double tol) {
  std::vector<Eigen::Index> support;
  for (Eigen::Index j = 0; j < x.size(); ++j) {
    if (x(j) > 0.0) support.push_back(j);
  }
  if (support.empty()) return false;
  RealMatrix as(a.rows(), static_cast<Eigen::Index>(support.size()));
  for (std::size_t k = 0; k < support.size(); ++k) {
    as.col(static_cast<Eigen::Index>(k)) = a.col(support[k]);
  }
  const RealVector xs = Eigen::CompleteOrthogonalDecomposition<RealMatrix>(as).solve(b);
  if ((as * xs - b).cwiseAbs().maxCoeff() > tol || xs.minCoeff() < -tol) return false;
  RealVector polished = RealVector::Zero(x.size());
  for (std::size_t k = 0; k < support.size(); ++k) {
    polished(support[k]) = std::max(0.0, xs(static_cast<Eigen::Index>(k)));
  }
  x = std::move(polished);
  return true;
}

}  // namespace lgmr
