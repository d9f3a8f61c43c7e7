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

#include "lgmr/qcore.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace lgmr {

namespace {

void require_square(const Matrix& m, const char* what) {
  if (m.rows() == 0 || m.rows() != m.cols()) {
    throw std::invalid_argument(std::string(what) + ": matrix must be square and non-empty");
  }
}

}  // namespace

double max_abs(const Matrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

bool is_hermitian(const Matrix& m, double tol) {
  return m.rows() == m.cols() && max_abs(m - m.adjoint()) <= tol;
}

bool is_idempotent(const Matrix& m, double tol) {
  return m.rows() == m.cols() && max_abs(m * m - m) <= tol;
}

// ---------------------------------------------------------------------------
// DensityOperator

DensityOperator::DensityOperator(Matrix matrix, const Tolerances& tol)
    : matrix_(std::move(matrix)) {
  require_square(matrix_, "DensityOperator");
  if (!is_hermitian(matrix_, tol.operator_tol)) {
    throw std::invalid_argument("DensityOperator: matrix is not Hermitian");
  }
  if (std::abs(matrix_.trace() - Complex(1.0)) > tol.operator_tol) {
    throw std::invalid_argument("DensityOperator: trace differs from 1");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(matrix_, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -tol.psd_tol) {
    throw std::invalid_argument("DensityOperator: matrix is not positive semidefinite");
  }
}

DensityOperator DensityOperator::maximally_mixed(std::size_t dim) {
  if (dim == 0) throw std::invalid_argument("DensityOperator: dim must be positive");
  const auto n = static_cast<Eigen::Index>(dim);
  return DensityOperator(Matrix::Identity(n, n) / static_cast<double>(dim));
}

DensityOperator DensityOperator::pure(const Vector& psi) {
  const double norm = psi.norm();
  if (psi.size() == 0 || norm == 0.0) {
    throw std::invalid_argument("DensityOperator: state vector must be non-zero");
  }
  const Vector v = psi / norm;
  return DensityOperator(v * v.adjoint());
}

DensityOperator DensityOperator::basis_state(std::size_t dim, std::size_t index) {
  if (index >= dim) throw std::invalid_argument("DensityOperator: basis index out of range");
  Vector v = Vector::Zero(static_cast<Eigen::Index>(dim));
  v(static_cast<Eigen::Index>(index)) = 1.0;
  return pure(v);
}

DensityOperator DensityOperator::normalized(const Matrix& matrix, const Tolerances& tol) {
  require_square(matrix, "DensityOperator");
  const Matrix herm = 0.5 * (matrix + matrix.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> es(herm);
  RealVector ev = es.eigenvalues();
  if (ev.minCoeff() < -tol.psd_tol) {
    throw std::invalid_argument("DensityOperator: eigenvalue below PSD tolerance");
  }
  ev = ev.cwiseMax(0.0);
  const double total = ev.sum();
  if (total <= 0.0) throw std::invalid_argument("DensityOperator: zero trace");
  ev /= total;
  Matrix rho = es.eigenvectors() * ev.cast<Complex>().asDiagonal() * es.eigenvectors().adjoint();
  rho = 0.5 * (rho + rho.adjoint());
  return DensityOperator(std::move(rho), tol);
}

double DensityOperator::purity() const {
  return (matrix_ * matrix_).trace().real();
}

// ---------------------------------------------------------------------------
// Hamiltonian

Hamiltonian::Hamiltonian(Matrix matrix, const Tolerances& tol) : matrix_(std::move(matrix)) {
  require_square(matrix_, "Hamiltonian");
  if (!is_hermitian(matrix_, tol.operator_tol)) {
    throw std::invalid_argument("Hamiltonian: matrix is not Hermitian");
  }
  matrix_ = 0.5 * (matrix_ + matrix_.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> es(matrix_);
  eigenvalues_ = es.eigenvalues();
  eigenvectors_ = es.eigenvectors();
}

Hamiltonian Hamiltonian::zero(std::size_t dim) {
  if (dim == 0) throw std::invalid_argument("Hamiltonian: dim must be positive");
  const auto n = static_cast<Eigen::Index>(dim);
  return Hamiltonian(Matrix::Zero(n, n));
}

Matrix Hamiltonian::propagator(double t) const {
  Vector phases(eigenvalues_.size());
  for (Eigen::Index k = 0; k < eigenvalues_.size(); ++k) {
    phases(k) = std::polar(1.0, -eigenvalues_(k) * t);
  }
  return eigenvectors_ * phases.asDiagonal() * eigenvectors_.adjoint();
}

// ---------------------------------------------------------------------------
// ProjectiveDecomposition

ProjectiveDecomposition::ProjectiveDecomposition(std::vector<Matrix> projectors,
                                                 const Tolerances& tol)
    : projectors_(std::move(projectors)) {
  if (projectors_.empty()) {
    throw std::invalid_argument("ProjectiveDecomposition: no projectors");
  }
  require_square(projectors_.front(), "ProjectiveDecomposition");
  dim_ = static_cast<std::size_t>(projectors_.front().rows());
  if (projectors_.size() > dim_) {
    throw std::invalid_argument("ProjectiveDecomposition: more projectors than dimensions");
  }
  const auto n = static_cast<Eigen::Index>(dim_);
  Matrix total = Matrix::Zero(n, n);
  for (std::size_t a = 0; a < projectors_.size(); ++a) {
    const Matrix& e = projectors_[a];
    if (e.rows() != n || e.cols() != n) {
      throw std::invalid_argument("ProjectiveDecomposition: dimension mismatch");
    }
    if (!is_hermitian(e, tol.operator_tol) || !is_idempotent(e, tol.operator_tol)) {
      throw std::invalid_argument("ProjectiveDecomposition: element " + std::to_string(a) +
                                  " is not an orthogonal projector");
    }
    if (std::abs(e.trace()) < 0.5) {
      throw std::invalid_argument("ProjectiveDecomposition: zero projector");
    }
    for (std::size_t b = 0; b < a; ++b) {
      if (max_abs(e * projectors_[b]) > tol.operator_tol) {
        throw std::invalid_argument("ProjectiveDecomposition: projectors not orthogonal");
      }
    }
    total += e;
  }
  if (max_abs(total - Matrix::Identity(n, n)) > tol.operator_tol) {
    throw std::invalid_argument("ProjectiveDecomposition: projectors do not sum to identity");
  }
}

Matrix ProjectiveDecomposition::negation(std::size_t n) const {
  const auto d = static_cast<Eigen::Index>(dim_);
  return Matrix::Identity(d, d) - projectors_.at(n);
}

ProjectiveDecomposition ProjectiveDecomposition::conjugated(const Matrix& unitary) const {
  const auto d = static_cast<Eigen::Index>(dim_);
  if (unitary.rows() != d || unitary.cols() != d) {
    throw std::invalid_argument("ProjectiveDecomposition: unitary dimension mismatch");
  }
  if (max_abs(unitary * unitary.adjoint() - Matrix::Identity(d, d)) > 1e-10) {
    throw std::invalid_argument("ProjectiveDecomposition: basis change is not unitary");
  }
  std::vector<Matrix> out;
  out.reserve(projectors_.size());
  for (const Matrix& e : projectors_) {
    Matrix r = unitary * e * unitary.adjoint();
    out.push_back(0.5 * (r + r.adjoint()));
  }
  return ProjectiveDecomposition(std::move(out));
}

ProjectiveDecomposition build_decomposition(std::size_t dim, std::span<const std::size_t> ranks,
                                            const std::optional<Matrix>& unitary) {
  if (dim == 0) throw std::invalid_argument("build_decomposition: dim must be positive");
  if (ranks.empty()) throw std::invalid_argument("build_decomposition: no ranks given");
  if (std::find(ranks.begin(), ranks.end(), std::size_t{0}) != ranks.end()) {
    throw std::invalid_argument("build_decomposition: zero rank");
  }
  if (std::accumulate(ranks.begin(), ranks.end(), std::size_t{0}) != dim) {
    throw std::invalid_argument("build_decomposition: ranks do not sum to dim");
  }
  const auto d = static_cast<Eigen::Index>(dim);
  std::vector<Matrix> projectors;
  Eigen::Index offset = 0;
  for (std::size_t r : ranks) {
    Matrix e = Matrix::Zero(d, d);
    const auto len = static_cast<Eigen::Index>(r);
    e.block(offset, offset, len, len).setIdentity();
    projectors.push_back(std::move(e));
    offset += len;
  }
  ProjectiveDecomposition dec(std::move(projectors));
  return unitary ? dec.conjugated(*unitary) : dec;
}

ProjectiveDecomposition fine_decomposition(std::size_t dim) {
  const std::vector<std::size_t> ranks(dim, 1);
  return build_decomposition(dim, ranks);
}

// ---------------------------------------------------------------------------
// Dichotomic observables

namespace {

void validate_signs(const ProjectiveDecomposition& dec, const SignPattern& signs) {
  if (signs.size() != dec.size()) {
    throw std::invalid_argument("dichotomic: sign list length must equal the number of projectors");
  }
  bool has_plus = false;
  bool has_minus = false;
  for (int s : signs) {
    if (s == 1) {
      has_plus = true;
    } else if (s == -1) {
      has_minus = true;
    } else {
      throw std::invalid_argument("dichotomic: signs must be +1 or -1");
    }
  }
  if (!has_plus || !has_minus) {
    throw std::invalid_argument("dichotomic: need at least one +1 and one -1");
  }
}

}  // namespace

DichotomicObservable::DichotomicObservable(ProjectiveDecomposition decomposition, SignPattern signs)
    : decomposition_(std::move(decomposition)), signs_(std::move(signs)) {
  validate_signs(decomposition_, signs_);
  const auto d = static_cast<Eigen::Index>(decomposition_.dim());
  plus_ = Matrix::Zero(d, d);
  minus_ = Matrix::Zero(d, d);
  for (std::size_t n = 0; n < signs_.size(); ++n) {
    (signs_[n] > 0 ? plus_ : minus_) += decomposition_[n];
  }
  op_ = plus_ - minus_;
}

ProjectiveDecomposition DichotomicObservable::luders_decomposition() const {
  return ProjectiveDecomposition({plus_, minus_});
}

DichotomicObservable make_dichotomic(const ProjectiveDecomposition& dec, SignPattern signs) {
  return DichotomicObservable(dec, std::move(signs));
}

DichotomicObservable single_plus(const ProjectiveDecomposition& dec, std::size_t n) {
  if (n >= dec.size()) throw std::invalid_argument("single_plus: outcome index out of range");
  SignPattern signs(dec.size(), -1);
  signs[n] = 1;
  return DichotomicObservable(dec, std::move(signs));
}

std::vector<DichotomicObservable> single_plus_family(const ProjectiveDecomposition& dec) {
  std::vector<DichotomicObservable> out;
  out.reserve(dec.size());
  for (std::size_t n = 0; n < dec.size(); ++n) out.push_back(single_plus(dec, n));
  return out;
}

CoarseGraining coarse_grain(const ProjectiveDecomposition& dec, const SignPattern& signs) {
  validate_signs(dec, signs);
  const auto d = static_cast<Eigen::Index>(dec.dim());
  CoarseGraining cg{Matrix::Zero(d, d), Matrix::Zero(d, d),
                    Eigen::MatrixXi::Zero(2, static_cast<Eigen::Index>(dec.size()))};
  for (std::size_t n = 0; n < signs.size(); ++n) {
    const auto col = static_cast<Eigen::Index>(n);
    if (signs[n] > 0) {
      cg.plus += dec[n];
      cg.coefficients(0, col) = 1;
    } else {
      cg.minus += dec[n];
      cg.coefficients(1, col) = 1;
    }
  }
  return cg;
}

// ---------------------------------------------------------------------------
// Evolution

Matrix heisenberg_evolve(const Matrix& op, const Hamiltonian& h, double t) {
  if (op.rows() != op.cols() || static_cast<std::size_t>(op.rows()) != h.dim()) {
    throw std::invalid_argument("heisenberg_evolve: dimension mismatch");
  }
  if (t == 0.0) return op;
  const Matrix u = h.propagator(t);
  Matrix out = u.adjoint() * op * u;
  if (is_hermitian(op, 1e-14)) out = 0.5 * (out + out.adjoint());
  return out;
}

ProjectiveDecomposition heisenberg_evolve(const ProjectiveDecomposition& dec, const Hamiltonian& h,
                                          double t) {
  if (dec.dim() != h.dim()) throw std::invalid_argument("heisenberg_evolve: dimension mismatch");
  if (t == 0.0) return dec;
  // e^{iHt} E e^{-iHt} = U^dagger E U with U = e^{-iHt}.
  return dec.conjugated(h.propagator(t).adjoint());
}

// ---------------------------------------------------------------------------
// Schedule

Schedule::Schedule(std::vector<double> times) : times_(std::move(times)) {
  if (times_.empty() || times_.size() > kMaxTimes) {
    throw std::invalid_argument("Schedule: between 1 and 4 times required");
  }
  for (double t : times_) {
    if (!std::isfinite(t)) throw std::invalid_argument("Schedule: non-finite time");
  }
  for (std::size_t i = 1; i < times_.size(); ++i) {
    if (!(times_[i] > times_[i - 1])) {
      throw std::invalid_argument("Schedule: times must be strictly increasing");
    }
  }
}

Schedule Schedule::subset(std::span<const std::size_t> positions) const {
  std::vector<double> out;
  out.reserve(positions.size());
  for (std::size_t p : positions) out.push_back(times_.at(p));
  return Schedule(std::move(out));
}

Matrix spin_operator(std::size_t dim, char axis) {
  if (dim < 2) throw std::invalid_argument("spin_operator: dim must be at least 2");
  const auto d = static_cast<Eigen::Index>(dim);
  const double j = 0.5 * static_cast<double>(dim - 1);
  Matrix jz = Matrix::Zero(d, d);
  Matrix jp = Matrix::Zero(d, d);
  // Basis ordered m = j, j-1, ..., -j.
  for (Eigen::Index k = 0; k < d; ++k) {
    const double m = j - static_cast<double>(k);
    jz(k, k) = m;
    if (k > 0) jp(k - 1, k) = std::sqrt(j * (j + 1) - m * (m + 1));
  }
  switch (axis) {
    case 'x':
      return 0.5 * (jp + jp.adjoint());
    case 'y':
      return Complex(0.0, -0.5) * (jp - jp.adjoint());
    case 'z':
      return jz;
    default:
      throw std::invalid_argument("spin_operator: axis must be x, y or z");
  }
}

}  // namespace lgmr
