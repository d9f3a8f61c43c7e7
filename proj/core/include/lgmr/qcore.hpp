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

#pragma once

// Dense complex linear algebra for N-level systems: states, Hamiltonians,
// projective decompositions and dichotomic observables built on them.
// All types are immutable once constructed; operations are pure.

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace lgmr {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

/// Numerical tolerances for operator-valued invariants.
struct Tolerances {
  /// Max-norm tolerance for Hermiticity, idempotency, orthogonality, trace.
  double operator_tol = 1e-10;
  /// Smallest eigenvalue accepted as positive semidefinite.
  double psd_tol = 1e-10;
};

/// Process-wide defaults. Read-only; override per call instead.
inline constexpr Tolerances kDefaultTolerances{};

double max_abs(const Matrix& m);
bool is_hermitian(const Matrix& m, double tol = kDefaultTolerances.operator_tol);
bool is_idempotent(const Matrix& m, double tol = kDefaultTolerances.operator_tol);

/// Hermitian, unit-trace, positive semidefinite operator.
class DensityOperator {
 public:
  /// Validates `matrix`; throws std::invalid_argument on any violated invariant.
  explicit DensityOperator(Matrix matrix, const Tolerances& tol = kDefaultTolerances);

  static DensityOperator maximally_mixed(std::size_t dim);
  static DensityOperator pure(const Vector& psi);
  static DensityOperator basis_state(std::size_t dim, std::size_t index);
  /// Hermitizes, clips eigenvalues below zero (those within psd_tol only)
  /// and renormalizes the trace.
  static DensityOperator normalized(const Matrix& matrix,
                                    const Tolerances& tol = kDefaultTolerances);

  std::size_t dim() const { return static_cast<std::size_t>(matrix_.rows()); }
  const Matrix& matrix() const { return matrix_; }
  double purity() const;

 private:
  Matrix matrix_;
};

/// Time-independent Hermitian generator (hbar = 1). The spectral
/// decomposition is computed once at construction.
class Hamiltonian {
 public:
  explicit Hamiltonian(Matrix matrix, const Tolerances& tol = kDefaultTolerances);

  static Hamiltonian zero(std::size_t dim);

  std::size_t dim() const { return static_cast<std::size_t>(matrix_.rows()); }
  const Matrix& matrix() const { return matrix_; }
  const RealVector& eigenvalues() const { return eigenvalues_; }
  const Matrix& eigenvectors() const { return eigenvectors_; }

  /// exp(-iHt).
  Matrix propagator(double t) const;

 private:
  Matrix matrix_;
  RealVector eigenvalues_;
  Matrix eigenvectors_;
};

/// Ordered complete set of mutually orthogonal projectors.
class ProjectiveDecomposition {
 public:
  explicit ProjectiveDecomposition(std::vector<Matrix> projectors,
                                   const Tolerances& tol = kDefaultTolerances);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return projectors_.size(); }
  const Matrix& operator[](std::size_t n) const { return projectors_[n]; }
  const std::vector<Matrix>& projectors() const { return projectors_; }

  /// 1 - E_n.
  Matrix negation(std::size_t n) const;
  /// U E_n U^dagger for every projector.
  ProjectiveDecomposition conjugated(const Matrix& unitary) const;

 private:
  std::size_t dim_ = 0;
  std::vector<Matrix> projectors_;
};

/// Projectors onto consecutive blocks of the computational basis, optionally
/// rotated as U E U^dagger.
ProjectiveDecomposition build_decomposition(std::size_t dim,
                                            std::span<const std::size_t> ranks,
                                            const std::optional<Matrix>& unitary = std::nullopt);

/// Rank-1 projectors onto the computational basis.
ProjectiveDecomposition fine_decomposition(std::size_t dim);

using SignPattern = std::vector<int>;

/// Q = sum_n eps(n) E_n with eps(n) = +/-1 and both signs present.
class DichotomicObservable {
 public:
  DichotomicObservable(ProjectiveDecomposition decomposition, SignPattern signs);

  const ProjectiveDecomposition& decomposition() const { return decomposition_; }
  const SignPattern& signs() const { return signs_; }
  int sign(std::size_t n) const { return signs_[n]; }
  std::size_t dim() const { return decomposition_.dim(); }
  const Matrix& op() const { return op_; }
  /// Projectors onto the +1 and -1 eigenspaces.
  const Matrix& plus() const { return plus_; }
  const Matrix& minus() const { return minus_; }
  /// The two-outcome decomposition (P+, P-) used by a Lueders measurement.
  ProjectiveDecomposition luders_decomposition() const;

 private:
  ProjectiveDecomposition decomposition_;
  SignPattern signs_;
  Matrix op_;
  Matrix plus_;
  Matrix minus_;
};

DichotomicObservable make_dichotomic(const ProjectiveDecomposition& dec, SignPattern signs);

/// Q(n) = E_n - (1 - E_n).
DichotomicObservable single_plus(const ProjectiveDecomposition& dec, std::size_t n);
std::vector<DichotomicObservable> single_plus_family(const ProjectiveDecomposition& dec);

/// Result of grouping a decomposition by sign: P_s = sum_n c_{sn} E_n.
struct CoarseGraining {
  Matrix plus;
  Matrix minus;
  /// Row 0 is s = +1, row 1 is s = -1; entries are 0 or 1.
  Eigen::MatrixXi coefficients;
};

CoarseGraining coarse_grain(const ProjectiveDecomposition& dec, const SignPattern& signs);

/// e^{iHt} E e^{-iHt}.
Matrix heisenberg_evolve(const Matrix& op, const Hamiltonian& h, double t);
ProjectiveDecomposition heisenberg_evolve(const ProjectiveDecomposition& dec,
                                          const Hamiltonian& h, double t);

/// Strictly increasing measurement times, one to four of them.
class Schedule {
 public:
  explicit Schedule(std::vector<double> times);

  std::size_t size() const { return times_.size(); }
  double operator[](std::size_t i) const { return times_[i]; }
  const std::vector<double>& times() const { return times_; }
  /// The sub-schedule at the given (increasing) positions.
  Schedule subset(std::span<const std::size_t> positions) const;

  static constexpr std::size_t kMaxTimes = 4;

 private:
  std::vector<double> times_;
};

/// Spin-j operator J_x, J_y or J_z for dim = 2j + 1, axis in {'x','y','z'}.
Matrix spin_operator(std::size_t dim, char axis);

}  // namespace lgmr
