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

// Sequential-measurement probabilities, quasi-probabilities and the
// decoherence functional over histories of projective measurements.
//
// A history alpha = (n_1, ..., n_k) is represented by the class operator
//   C_alpha = E_{n_k}(t_k) ... E_{n_1}(t_1)
// with Heisenberg-picture projectors. Then
//   p(alpha)         = Tr(C_alpha rho C_alpha^dagger)
//   q(alpha)         = Re Tr(C_alpha rho)
//   D(alpha, alpha') = Tr(C_alpha rho C_alpha'^dagger)
// and q(alpha) = p(alpha) + sum_{alpha' != alpha} Re D(alpha, alpha').

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "lgmr/history_table.hpp"
#include "lgmr/qcore.hpp"

namespace lgmr {

enum class MeasurementPolicy { Luders, VonNeumann };

/// Largest history count accepted by decoherence_functional (the table is
/// count x count complex).
inline constexpr std::size_t kMaxDecoherenceHistories = 2048;

std::vector<double> single_time_prob(const DensityOperator& rho,
                                     const ProjectiveDecomposition& dec,
                                     const Hamiltonian& h, double t);

/// One decomposition per scheduled time, or a single one reused at every time.
HistoryTable sequential_prob(const DensityOperator& rho, const Schedule& schedule,
                             std::span<const ProjectiveDecomposition> decompositions,
                             const Hamiltonian& h);

HistoryTable quasi_prob(const DensityOperator& rho, const Schedule& schedule,
                        std::span<const ProjectiveDecomposition> decompositions,
                        const Hamiltonian& h);

/// Full decoherence functional over ordered history pairs.
class DecoherenceRecord {
 public:
  DecoherenceRecord(Schedule schedule, std::vector<std::size_t> shape, Matrix table);

  const Schedule& schedule() const { return schedule_; }
  const std::vector<std::size_t>& shape() const { return shape_; }
  std::size_t arity() const { return shape_.size(); }
  std::size_t history_count() const { return static_cast<std::size_t>(table_.rows()); }
  const Matrix& table() const { return table_; }

  Complex operator()(std::span<const std::size_t> a, std::span<const std::size_t> b) const;
  Complex operator()(std::initializer_list<std::size_t> a,
                     std::initializer_list<std::size_t> b) const {
    return (*this)(std::span<const std::size_t>(a.begin(), a.size()),
                   std::span<const std::size_t>(b.begin(), b.size()));
  }

  /// D(alpha, alpha): the sequential probabilities.
  HistoryTable diagonal() const;
  /// sum_{alpha'} Re D(alpha, alpha'): the quasi-probability.
  HistoryTable row_sums() const;
  /// Probability of the final-time outcome with no earlier measurement.
  std::vector<double> undisturbed_final() const;

  /// Regroups the outcomes of time slot `slot`: D' = sum c c D with
  /// groups(g, n) in {0, 1} and every outcome in exactly one group.
  DecoherenceRecord coarse_grained(std::size_t slot, const Eigen::MatrixXi& groups) const;

 private:
  std::size_t flat(std::span<const std::size_t> h) const;

  Schedule schedule_;
  std::vector<std::size_t> shape_;
  Matrix table_;
};

DecoherenceRecord decoherence_functional(const DensityOperator& rho, const Schedule& schedule,
                                         std::span<const ProjectiveDecomposition> decompositions,
                                         const Hamiltonian& h);

/// I_{n n'}(m) = Re D(n, m | n', m) for n != n' (symmetric in n, n').
class InterferenceTable {
 public:
  InterferenceTable(std::size_t first_outcomes, std::size_t final_outcomes);

  std::size_t first_outcomes() const { return first_; }
  std::size_t final_outcomes() const { return final_; }
  std::size_t pair_count() const { return first_ * (first_ - 1) / 2; }
  /// Entries left free by sum_m I_{n n'}(m) = 0: pairs x (final - 1),
  /// i.e. N (N - 1)^2 / 2 for equal outcome counts.
  std::size_t independent_count() const { return pair_count() * (final_ - 1); }

  double operator()(std::size_t n, std::size_t n_prime, std::size_t m) const;
  double& entry(std::size_t n, std::size_t n_prime, std::size_t m);
  /// sum_m I_{n n'}(m).
  double pair_sum(std::size_t n, std::size_t n_prime) const;
  double max_abs() const;

 private:
  std::size_t index(std::size_t n, std::size_t n_prime, std::size_t m) const;

  std::size_t first_;
  std::size_t final_;
  std::vector<double> values_;
};

InterferenceTable interference_terms(const DecoherenceRecord& record);

/// p_2(m) - sum_{first} p_12(., m). With `signs`, the first time is measured
/// by the two-outcome coarse-graining of those signs instead.
std::vector<double> coherence_witness(const DecoherenceRecord& record,
                                      const std::optional<SignPattern>& signs = std::nullopt);

// ---------------------------------------------------------------------------
// Correlators

double expectation(const DensityOperator& rho, const Hamiltonian& h, double t,
                   const DichotomicObservable& q);

/// (1/2) <Q_i Q_j + Q_j Q_i> with Heisenberg operators at t_i and t_j.
double correlator_luders(const DensityOperator& rho, const Hamiltonian& h, double ti, double tj,
                         const DichotomicObservable& qi, const DichotomicObservable& qj);

/// sum eps_i(n_i) eps_j(n_j) p_ij(n_i, n_j) from degeneracy-breaking
/// measurements in each observable's own decomposition.
double correlator_vn(const DensityOperator& rho, const Hamiltonian& h, double ti, double tj,
                     const DichotomicObservable& qi, const DichotomicObservable& qj);
double correlator_vn(const DensityOperator& rho, const Hamiltonian& h, double ti, double tj,
                     const ProjectiveDecomposition& dec, const SignPattern& signs);

/// sum_{n != n'} sum_m eps_i(n) eps_j(m) I_{n n'}(m): the amount by which the
/// Lueders correlator exceeds the von Neumann one.
double vn_luders_gap(const InterferenceTable& interference, const SignPattern& first_signs,
                     const SignPattern& final_signs);

/// Averages and correlators of the single-+1 dichotomics Q(n) = 2 E_n - 1
/// at two times.
struct PairMoments {
  RealVector first_i;
  RealVector first_j;
  RealMatrix corr;

  std::size_t outcomes_i() const { return static_cast<std::size_t>(first_i.size()); }
  std::size_t outcomes_j() const { return static_cast<std::size_t>(first_j.size()); }
};

/// Moments of a two-time table (the Lueders set when fed a quasi table).
PairMoments moments_from_table(const HistoryTable& two_time);

/// First moments are always undisturbed single-time averages; correlators
/// follow `policy`.
PairMoments pair_moments(const DensityOperator& rho, const Hamiltonian& h, double ti, double tj,
                         const ProjectiveDecomposition& dec_i,
                         const ProjectiveDecomposition& dec_j, MeasurementPolicy policy);

/// Two-time table reconstructed from moments: (1 + m_i + m_j + C) / 4 per entry.
HistoryTable table_from_moments(const PairMoments& m);

/// Moments of one dichotomic observable per time (2 or 3 times), including
/// the averages and correlators dressed by earlier or intermediate
/// measurements. Tables are indexed 0 -> s = +1, 1 -> s = -1.
struct CorrelatorSet {
  MeasurementPolicy policy = MeasurementPolicy::Luders;
  std::vector<double> first;    // <Q_i>
  RealMatrix pair;              // C_ij, unit diagonal
  std::optional<double> triple; // read off the three-time quasi-probability
  std::optional<double> triple_sequential;  // same moment of p_123

  std::optional<double> q2_after_1;   // <Q_2^{(1)}>
  std::optional<double> q3_after_12;  // <Q_3^{(12)}>
  std::optional<double> c23_after_1;  // C_23^{(1)}
  std::optional<double> c13_after_2;  // C_13^{(2)}

  HistoryTable quasi;       // q(s_1, ..., s_k)
  HistoryTable sequential;  // p(s_1, ..., s_k)
};

CorrelatorSet dressed_moments(const DensityOperator& rho, const Hamiltonian& h,
                              const Schedule& schedule,
                              std::span<const DichotomicObservable> observables);

/// Rebuilds q(s...) from first moments, C_ij and the quasi triple moment.
HistoryTable quasi_from_moments(const CorrelatorSet& set);
/// Rebuilds p(s...) from first/dressed moments and the sequential triple moment.
HistoryTable sequential_from_moments(const CorrelatorSet& set);

/// Split of L_1 = 1 + C_12 + C_13 + C_23 into a manifestly non-negative
/// sequential part and the two dressed-correlator corrections.
struct L1Decomposition {
  double direct = 0.0;
  double sequential_part = 0.0;
  double c23_correction = 0.0;
  double c13_correction = 0.0;
  double reassembled() const { return sequential_part + c23_correction + c13_correction; }
};

L1Decomposition l1_decomposition(const CorrelatorSet& three_time);

}  // namespace lgmr
