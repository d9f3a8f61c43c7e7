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

// Joint-probability feasibility for pairwise marginals, the per-tuple
// triple-correlator interval and the four-time Fine ansatz.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "lgmr/histories.hpp"
#include "lgmr/mrconds.hpp"
#include "lgmr/simplex.hpp"

namespace lgmr {

struct Scenario;

/// Pairwise tables (and the single-time vectors they imply) over three or
/// four times. Entries may be negative.
struct MarginalSet {
  std::size_t outcomes = 0;
  std::size_t times = 3;
  std::vector<TimePair> pairs;
  std::vector<HistoryTable> tables;  // parallel to pairs, axes (t_i, t_j)
  std::vector<std::vector<double>> singles;

  /// Largest disagreement between single-time vectors read off different
  /// tables.
  double single_time_mismatch() const;
  double min_entry() const;
};

/// Pairs (12), (23), (13) for three times; (12), (23), (34), (14) and (13)
/// for four.
MarginalSet marginals_from_moments(const ScheduleMoments& m);
/// Builds a set from explicit tables; singles are read off the first table
/// containing each time.
MarginalSet make_marginal_set(std::size_t outcomes, std::size_t times,
                              std::vector<TimePair> pairs, std::vector<HistoryTable> tables);
/// The marginals of a joint table for the given pairs.
MarginalSet marginals_of_joint(const HistoryTable& joint, std::span<const TimePair> pairs);

struct FeasibilityResult {
  bool feasible = false;
  std::optional<HistoryTable> joint;
  /// Farkas weights on the marginal entries (table by table, row-major):
  /// sum_k y_k [joint maps to entry k] <= 0 for every joint cell while
  /// sum_k y_k p_k > 0.
  std::vector<double> certificate;
  double certificate_value = 0.0;
  double phase1_objective = 0.0;
  bool polished = false;
};

struct FeasibilityOptions {
  SimplexOptions simplex{};
  /// Single-time marginals must agree to this tolerance.
  double consistency_tol = 1e-9;
  /// Re-solve the support exactly when possible.
  bool polish = true;
};

/// Linear feasibility of {joint >= 0, joint matches every pair table}.
FeasibilityResult joint_feasibility(const MarginalSet& marginals,
                                    const FeasibilityOptions& options = {});

/// Second oracle for two-outcome sets: enumerates basic solutions of the
/// exact equality system.
bool vertex_feasible(const MarginalSet& marginals, double tol = 1e-9);

/// Max of the four lower bounds and min of the four upper bounds on
/// <Q_1(n_1) Q_2(n_2) Q_3(n_3)>.
struct TripleBoundInterval {
  std::array<std::size_t, 3> indices{};
  std::array<double, 4> lower_bounds{};  // s1 s2 s3 = +1: (+++), (+--), (-+-), (--+)
  std::array<double, 4> upper_bounds{};  // s1 s2 s3 = -1: (---), (-++), (+-+), (++-)
  double lower = 0.0;
  double upper = 0.0;
  bool nonempty(double tol = kReportTol) const { return lower <= upper + tol; }
};

TripleBoundInterval triple_interval(const PairMoments& c12, const PairMoments& c23,
                                    const PairMoments& c13, std::size_t n1, std::size_t n2,
                                    std::size_t n3);
std::vector<TripleBoundInterval> triple_intervals(const ScheduleMoments& m);

/// p(n1,n2,n3,n4) = p(n1,n2,n3) p(n1,n3,n4) / p(n1,n3), with 0 where the
/// shared marginal vanishes.
HistoryTable fine_ansatz_join(const HistoryTable& p123, const HistoryTable& p134,
                              double tol = 1e-9);

/// Result for one audited scenario.
struct AuditRecord {
  std::uint64_t seed = 0;
  bool lg_verdict = false;        // lg2 on all pairs and lg3 (+ + +)
  bool lg_full_verdict = false;   // lg2 on all pairs and all four lg3 flip classes
  bool feasible = false;
  double worst_lg_margin = 0.0;       // over the lg_verdict reports
  double worst_full_margin = 0.0;     // over the lg_full_verdict reports
  bool in_band = false;   // |worst_lg_margin| <= band
  bool mismatch = false;  // robust disagreement of lg_verdict and feasible
  bool full_mismatch = false;
};

struct AuditReport {
  std::vector<AuditRecord> records;
  std::size_t robust_mismatches = 0;
  std::size_t band_excluded = 0;
  std::size_t full_robust_mismatches = 0;
  std::size_t infeasible = 0;
  bool passed() const { return robust_mismatches == 0; }
};

struct AuditOptions {
  double band = 1e-7;
  unsigned threads = 0;  // 0: hardware concurrency
  FeasibilityOptions feasibility{};
};

AuditRecord audit_scenario(const Scenario& scenario, const AuditOptions& options = {});
/// Parallel over scenarios; records come back in input order.
AuditReport equivalence_audit(std::span<const Scenario> batch, const AuditOptions& options = {});

}  // namespace lgmr
