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

// Leggett-Garg inequality families, NSIT condition sets and the
// weak / intermediate / strong macrorealism classifier.
//
// Many-valued families are written with the single-+1 dichotomics
// Q(n) = E_n - (1 - E_n); outcome indices are 0-based in the API and 1-based
// in report ids.

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lgmr/histories.hpp"
#include "lgmr/qcore.hpp"

namespace lgmr {

/// Default satisfaction tolerance on margins.
inline constexpr double kReportTol = 1e-9;

enum class Family {
  LG2Dichotomic,
  LG2Nvalued,
  LG2QRS,
  LG3Dichotomic,
  LG3Nvalued,
  LG3QRS,
  LG4CHSH,
  LG4Dichotomic,
  NsitFull,
  NsitDichotomic,
  Nsit3_2_3,    // NSIT_(2)3
  Nsit3_1_23,   // NSIT_(1)23
  Nsit3_1_2_3,  // NSIT_1(2)3
};

std::string to_string(Family f);
/// Inverse of to_string(Family).
std::optional<Family> family_from_string(std::string_view name);
/// Every family in declaration order.
const std::vector<Family>& all_families();
bool is_lg(Family f);
bool is_nsit(Family f);

enum class Sense {
  GreaterEq,  // lhs >= threshold
  LessEq,     // lhs <= threshold
  Within,     // lower <= lhs <= upper
  Zero,       // signed witness, |lhs| <= tol
};

/// Identifies one inequality or NSIT condition.
struct InequalityId {
  Family family = Family::LG2Nvalued;
  std::string times;          // e.g. "12", "123", "1234"
  std::string variant;        // sign pattern, observable label or letter word
  std::vector<std::size_t> indices;  // 0-based outcome tuple

  /// e.g. "LG2-Nvalued@12#1,3", "LG3-Nvalued@123/+-+#1,1,2", "LG3-QRS@123/SQR".
  /// Letter-word families omit the (redundant) outcome tuple.
  std::string to_string() const;
};

struct ConditionReport {
  InequalityId id;
  double lhs = 0.0;
  double threshold = 0.0;
  double upper = 0.0;  // Within only
  Sense sense = Sense::GreaterEq;
  double margin = 0.0;
  bool satisfied = true;
};

/// Builds a report; the margin is signed so that negative means violated.
ConditionReport make_report(InequalityId id, double lhs, Sense sense, double threshold,
                            double upper = 0.0, double tol = kReportTol);
/// Re-thresholds a report list at a new tolerance.
void apply_tolerance(std::span<ConditionReport> reports, double tol);

bool all_satisfied(std::span<const ConditionReport> reports);
/// Smallest margin, or +infinity for an empty list.
double worst_margin(std::span<const ConditionReport> reports);

// ---------------------------------------------------------------------------
// Moments for every time pair of a schedule

struct TimePair {
  std::size_t i = 0;
  std::size_t j = 1;
  std::string label() const;  // 1-based, e.g. "13"
};

/// Single-+1 moments of one decomposition for every pair i < j of the
/// schedule. Lueders correlators come from the quasi-probability, von Neumann
/// ones from the fine-grained sequential table.
struct ScheduleMoments {
  MeasurementPolicy policy = MeasurementPolicy::Luders;
  std::size_t times = 0;
  std::vector<TimePair> pairs;
  std::vector<PairMoments> moments;  // parallel to pairs

  const PairMoments& at(std::size_t i, std::size_t j) const;
};

ScheduleMoments schedule_moments(const DensityOperator& rho, const Hamiltonian& h,
                                 const Schedule& schedule, const ProjectiveDecomposition& dec,
                                 MeasurementPolicy policy);

// ---------------------------------------------------------------------------
// Two-time families

/// N^2 reports: lhs = 1 + <Q_i(n_i)> + <Q_j(n_j)> + <Q_i(n_i) Q_j(n_j)>.
std::vector<ConditionReport> lg2_suite(const PairMoments& m, const TimePair& pair = {},
                                       double tol = kReportTol);
/// Same from a two-time quasi table (lhs = 4 q).
std::vector<ConditionReport> lg2_suite(const HistoryTable& quasi, const TimePair& pair = {},
                                       double tol = kReportTol);

/// The four standard two-time inequalities 1 + s_i<Q_i> + s_j<Q_j> + s_i s_j C_ij >= 0.
std::vector<ConditionReport> lg2_dichotomic(double qi, double qj, double cij,
                                            const TimePair& pair = {}, double tol = kReportTol);

/// N = 3 moments written in Q = Q(A) and R = Q(B) only.
struct QrMoments {
  double q1 = 0.0, r1 = 0.0, q2 = 0.0, r2 = 0.0;
  double qq = 0.0, qr = 0.0, rq = 0.0, rr = 0.0;  // <X_1 Y_2>
};

/// Reads the Q and R entries of a three-outcome moment set.
QrMoments qr_moments(const PairMoments& m);

/// The nine reduced two-time inequalities: four lower bounds in Q and R,
/// then the S-eliminated forms (one lower bound, four upper bounds).
/// Variants are labelled by the (first, second) letters "QQ", "RQ", "QR",
/// "RR", "SS", "SQ", "SR", "QS", "RS".
std::vector<ConditionReport> lg2_qrs_reduced(const QrMoments& m, const TimePair& pair = {},
                                             double tol = kReportTol);

// ---------------------------------------------------------------------------
// Three- and four-time families

/// Flip signs (s_1, s_2, s_3): lhs = 1 + s1 s2 C12 + s2 s3 C23 + s1 s3 C13.
using FlipSigns = std::array<int, 3>;
inline constexpr FlipSigns kNoFlip{1, 1, 1};
/// The four sign classes that give distinct correlator signs.
inline constexpr std::array<FlipSigns, 4> kFlipClasses{
    FlipSigns{1, 1, 1}, FlipSigns{-1, 1, 1}, FlipSigns{1, -1, 1}, FlipSigns{1, 1, -1}};

/// N^3 reports for one flip pattern.
std::vector<ConditionReport> lg3_suite(const PairMoments& c12, const PairMoments& c23,
                                       const PairMoments& c13, const FlipSigns& flips = kNoFlip,
                                       double tol = kReportTol);
std::vector<ConditionReport> lg3_suite(const ScheduleMoments& m, const FlipSigns& flips = kNoFlip,
                                       double tol = kReportTol);
/// All four flip classes, 4 N^3 reports.
std::vector<ConditionReport> lg3_sign_variants(const ScheduleMoments& m, double tol = kReportTol);

/// LG1 to LG4 for one dichotomic variable.
std::vector<ConditionReport> lg3_dichotomic(double c12, double c23, double c13,
                                            double tol = kReportTol);

/// The 27 N = 3 inequalities with every S moment eliminated, in the
/// conventional listing order.
std::vector<ConditionReport> lg3_qrs_full(const QrMoments& m12, const QrMoments& m23,
                                          const QrMoments& m13, double tol = kReportTol);
/// The letter words of lg3_qrs_full in output order.
const std::array<std::string, 27>& lg3_qrs_order();

/// Position of the minus sign in the CHSH-type sum, 0-based over the pairs
/// (12), (23), (34), (14).
std::vector<ConditionReport> lg4_suite(const PairMoments& c12, const PairMoments& c23,
                                       const PairMoments& c34, const PairMoments& c14,
                                       std::size_t minus_position = 3, double tol = kReportTol);
std::vector<ConditionReport> lg4_suite(const ScheduleMoments& m, std::size_t minus_position = 3,
                                       double tol = kReportTol);
/// The four CHSH-type sums of one dichotomic variable, each within [-2, 2].
std::vector<ConditionReport> lg4_dichotomic(double c12, double c23, double c34, double c14,
                                            double tol = kReportTol);

// ---------------------------------------------------------------------------
// NSIT

/// A first-time dichotomic grouping, given by signs over the decomposition.
struct NamedSigns {
  std::string label;
  SignPattern signs;
};

/// Q(n) single-+1 groupings labelled Q, R, S (N = 3), Q (N = 2) or Q1..QN.
std::vector<NamedSigns> single_plus_groupings(std::size_t n);
/// single_plus_groupings extended, greedily, by multi-block patterns
/// (labelled by their + outcomes, e.g. "B12") until the two-time witness
/// map has full rank. N = 4 needs two of them.
std::vector<NamedSigns> complete_groupings(std::size_t n);

struct NsitSuite {
  std::vector<ConditionReport> reports;
  /// Rank of the map from independent interference entries to the evaluated
  /// witnesses, and the number of independent entries.
  std::size_t rank = 0;
  std::size_t independent = 0;
  bool complete() const { return rank == independent; }
};

/// Rank of the witness map for the given groupings (and, if `include_full`,
/// the fine-grained condition) over first x final outcomes.
std::size_t nsit_rank(std::size_t first_outcomes, std::size_t final_outcomes,
                      std::span<const NamedSigns> groupings, bool include_full);

/// Two-time NSIT set on a two-time record.
NsitSuite nsit2_suite(const DecoherenceRecord& record, std::span<const NamedSigns> groupings,
                      bool include_full = true, const TimePair& pair = {},
                      double tol = kReportTol);

/// Sequential tables for one first-pair grouping with a fine final
/// measurement. Axes: (s_1, s_2, n_3), (s_2, n_3), (s_1, n_3), (n_3).
struct ThreeTimeTables {
  std::string label;
  HistoryTable p123;
  HistoryTable p23;
  HistoryTable p13;
  std::vector<double> p3;
};

ThreeTimeTables three_time_tables(const DensityOperator& rho, const Hamiltonian& h,
                                  const Schedule& schedule, const ProjectiveDecomposition& dec,
                                  const NamedSigns& grouping);

/// NSIT_(2)3, NSIT_(1)23 and NSIT_1(2)3 for each supplied grouping. Complete
/// when the groupings form a complete two-time set.
NsitSuite nsit3_suite(std::span<const ThreeTimeTables> tables, std::size_t outcomes,
                      std::span<const NamedSigns> groupings, double tol = kReportTol);

// ---------------------------------------------------------------------------
// Classification

enum class LudersClass { Satisfied, Standard, BeyondLuders, BelowAlgebraicFloor };
std::string to_string(LudersClass c);

/// Per report: satisfied, standard violation (-1/2 <= margin < 0),
/// beyond the Lueders bound (margin < -1/2) or below the algebraic floor -2.
/// The thresholds are the same for either measurement policy; only von
/// Neumann correlators can land beyond -1/2.
std::vector<LudersClass> luders_check(std::span<const ConditionReport> lg3_reports,
                                      double tol = kReportTol);

struct MrInputs {
  std::size_t times = 2;
  /// Two-time LG reports and the number of distinct pairs they cover.
  std::vector<ConditionReport> lg2;
  std::size_t lg2_pairs = 0;
  std::vector<ConditionReport> lg3;
  /// One two-time NSIT suite per time pair.
  std::vector<NsitSuite> nsit2;
  std::optional<NsitSuite> nsit3;
};

/// Each flag is empty when its inputs were missing or incomplete; the
/// reason is listed in `missing`.
struct MrClass {
  std::optional<bool> weak;
  std::optional<bool> intermediate;
  std::optional<bool> strong;
  std::vector<std::string> missing;
  /// strong => intermediate => weak over the flags that were decided.
  bool hierarchy_consistent() const;
};

MrClass classify_mr(const MrInputs& inputs);

}  // namespace lgmr
