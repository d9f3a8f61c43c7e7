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

// Condition evaluation on scenarios, grid sweeps and violation searches.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lgmr/mrconds.hpp"
#include "lgmr/nelder_mead.hpp"
#include "lgmr/scenario.hpp"

namespace lgmr {

struct EvaluationOptions {
  double tol = kReportTol;
  /// LG3-Nvalued over all four flip classes instead of (+ + +) only.
  bool all_flips = false;
};

/// Reports of one family on a scenario, using the scenario's policy for LG
/// correlators. Throws when the family does not fit the scenario (outcome
/// count or number of times).
std::vector<ConditionReport> evaluate_family(const Scenario& s, Family family,
                                             const EvaluationOptions& options = {});
std::vector<ConditionReport> evaluate_families(const Scenario& s, std::span<const Family> families,
                                               const EvaluationOptions& options = {});

/// Families that apply to a scenario of this outcome count and time count.
std::vector<Family> applicable_families(std::size_t outcomes, std::size_t times);

// ---------------------------------------------------------------------------
// Sweeps

enum class SweepParameter { Spacing, Start, Time, Omega, BlochTheta, BlochPhi };
std::string to_string(SweepParameter p);

struct SweepAxis {
  SweepParameter parameter = SweepParameter::Spacing;
  std::size_t index = 0;  // Time: position in the explicit schedule
  double lower = 0.0;
  double upper = 1.0;
  std::size_t points = 64;

  /// Evenly spaced, both ends included.
  std::vector<double> values() const;
  std::string label() const;
};

/// Writes one parameter value into a spec.
void apply_parameter(ScenarioSpec& spec, const SweepAxis& axis, double value);

struct SweepPoint {
  std::vector<double> coords;
  /// Worst margin per requested family; empty when the point is invalid
  /// (for example a coincident pair of times).
  std::vector<double> worst;
  bool valid() const { return !worst.empty(); }
};

struct Extremum {
  double value = 0.0;
  std::vector<double> coords;
  std::uint64_t seed = 0;
  Family family = Family::LG3Nvalued;
  std::string condition;  // id of the worst report
};

struct SweepOptions {
  EvaluationOptions evaluation{};
  unsigned threads = 0;
};

struct SweepResult {
  std::vector<SweepAxis> axes;
  std::vector<Family> families;
  std::vector<SweepPoint> points;  // row-major over the axes
  std::optional<Extremum> extremum;
};

/// Grid evaluation over one or two axes. The extremum is the smallest worst
/// margin; ties go to the lexicographically smallest coordinates, so serial
/// and threaded runs select the same point.
SweepResult sweep(const ScenarioSpec& base, std::span<const SweepAxis> axes,
                  std::span<const Family> families, const SweepOptions& options = {});

// ---------------------------------------------------------------------------
// Searches

struct SearchOptions {
  std::size_t starts = 16;
  std::size_t grid_points = 64;
  NelderMeadOptions local{};
  EvaluationOptions evaluation{};
  unsigned threads = 0;
};

struct ExtremumRecord {
  double margin = 0.0;
  std::vector<double> parameters;
  std::uint64_t seed = 0;
  Family family = Family::LG3Nvalued;
  std::string condition;
  std::size_t evaluations = 0;
};

/// Minimizes the worst margin of `family` over the axis box: a grid of about
/// `grid_points` seeds, the best `starts` of them refined by Nelder-Mead.
ExtremumRecord maximize_violation(const ScenarioSpec& base, std::span<const SweepAxis> box,
                                  Family family, const SearchOptions& options = {});

/// Scenario from a real parameter vector: 2N entries of an unnormalized
/// state vector followed by N^2 entries of a Hermitian matrix (diagonal, then
/// real and imaginary parts of the upper triangle).
Scenario parametrized_scenario(std::size_t dim, const RealVector& x, std::vector<double> times,
                               MeasurementPolicy policy, std::uint64_t seed = 0);
std::size_t parameter_count(std::size_t dim);

struct SearchRecord {
  bool found = false;
  double objective = 0.0;
  RealVector parameters;
  std::optional<Scenario> scenario;
  std::uint64_t seed = 0;
  std::size_t evaluations = 0;
};

/// Two-time scenario (times 0 and 1) where the fine-grained NSIT witnesses
/// vanish to `witness_tol` while some two-time LG report has margin at most
/// `-lg_depth`.
SearchRecord nonhierarchy_search(std::size_t dim, std::uint64_t seed, double witness_tol = 1e-9,
                                 double lg_depth = 1e-3, const SearchOptions& options = {});

/// Three-time von Neumann scenario with an LG3 margin at most `target`.
/// Times are 0, tau_1 and tau_1 + tau_2 with the gaps part of the search.
SearchRecord beyond_luders_search(std::size_t dim, std::uint64_t seed, double target = -0.55,
                                  const SearchOptions& options = {});

}  // namespace lgmr
