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

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "lgmr/mrconds.hpp"

namespace lgmr {

std::string to_string(Family f) {
  switch (f) {
    case Family::LG2Dichotomic: return "LG2-dichotomic";
    case Family::LG2Nvalued: return "LG2-Nvalued";
    case Family::LG2QRS: return "LG2-QRS";
    case Family::LG3Dichotomic: return "LG3-dichotomic";
    case Family::LG3Nvalued: return "LG3-Nvalued";
    case Family::LG3QRS: return "LG3-QRS";
    case Family::LG4CHSH: return "LG4-CHSH";
    case Family::LG4Dichotomic: return "LG4-dichotomic";
    case Family::NsitFull: return "NSIT-full";
    case Family::NsitDichotomic: return "NSIT-dichotomic";
    case Family::Nsit3_2_3: return "NSIT3-(2)3";
    case Family::Nsit3_1_23: return "NSIT3-(1)23";
    case Family::Nsit3_1_2_3: return "NSIT3-1(2)3";
  }
  return "unknown";
}

bool is_nsit(Family f) {
  return f == Family::NsitFull || f == Family::NsitDichotomic || f == Family::Nsit3_2_3 ||
         f == Family::Nsit3_1_23 || f == Family::Nsit3_1_2_3;
}

const std::vector<Family>& all_families() {
  static const std::vector<Family> kAll{
      Family::LG2Dichotomic, Family::LG2Nvalued,    Family::LG2QRS,         Family::LG3Dichotomic,
      Family::LG3Nvalued,    Family::LG3QRS,        Family::LG4CHSH,        Family::LG4Dichotomic,
      Family::NsitFull,      Family::NsitDichotomic, Family::Nsit3_2_3,     Family::Nsit3_1_23,
      Family::Nsit3_1_2_3};
  return kAll;
}

std::optional<Family> family_from_string(std::string_view name) {
  for (Family f : all_families()) {
    if (to_string(f) == name) return f;
  }
  return std::nullopt;
}

bool is_lg(Family f) { return !is_nsit(f); }

std::string InequalityId::to_string() const {
  std::string s = lgmr::to_string(family);
  if (!times.empty()) s += "@" + times;
  if (!variant.empty()) s += "/" + variant;
  const bool lettered = family == Family::LG2QRS || family == Family::LG3QRS;
  if (!indices.empty() && !lettered) {
    s += "#";
    for (std::size_t k = 0; k < indices.size(); ++k) {
      if (k > 0) s += ",";
      s += std::to_string(indices[k] + 1);
    }
  }
  return s;
}

namespace {

double margin_of(Sense sense, double lhs, double threshold, double upper) {
  switch (sense) {
    case Sense::GreaterEq: return lhs - threshold;
    case Sense::LessEq: return threshold - lhs;
    case Sense::Within: return std::min(lhs - threshold, upper - lhs);
    case Sense::Zero: return -std::abs(lhs - threshold);
  }
  return lhs - threshold;
}

}  // namespace

ConditionReport make_report(InequalityId id, double lhs, Sense sense, double threshold,
                            double upper, double tol) {
  ConditionReport r;
  r.id = std::move(id);
  r.lhs = lhs;
  r.sense = sense;
  r.threshold = threshold;
  r.upper = upper;
  r.margin = margin_of(sense, lhs, threshold, upper);
  r.satisfied = r.margin >= -tol;
  return r;
}

void apply_tolerance(std::span<ConditionReport> reports, double tol) {
  for (auto& r : reports) r.satisfied = r.margin >= -tol;
}

bool all_satisfied(std::span<const ConditionReport> reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const ConditionReport& r) { return r.satisfied; });
}

double worst_margin(std::span<const ConditionReport> reports) {
  double w = std::numeric_limits<double>::infinity();
  for (const auto& r : reports) w = std::min(w, r.margin);
  return w;
}

std::string TimePair::label() const { return std::to_string(i + 1) + std::to_string(j + 1); }

const PairMoments& ScheduleMoments::at(std::size_t i, std::size_t j) const {
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    if (pairs[k].i == i && pairs[k].j == j) return moments[k];
  }
  throw std::out_of_range("ScheduleMoments: time pair not available");
}

ScheduleMoments schedule_moments(const DensityOperator& rho, const Hamiltonian& h,
                                 const Schedule& schedule, const ProjectiveDecomposition& dec,
                                 MeasurementPolicy policy) {
  if (schedule.size() < 2) throw std::invalid_argument("schedule_moments: need at least two times");
  ScheduleMoments out;
  out.policy = policy;
  out.times = schedule.size();
  for (std::size_t i = 0; i < schedule.size(); ++i) {
    for (std::size_t j = i + 1; j < schedule.size(); ++j) {
      out.pairs.push_back({i, j});
      out.moments.push_back(pair_moments(rho, h, schedule[i], schedule[j], dec, dec, policy));
    }
  }
  return out;
}

}  // namespace lgmr
