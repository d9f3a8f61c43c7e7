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
#include <stdexcept>

#include "lgmr/fine.hpp"
#include "lgmr/scenario.hpp"
#include "parallel.hpp"

namespace lgmr {

AuditRecord audit_scenario(const Scenario& s, const AuditOptions& options) {
  if (s.schedule.size() != 3) throw std::invalid_argument("audit_scenario: three-time scenario required");
  // The theorem concerns quasi-probability marginals, so correlators are
  // always the Lueders ones here.
  const ScheduleMoments m =
      schedule_moments(s.rho, s.h, s.schedule, s.decomposition, MeasurementPolicy::Luders);
  std::vector<ConditionReport> lg2;
  for (std::size_t k = 0; k < m.pairs.size(); ++k) {
    auto part = lg2_suite(m.moments[k], m.pairs[k]);
    lg2.insert(lg2.end(), part.begin(), part.end());
  }
  const auto lg3 = lg3_suite(m);
  const auto lg3_all = lg3_sign_variants(m);
  const FeasibilityResult feas = joint_feasibility(marginals_from_moments(m), options.feasibility);

  AuditRecord r;
  r.seed = s.seed;
  r.lg_verdict = all_satisfied(lg2) && all_satisfied(lg3);
  r.lg_full_verdict = all_satisfied(lg2) && all_satisfied(lg3_all);
  r.feasible = feas.feasible;
  r.worst_lg_margin = std::min(worst_margin(lg2), worst_margin(lg3));
  r.worst_full_margin = std::min(worst_margin(lg2), worst_margin(lg3_all));
  r.in_band = std::abs(r.worst_lg_margin) <= options.band;
  r.mismatch = r.lg_verdict != r.feasible && !r.in_band;
  r.full_mismatch = r.lg_full_verdict != r.feasible && std::abs(r.worst_full_margin) > options.band;
  return r;
}

AuditReport equivalence_audit(std::span<const Scenario> batch, const AuditOptions& options) {
  AuditReport report;
  report.records.resize(batch.size());
  detail::parallel_for(batch.size(), options.threads,
                       [&](std::size_t k) { report.records[k] = audit_scenario(batch[k], options); });

  for (const auto& r : report.records) {
    if (r.mismatch) ++report.robust_mismatches;
    if (r.lg_verdict != r.feasible && r.in_band) ++report.band_excluded;
    if (r.full_mismatch) ++report.full_robust_mismatches;
    if (!r.feasible) ++report.infeasible;
  }
  return report;
}

}  // namespace lgmr
