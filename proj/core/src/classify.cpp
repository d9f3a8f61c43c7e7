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

#include "lgmr/mrconds.hpp"

namespace lgmr {

std::string to_string(LudersClass c) {
  switch (c) {
    case LudersClass::Satisfied: return "satisfied";
    case LudersClass::Standard: return "standard";
    case LudersClass::BeyondLuders: return "beyond-luders";
    case LudersClass::BelowAlgebraicFloor: return "below-algebraic-floor";
  }
  return "unknown";
}

std::vector<LudersClass> luders_check(std::span<const ConditionReport> reports, double tol) {
  constexpr double kLudersBound = -0.5;
  constexpr double kAlgebraicFloor = -2.0;
  std::vector<LudersClass> out;
  out.reserve(reports.size());
  for (const auto& r : reports) {
    if (r.lhs < kAlgebraicFloor - tol) {
      out.push_back(LudersClass::BelowAlgebraicFloor);
    } else if (r.margin >= -tol) {
      out.push_back(LudersClass::Satisfied);
    } else if (r.margin < kLudersBound - tol) {
      out.push_back(LudersClass::BeyondLuders);
    } else {
      out.push_back(LudersClass::Standard);
    }
  }
  return out;
}

bool MrClass::hierarchy_consistent() const {
  if (strong && intermediate && *strong && !*intermediate) return false;
  if (intermediate && weak && *intermediate && !*weak) return false;
  if (strong && weak && *strong && !*weak) return false;
  return true;
}

namespace {

bool nsit_sets_complete(const MrInputs& in, std::size_t pairs, std::vector<std::string>& missing) {
  if (in.nsit2.size() < pairs) {
    missing.push_back("two-time NSIT sets cover " + std::to_string(in.nsit2.size()) + " of " +
                      std::to_string(pairs) + " time pairs");
    return false;
  }
  for (std::size_t k = 0; k < in.nsit2.size(); ++k) {
    if (!in.nsit2[k].complete()) {
      missing.push_back("two-time NSIT set " + std::to_string(k + 1) + " is incomplete (rank " +
                        std::to_string(in.nsit2[k].rank) + " of " +
                        std::to_string(in.nsit2[k].independent) + ")");
      return false;
    }
  }
  return true;
}

bool nsit_sets_hold(const MrInputs& in) {
  return std::all_of(in.nsit2.begin(), in.nsit2.end(),
                     [](const NsitSuite& s) { return all_satisfied(s.reports); });
}

}  // namespace

MrClass classify_mr(const MrInputs& in) {
  MrClass out;
  if (in.times == 2) {
    if (in.lg2.empty()) {
      out.missing.push_back("two-time LG reports");
    } else {
      out.weak = all_satisfied(in.lg2);
    }
    if (nsit_sets_complete(in, 1, out.missing)) out.strong = nsit_sets_hold(in);
    out.missing.push_back("intermediate MR is a three-time notion");
    return out;
  }
  if (in.times != 3) {
    out.missing.push_back("classification covers two and three times");
    return out;
  }
  const bool lg2_ok = in.lg2_pairs >= 3 && !in.lg2.empty();
  if (!lg2_ok) out.missing.push_back("two-time LG reports for all three pairs");
  if (in.lg3.empty()) out.missing.push_back("three-time LG reports");
  if (lg2_ok && !in.lg3.empty()) out.weak = all_satisfied(in.lg2) && all_satisfied(in.lg3);

  const bool nsit2_ok = nsit_sets_complete(in, 3, out.missing);
  if (nsit2_ok && !in.lg3.empty()) out.intermediate = nsit_sets_hold(in) && all_satisfied(in.lg3);

  if (!in.nsit3) {
    out.missing.push_back("three-time NSIT set");
  } else if (!in.nsit3->complete()) {
    out.missing.push_back("three-time NSIT set is incomplete");
  } else if (nsit2_ok) {
    out.strong = nsit_sets_hold(in) && all_satisfied(in.nsit3->reports);
  }
  return out;
}

}  // namespace lgmr
