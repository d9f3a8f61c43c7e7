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

#include <filesystem>
#include <iosfwd>
#include <vector>

#include "lgmr/config.hpp"
#include "lgmr/report_io.hpp"

namespace lgmr {

/// Exit codes of a run.
inline constexpr int kExitSatisfied = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

/// Runs the configured command without touching the filesystem.
ReportBundle execute(const RunConfig& config);

/// kExitViolation when any evaluated condition fails (for fine-audit: any
/// scenario failing its LG suite, or any robust mismatch).
int exit_code(const RunConfig& config, const ReportBundle& bundle);

struct RunOutcome {
  int exit_code = kExitSatisfied;
  ReportBundle bundle;
  std::vector<std::filesystem::path> files;
};

/// execute + write_bundle; a one-line summary goes to `log`.
RunOutcome run_config(const RunConfig& config, OutputFormat format, std::ostream& log);

}  // namespace lgmr
