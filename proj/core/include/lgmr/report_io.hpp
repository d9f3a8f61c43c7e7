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

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lgmr/fine.hpp"
#include "lgmr/mrconds.hpp"
#include "lgmr/scan.hpp"

namespace lgmr {

enum class OutputFormat { Table, Full };

struct BundleMetadata {
  std::string command;
  std::uint64_t seed = 0;
  std::string version;
  std::string timestamp;  // UTC, ISO 8601
  std::size_t dim = 0;
  std::vector<double> times;
  std::string policy;
};

struct NsitSummary {
  std::string label;  // e.g. "12", "123"
  std::size_t rank = 0;
  std::size_t independent = 0;
};

struct ReportBundle {
  BundleMetadata metadata;
  std::vector<ConditionReport> reports;
  std::vector<std::pair<std::string, InterferenceTable>> interference;
  std::vector<NsitSummary> nsit;
  std::optional<MrClass> classification;
  std::vector<std::pair<std::string, LudersClass>> luders;
  std::optional<AuditReport> audit;
  std::optional<SweepResult> sweep;
  std::optional<ExtremumRecord> extremum;
};

/// Hierarchical document; doubles carry 17 significant digits, non-finite
/// values become null and empty sections are left out.
std::string bundle_to_json(const ReportBundle& bundle);
ReportBundle bundle_from_json(std::string_view text);

/// Header: id,family,lhs,margin,satisfied.
std::string reports_to_csv(std::span<const ConditionReport> reports);
/// Header: the axis labels, then one worst-margin column per family.
std::string sweep_to_csv(const SweepResult& sweep);
std::string audit_to_csv(const AuditReport& audit);

/// Writes <stem>.csv (when there are reports), <stem>_sweep.csv,
/// <stem>_audit.csv and, for the full format, <stem>.json. Returns the paths.
std::vector<std::filesystem::path> write_bundle(const ReportBundle& bundle,
                                                const std::filesystem::path& dir,
                                                const std::string& stem, OutputFormat format);

/// %.17g.
std::string format_double(double x);

}  // namespace lgmr
