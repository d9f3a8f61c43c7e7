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
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lgmr/mrconds.hpp"
#include "lgmr/scan.hpp"
#include "lgmr/scenario.hpp"

namespace lgmr {

enum class Command { Evaluate, Nsit, FineAudit, Sweep, Maximize };
std::string to_string(Command c);

/// Malformed or schema-violating configuration; the message names the key.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct BatchSpec {
  std::size_t count = 100;
  std::uint64_t base_seed = 0;
};

struct RunConfig {
  Command command = Command::Evaluate;
  ScenarioSpec scenario;
  /// Empty: every family that applies to the scenario.
  std::vector<Family> families;
  bool all_flips = false;
  BatchSpec batch;            // fine-audit
  std::vector<SweepAxis> axes;  // sweep, maximize
  SearchOptions search;
  std::string out_dir = ".";
  std::string stem = "report";
  double tol = kReportTol;
  double band = 1e-7;
  unsigned threads = 0;
};

RunConfig parse_config(std::string_view json_text);
RunConfig load_config(const std::filesystem::path& path);

}  // namespace lgmr
