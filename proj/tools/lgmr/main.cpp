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


// lgmr: batch front end. Exit 0: all evaluated conditions hold; 1: at least
// one violation; 2: usage or configuration error.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "lgmr/runner.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Macrorealism condition evaluator"};
  std::string config_path;
  std::optional<std::string> out_dir;
  std::optional<std::uint64_t> seed;
  std::optional<double> tol;
  std::string format = "full";
  app.add_option("--config", config_path, "Run configuration (JSON)")->required();
  app.add_option("--out", out_dir, "Output directory");
  app.add_option("--seed", seed, "Scenario seed (batch base seed for fine-audit)");
  app.add_option("--tol", tol, "Satisfaction tolerance on margins")->check(CLI::NonNegativeNumber);
  app.add_option("--format", format, "table: CSV only; full: CSV and JSON")
      ->check(CLI::IsMember({"table", "full"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : lgmr::kExitUsage;
  }

  try {
    lgmr::RunConfig config = lgmr::load_config(config_path);
    if (out_dir) config.out_dir = *out_dir;
    if (seed) {
      config.scenario.seed = *seed;
      config.batch.base_seed = *seed;
    }
    if (tol) config.tol = *tol;
    const auto fmt = format == "table" ? lgmr::OutputFormat::Table : lgmr::OutputFormat::Full;
    return lgmr::run_config(config, fmt, std::cout).exit_code;
  } catch (const lgmr::ConfigError& e) {
    std::cerr << "lgmr: config error: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    std::cerr << "lgmr: invalid scenario: " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "lgmr: " << e.what() << "\n";
  }
  return lgmr::kExitUsage;
}
