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


#include "lgmr/runner.hpp"

#include <chrono>
#include <ctime>
#include <ostream>

#include "lgmr/fine.hpp"

#ifndef LGMR_VERSION
#define LGMR_VERSION "0.0.0"
#endif

namespace lgmr {

namespace {

std::string utc_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

const char* policy_name(MeasurementPolicy p) {
  return p == MeasurementPolicy::Luders ? "luders" : "von-neumann";
}

void append(std::vector<ConditionReport>& out, std::vector<ConditionReport> part) {
  out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
}

std::vector<Family> requested(const RunConfig& c, const Scenario& s) {
  return c.families.empty() ? applicable_families(s.dim(), s.schedule.size()) : c.families;
}

void add_luders(ReportBundle& b) {
  std::vector<ConditionReport> lg3;
  for (const auto& r : b.reports) {
    if (r.id.family == Family::LG3Nvalued || r.id.family == Family::LG3Dichotomic) lg3.push_back(r);
  }
  const auto classes = luders_check(lg3);
  for (std::size_t k = 0; k < lg3.size(); ++k) b.luders.emplace_back(lg3[k].id.to_string(), classes[k]);
}

void run_nsit(const RunConfig& c, const Scenario& s, ReportBundle& b) {
  const std::size_t k = s.schedule.size();
  const auto groupings = complete_groupings(s.dim());
  MrInputs in;
  in.times = k;
  EvaluationOptions ev{c.tol, c.all_flips};
  in.lg2 = evaluate_family(s, Family::LG2Nvalued, ev);
  in.lg2_pairs = k * (k - 1) / 2;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      const std::size_t pos[2] = {i, j};
      const TimePair pair{i, j};
      const DecoherenceRecord rec =
          decoherence_functional(s.rho, s.schedule.subset(pos), std::span(&s.decomposition, 1), s.h);
      b.interference.emplace_back(pair.label(), interference_terms(rec));
      NsitSuite suite = nsit2_suite(rec, groupings, true, pair, c.tol);
      b.nsit.push_back({pair.label(), suite.rank, suite.independent});
      append(b.reports, suite.reports);
      in.nsit2.push_back(std::move(suite));
    }
  }
  append(b.reports, in.lg2);
  if (k == 3) {
    in.lg3 = evaluate_family(s, Family::LG3Nvalued, ev);
    append(b.reports, in.lg3);
    std::vector<ThreeTimeTables> tables;
    for (const auto& g : groupings) tables.push_back(three_time_tables(s.rho, s.h, s.schedule, s.decomposition, g));
    NsitSuite suite3 = nsit3_suite(tables, s.dim(), groupings, c.tol);
    b.nsit.push_back({"123", suite3.rank, suite3.independent});
    append(b.reports, suite3.reports);
    in.nsit3 = std::move(suite3);
  }
  b.classification = classify_mr(in);
}

}  // namespace

ReportBundle execute(const RunConfig& c) {
  ReportBundle b;
  b.metadata.command = to_string(c.command);
  b.metadata.version = LGMR_VERSION;
  b.metadata.timestamp = utc_now();
  b.metadata.dim = c.scenario.dim;
  b.metadata.policy = policy_name(c.scenario.policy);
  b.metadata.seed = c.command == Command::FineAudit ? c.batch.base_seed : c.scenario.seed;
  const EvaluationOptions ev{c.tol, c.all_flips};

  switch (c.command) {
    case Command::Evaluate: {
      const Scenario s = generate_scenario(c.scenario);
      b.metadata.times = s.schedule.times();
      b.reports = evaluate_families(s, requested(c, s), ev);
      add_luders(b);
      break;
    }
    case Command::Nsit: {
      const Scenario s = generate_scenario(c.scenario);
      b.metadata.times = s.schedule.times();
      run_nsit(c, s, b);
      break;
    }
    case Command::FineAudit: {
      const auto batch = generate_batch(c.scenario, c.batch.base_seed, c.batch.count);
      AuditOptions opt;
      opt.band = c.band;
      opt.threads = c.threads;
      b.audit = equivalence_audit(batch, opt);
      break;
    }
    case Command::Sweep: {
      std::vector<Family> families = c.families;
      if (families.empty()) {
        ScenarioSpec probe = c.scenario;
        for (const auto& a : c.axes) apply_parameter(probe, a, a.upper);
        const Scenario s = generate_scenario(probe);
        families = applicable_families(s.dim(), s.schedule.size());
      }
      b.sweep = sweep(c.scenario, c.axes, families, SweepOptions{ev, c.threads});
      break;
    }
    case Command::Maximize: {
      SearchOptions opt = c.search;
      opt.evaluation = ev;
      opt.threads = c.threads;
      b.extremum = maximize_violation(c.scenario, c.axes, c.families.front(), opt);
      ScenarioSpec spec = c.scenario;
      for (std::size_t k = 0; k < c.axes.size(); ++k) apply_parameter(spec, c.axes[k], b.extremum->parameters[k]);
      const Scenario s = generate_scenario(spec);
      b.metadata.times = s.schedule.times();
      b.reports = evaluate_family(s, c.families.front(), ev);
      add_luders(b);
      break;
    }
  }
  return b;
}

int exit_code(const RunConfig& c, const ReportBundle& b) {
  bool violated = !all_satisfied(b.reports);
  if (b.audit) {
    for (const auto& r : b.audit->records) violated = violated || !r.lg_verdict || r.mismatch;
  }
  if (b.sweep && b.sweep->extremum) violated = violated || b.sweep->extremum->value < -c.tol;
  if (b.extremum) violated = violated || b.extremum->margin < -c.tol;
  return violated ? kExitViolation : kExitSatisfied;
}

RunOutcome run_config(const RunConfig& c, OutputFormat format, std::ostream& log) {
  RunOutcome out;
  out.bundle = execute(c);
  out.exit_code = exit_code(c, out.bundle);
  out.files = write_bundle(out.bundle, c.out_dir, c.stem, format);

  const auto& b = out.bundle;
  log << to_string(c.command) << ":";
  if (!b.reports.empty()) {
    std::size_t failed = 0;
    for (const auto& r : b.reports) failed += r.satisfied ? 0 : 1;
    log << " " << b.reports.size() << " conditions, " << failed << " violated, worst margin "
        << format_double(worst_margin(b.reports));
  }
  if (b.audit) {
    log << " " << b.audit->records.size() << " scenarios, " << b.audit->infeasible << " infeasible, "
        << b.audit->robust_mismatches << " robust mismatches, " << b.audit->band_excluded << " in band";
  }
  if (b.sweep && b.sweep->extremum) {
    log << " extremum " << format_double(b.sweep->extremum->value) << " (" << b.sweep->extremum->condition << ")";
  }
  if (b.extremum) log << " best margin " << format_double(b.extremum->margin);
  log << "\n";
  for (const auto& p : out.files) log << "  wrote " << p.string() << "\n";
  return out;
}

}  // namespace lgmr
