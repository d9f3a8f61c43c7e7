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


#include <benchmark/benchmark.h>

#include "lgmr/fine.hpp"
#include "lgmr/scan.hpp"
#include "lgmr/scenario.hpp"

namespace {

lgmr::Scenario make(std::size_t dim, std::size_t times, std::uint64_t seed) {
  lgmr::ScenarioSpec spec;
  spec.dim = dim;
  spec.schedule = lgmr::ScheduleKind::RandomTimes;
  spec.time_count = times;
  spec.horizon = 3.0;
  spec.seed = seed;
  return lgmr::generate_scenario(spec);
}

void BM_Propagator(benchmark::State& state) {
  const auto s = make(static_cast<std::size_t>(state.range(0)), 2, 1);
  double t = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(s.h.propagator(t));
    t += 1e-3;
  }
}
BENCHMARK(BM_Propagator)->Arg(2)->Arg(4)->Arg(8);

void BM_QuasiTable(benchmark::State& state) {
  const auto s = make(static_cast<std::size_t>(state.range(0)), 3, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        lgmr::quasi_prob(s.rho, s.schedule, std::span(&s.decomposition, 1), s.h));
  }
}
BENCHMARK(BM_QuasiTable)->Arg(2)->Arg(3)->Arg(4);

void BM_DecoherenceFunctional(benchmark::State& state) {
  const auto s = make(static_cast<std::size_t>(state.range(0)), 3, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        lgmr::decoherence_functional(s.rho, s.schedule, std::span(&s.decomposition, 1), s.h));
  }
}
BENCHMARK(BM_DecoherenceFunctional)->Arg(3)->Arg(4);

void BM_JointFeasibility(benchmark::State& state) {
  const auto s = make(static_cast<std::size_t>(state.range(0)), 3, 4);
  const auto m = lgmr::schedule_moments(s.rho, s.h, s.schedule, s.decomposition,
                                        lgmr::MeasurementPolicy::Luders);
  const auto ms = lgmr::marginals_from_moments(m);
  for (auto _ : state) benchmark::DoNotOptimize(lgmr::joint_feasibility(ms));
}
BENCHMARK(BM_JointFeasibility)->Arg(2)->Arg(3)->Arg(4);

void BM_Evaluate(benchmark::State& state) {
  const auto s = make(3, 3, 5);
  const auto families = lgmr::applicable_families(3, 3);
  for (auto _ : state) benchmark::DoNotOptimize(lgmr::evaluate_families(s, families));
}
BENCHMARK(BM_Evaluate);

void BM_Audit(benchmark::State& state) {
  lgmr::ScenarioSpec spec;
  spec.dim = 3;
  spec.schedule = lgmr::ScheduleKind::RandomTimes;
  spec.horizon = 3.0;
  const auto batch = lgmr::generate_batch(spec, 9, 32);
  lgmr::AuditOptions opt;
  opt.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(lgmr::equivalence_audit(batch, opt));
}
BENCHMARK(BM_Audit)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
