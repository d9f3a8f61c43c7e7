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
#include <optional>
#include <random>
#include <vector>

#include "lgmr/histories.hpp"
#include "lgmr/qcore.hpp"

namespace lgmr {

/// A fully resolved evaluation setup.
struct Scenario {
  std::uint64_t seed = 0;
  DensityOperator rho;
  Hamiltonian h;
  Schedule schedule;
  ProjectiveDecomposition decomposition;
  MeasurementPolicy policy = MeasurementPolicy::Luders;

  std::size_t dim() const { return rho.dim(); }
};

enum class StateKind { PureRandom, MixedRandom, Explicit, MaximallyMixed, Basis, Bloch };
enum class HamiltonianKind { RandomHermitian, SpinPrecession, Explicit, Zero };
enum class ScheduleKind { Explicit, UniformGrid, EqualSpacing, RandomTimes };

struct ScenarioSpec {
  std::size_t dim = 2;

  StateKind state = StateKind::PureRandom;
  std::optional<Matrix> state_matrix;  // Explicit: density matrix
  std::optional<Vector> state_vector;  // Explicit: pure state (alternative)
  std::size_t basis_index = 0;         // Basis
  double bloch_theta = 0.0;            // Bloch (dim 2): cos(t/2)|0> + e^{i phi} sin(t/2)|1>
  double bloch_phi = 0.0;

  HamiltonianKind hamiltonian = HamiltonianKind::RandomHermitian;
  std::optional<Matrix> hamiltonian_matrix;
  double omega = 1.0;  // SpinPrecession: H = omega J_axis
  char axis = 'x';
  double gue_scale = 1.0;

  ScheduleKind schedule = ScheduleKind::EqualSpacing;
  std::vector<double> times;  // Explicit
  std::size_t time_count = 3;
  double horizon = 1.0;  // UniformGrid: [0, horizon]; RandomTimes: uniform on it
  double spacing = 1.0;  // EqualSpacing: 0, tau, 2 tau, ...
  double start = 0.0;

  /// Block ranks of the measured decomposition; empty means rank-1 blocks.
  std::vector<std::size_t> ranks;
  MeasurementPolicy policy = MeasurementPolicy::Luders;
  std::uint64_t seed = 0;
};

/// SplitMix64 step, used to derive independent per-item seeds.
std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

/// Engine seeded through splitmix64 so that nearby seeds decorrelate.
std::mt19937_64 make_engine(std::uint64_t seed);

Vector random_pure_state(std::size_t dim, std::mt19937_64& rng);
/// Hilbert-Schmidt random mixed state G G^dagger / Tr.
Matrix random_mixed_state(std::size_t dim, std::mt19937_64& rng);
/// Gaussian unitary ensemble: (A + A^dagger) / 2 with complex normal entries.
Matrix random_hermitian(std::size_t dim, std::mt19937_64& rng, double scale = 1.0);

/// Deterministic in `spec.seed`.
Scenario generate_scenario(const ScenarioSpec& spec);

/// `count` scenarios with seeds derive_seed(base_seed, k).
std::vector<Scenario> generate_batch(ScenarioSpec spec, std::uint64_t base_seed, std::size_t count);

}  // namespace lgmr
