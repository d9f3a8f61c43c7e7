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

#include "lgmr/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lgmr {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  return splitmix64(splitmix64(base) ^ (index * 0xd1b54a32d192ed03ULL));
}

std::mt19937_64 make_engine(std::uint64_t seed) { return std::mt19937_64(splitmix64(seed)); }

namespace {

Complex complex_normal(std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  const double re = g(rng);
  const double im = g(rng);
  return {re, im};
}

}  // namespace

Vector random_pure_state(std::size_t dim, std::mt19937_64& rng) {
  Vector psi(static_cast<Eigen::Index>(dim));
  for (Eigen::Index i = 0; i < psi.size(); ++i) psi(i) = complex_normal(rng);
  return psi / psi.norm();
}

Matrix random_mixed_state(std::size_t dim, std::mt19937_64& rng) {
  const auto d = static_cast<Eigen::Index>(dim);
  Matrix g(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) g(i, j) = complex_normal(rng);
  }
  Matrix rho = g * g.adjoint();
  return rho / rho.trace().real();
}

Matrix random_hermitian(std::size_t dim, std::mt19937_64& rng, double scale) {
  const auto d = static_cast<Eigen::Index>(dim);
  Matrix a(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) a(i, j) = complex_normal(rng);
  }
  const Matrix h = 0.5 * scale * (a + a.adjoint());
  return 0.5 * (h + h.adjoint());
}

Scenario generate_scenario(const ScenarioSpec& spec) {
  if (spec.dim < 2) throw std::invalid_argument("generate_scenario: dim must be at least 2");
  const std::size_t n = spec.dim;
  std::mt19937_64 rng = make_engine(spec.seed);

  std::optional<DensityOperator> rho;
  switch (spec.state) {
    case StateKind::PureRandom: rho = DensityOperator::pure(random_pure_state(n, rng)); break;
    case StateKind::MixedRandom: rho = DensityOperator::normalized(random_mixed_state(n, rng)); break;
    case StateKind::MaximallyMixed: rho = DensityOperator::maximally_mixed(n); break;
    case StateKind::Basis: rho = DensityOperator::basis_state(n, spec.basis_index); break;
    case StateKind::Bloch: {
      if (n != 2) throw std::invalid_argument("generate_scenario: Bloch state needs dim 2");
      Vector psi(2);
      psi(0) = std::cos(spec.bloch_theta / 2.0);
      psi(1) = std::polar(std::sin(spec.bloch_theta / 2.0), spec.bloch_phi);
      rho = DensityOperator::pure(psi);
      break;
    }
    case StateKind::Explicit:
      if (spec.state_matrix) {
        rho = DensityOperator(*spec.state_matrix);
      } else if (spec.state_vector) {
        rho = DensityOperator::pure(*spec.state_vector / spec.state_vector->norm());
      } else {
        throw std::invalid_argument("generate_scenario: explicit state missing");
      }
      break;
  }
  if (rho->dim() != n) throw std::invalid_argument("generate_scenario: state dimension mismatch");

  std::optional<Hamiltonian> h;
  switch (spec.hamiltonian) {
    case HamiltonianKind::RandomHermitian:
      h = Hamiltonian(random_hermitian(n, rng, spec.gue_scale));
      break;
    case HamiltonianKind::SpinPrecession:
      h = Hamiltonian(spec.omega * spin_operator(n, spec.axis));
      break;
    case HamiltonianKind::Zero: h = Hamiltonian::zero(n); break;
    case HamiltonianKind::Explicit:
      if (!spec.hamiltonian_matrix) {
        throw std::invalid_argument("generate_scenario: explicit Hamiltonian missing");
      }
      h = Hamiltonian(*spec.hamiltonian_matrix);
      break;
  }
  if (h->dim() != n) throw std::invalid_argument("generate_scenario: Hamiltonian dimension mismatch");

  std::vector<double> times;
  const std::size_t k = spec.time_count;
  switch (spec.schedule) {
    case ScheduleKind::Explicit: times = spec.times; break;
    case ScheduleKind::UniformGrid:
      if (k < 2) throw std::invalid_argument("generate_scenario: grid needs at least two times");
      for (std::size_t i = 0; i < k; ++i) {
        times.push_back(spec.horizon * static_cast<double>(i) / static_cast<double>(k - 1));
      }
      break;
    case ScheduleKind::EqualSpacing:
      for (std::size_t i = 0; i < k; ++i) times.push_back(spec.start + spec.spacing * static_cast<double>(i));
      break;
    case ScheduleKind::RandomTimes: {
      std::uniform_real_distribution<double> u(0.0, spec.horizon);
      for (std::size_t i = 0; i < k; ++i) times.push_back(u(rng));
      std::sort(times.begin(), times.end());
      break;
    }
  }

  ProjectiveDecomposition dec =
      spec.ranks.empty() ? fine_decomposition(n) : build_decomposition(n, spec.ranks);
  return Scenario{spec.seed, std::move(*rho), std::move(*h), Schedule(std::move(times)),
                  std::move(dec), spec.policy};
}

std::vector<Scenario> generate_batch(ScenarioSpec spec, std::uint64_t base_seed, std::size_t count) {
  std::vector<Scenario> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    spec.seed = derive_seed(base_seed, k);
    out.push_back(generate_scenario(spec));
  }
  return out;
}

}  // namespace lgmr
