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


#include <cmath>

#include "doctest.h"
#include "lgmr/histories.hpp"
#include "oracles.hpp"

using namespace lgmr;

namespace {

DensityOperator random_rho(oracle::Gen& g, int n, bool pure) {
  if (!pure) return DensityOperator(g.mixed(n));
  const Vector v = g.state(n);
  return DensityOperator(v * v.adjoint());
}

}  // namespace

TEST_CASE("Lueders correlator is the symmetrized product") {
  oracle::Gen g(21);
  for (int trial = 0; trial < 8; ++trial) {
    const int n = 2 + trial % 3;
    const auto rho = random_rho(g, n, trial % 2 == 0);
    const Hamiltonian h(g.hermitian(n));
    const auto t = g.times(2);
    const auto dec = fine_decomposition(static_cast<std::size_t>(n));
    const auto qi = single_plus(dec, 0);
    const auto qj = single_plus(dec, static_cast<std::size_t>(n - 1));
    const Matrix a = oracle::heis(qi.op(), h.matrix(), t[0]);
    const Matrix b = oracle::heis(qj.op(), h.matrix(), t[1]);
    const double ref = 0.5 * ((a * b + b * a) * rho.matrix()).trace().real();
    CHECK(std::abs(correlator_luders(rho, h, t[0], t[1], qi, qj) - ref) < 1e-12);
    const double e = (a * rho.matrix()).trace().real();
    CHECK(std::abs(expectation(rho, h, t[0], qi) - e) < 1e-12);
  }
}

TEST_CASE("von Neumann correlator from explicit collapse") {
  oracle::Gen g(22);
  const auto rho = random_rho(g, 3, true);
  const Hamiltonian h(g.hermitian(3));
  const auto t = g.times(2);
  const auto dec = fine_decomposition(3);
  const SignPattern eps{1, -1, -1};
  const std::vector<std::vector<Matrix>> meas(2, oracle::fine(3));
  const auto p = oracle::sequential(rho.matrix(), h.matrix(), t, meas);
  double ref = 0.0;
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) ref += eps[static_cast<std::size_t>(a)] * eps[static_cast<std::size_t>(b)] * p[3 * a + b];
  }
  CHECK(std::abs(correlator_vn(rho, h, t[0], t[1], dec, eps) - ref) < 1e-12);
  // Time order of the arguments does not matter.
  CHECK(std::abs(correlator_vn(rho, h, t[1], t[0], dec, eps) - ref) < 1e-12);
}

TEST_CASE("von Neumann and Lueders correlators differ by two-time interference") {
  oracle::Gen g(23);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 2 + trial % 3;
    const auto rho = random_rho(g, n, trial % 2 == 1);
    const Hamiltonian h(g.hermitian(n));
    const auto t = g.times(2);
    const auto dec = fine_decomposition(static_cast<std::size_t>(n));
    SignPattern eps(static_cast<std::size_t>(n), -1);
    eps[static_cast<std::size_t>(trial % n)] = 1;
    const auto q = make_dichotomic(dec, eps);
    const double cl = correlator_luders(rho, h, t[0], t[1], q, q);
    const double cv = correlator_vn(rho, h, t[0], t[1], dec, eps);
    const auto rec = decoherence_functional(rho, Schedule(t), std::span(&dec, 1), h);
    const double gap = vn_luders_gap(interference_terms(rec), eps, eps);
    CHECK(std::abs(cv - (cl - gap)) < 1e-12);
    if (n == 2) CHECK(std::abs(gap) < 1e-12);
  }
}

TEST_CASE("the (+,-,-) special case carries +4 I_BC(A)") {
  oracle::Gen g(24);
  for (int trial = 0; trial < 10; ++trial) {
    const auto rho = random_rho(g, 3, trial % 2 == 0);
    const Hamiltonian h(g.hermitian(3));
    const auto t = g.times(2);
    const auto dec = fine_decomposition(3);
    const SignPattern eps{1, -1, -1};
    const auto q = make_dichotomic(dec, eps);
    const double cl = correlator_luders(rho, h, t[0], t[1], q, q);
    const double cv = correlator_vn(rho, h, t[0], t[1], dec, eps);
    const auto rec = decoherence_functional(rho, Schedule(t), std::span(&dec, 1), h);
    const InterferenceTable it = interference_terms(rec);
    CHECK(std::abs(cv - (cl + 4.0 * it(1, 2, 0))) < 1e-12);

  }
}

TEST_CASE("pair moments and table reconstruction") {
  oracle::Gen g(25);
  const auto rho = random_rho(g, 3, true);
  const Hamiltonian h(g.hermitian(3));
  const auto t = g.times(2);
  const auto dec = fine_decomposition(3);
  const PairMoments lm = pair_moments(rho, h, t[0], t[1], dec, dec, MeasurementPolicy::Luders);
  const HistoryTable q = quasi_prob(rho, Schedule(t), std::span(&dec, 1), h);
  const HistoryTable back = table_from_moments(lm);
  for (std::size_t k = 0; k < q.size(); ++k) CHECK(std::abs(back[k] - q[k]) < 1e-12);
  for (std::size_t a = 0; a < 3; ++a) {
    for (std::size_t b = 0; b < 3; ++b) {
      const auto qa = single_plus(dec, a);
      const auto qb = single_plus(dec, b);
      CHECK(std::abs(lm.corr(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) -
                     correlator_luders(rho, h, t[0], t[1], qa, qb)) < 1e-12);
    }
  }
  // von Neumann moments keep undisturbed first moments.
  const PairMoments vm = pair_moments(rho, h, t[0], t[1], dec, dec, MeasurementPolicy::VonNeumann);
  CHECK((vm.first_j - lm.first_j).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("moment expansions rebuild the tables") {
  oracle::Gen g(26);
  for (int trial = 0; trial < 6; ++trial) {
    const int n = 2 + trial % 3;
    const auto rho = random_rho(g, n, trial % 2 == 0);
    const Hamiltonian h(g.hermitian(n));
    const auto t = g.times(3);
    const auto dec = fine_decomposition(static_cast<std::size_t>(n));
    SignPattern eps(static_cast<std::size_t>(n), -1);
    eps[0] = 1;
    const auto q = make_dichotomic(dec, eps);
    const std::vector<DichotomicObservable> obs(3, q);
    const CorrelatorSet set = dressed_moments(rho, h, Schedule(t), obs);

    const auto groups = oracle::grouping(eps);
    const std::vector<std::vector<Matrix>> meas(3, groups);
    const auto p_ref = oracle::sequential(rho.matrix(), h.matrix(), t, meas);
    const auto q_ref = oracle::quasi(rho.matrix(), h.matrix(), t, meas);
    const HistoryTable qq = quasi_from_moments(set);
    const HistoryTable pp = sequential_from_moments(set);
    for (std::size_t k = 0; k < 8; ++k) {
      CHECK(std::abs(qq[k] - q_ref[k]) < 1e-12);
      CHECK(std::abs(pp[k] - p_ref[k]) < 1e-12);
    }
    // Single time: p(s) = (1 + s <Q>) / 2.
    const auto p1 = oracle::sequential(rho.matrix(), h.matrix(), {t[0]}, {groups});
    CHECK(std::abs(p1[0] - 0.5 * (1 + set.first[0])) < 1e-12);

    const L1Decomposition l1 = l1_decomposition(set);
    CHECK(std::abs(l1.reassembled() - l1.direct) < 1e-12);
    CHECK(l1.sequential_part >= -1e-12);
  }
}
