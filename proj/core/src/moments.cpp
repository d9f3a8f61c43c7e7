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

#include <array>
#include <stdexcept>
#include <utility>

#include "lgmr/histories.hpp"

namespace lgmr {

namespace {

void check_dims(const DensityOperator& rho, const Hamiltonian& h, std::size_t dim) {
  if (rho.dim() != h.dim() || rho.dim() != dim) {
    throw std::invalid_argument("correlator: dimension mismatch");
  }
}

int sign_of(std::size_t index) { return index == 0 ? 1 : -1; }

}  // namespace

double expectation(const DensityOperator& rho, const Hamiltonian& h, double t,
                   const DichotomicObservable& q) {
  check_dims(rho, h, q.dim());
  return (heisenberg_evolve(q.op(), h, t) * rho.matrix()).trace().real();
}

double correlator_luders(const DensityOperator& rho, const Hamiltonian& h, double ti, double tj,
                         const DichotomicObservable& qi, const DichotomicObservable& qj) {
  check_dims(rho, h, qi.dim());
  check_dims(rho, h, qj.dim());
  const Matrix a = heisenberg_evolve(qi.op(), h, ti);
  const Matrix b = heisenberg_evolve(qj.op(), h, tj);
  // Re Tr(B A rho) = (1/2) Tr((AB + BA) rho) for Hermitian A, B, rho.
  return (b * a * rho.matrix()).trace().real();
}

double correlator_vn(const DensityOperator& rho, const Hamiltonian& h, double ti, double tj,
                     const DichotomicObservable& qi, const DichotomicObservable& qj) {
  check_dims(rho, h, qi.dim());
  check_dims(rho, h, qj.dim());
  const DichotomicObservable* first = &qi;
  const DichotomicObservable* second = &qj;
  if (tj < ti) {
    std::swap(ti, tj);
    std::swap(first, second);
  }
  if (ti == tj) {
    // A repeated degeneracy-breaking measurement returns the same outcome.
    const ProjectiveDecomposition& d1 = first->decomposition();
    const ProjectiveDecomposition& d2 = second->decomposition();
    double c = 0.0;
    for (std::size_t a = 0; a < d1.size(); ++a) {
      const Matrix ea = heisenberg_evolve(d1[a], h, ti);
      for (std::size_t b = 0; b < d2.size(); ++b) {
        const Matrix eb = heisenberg_evolve(d2[b], h, tj);
        c += first->sign(a) * second->sign(b) * (eb * ea * rho.matrix() * ea).trace().real();
      }
    }
    return c;
  }
  const Schedule schedule({ti, tj});
  const std::array<ProjectiveDecomposition, 2> decs{first->decomposition(), second->decomposition()};
  const HistoryTable p = sequential_prob(rho, schedule, decs, h);
  double c = 0.0;
  for (std::size_t a = 0; a < decs[0].size(); ++a) {
    for (std::size_t b = 0; b < decs[1].size(); ++b) {
      c += first->sign(a) * second->sign(b) * p.at({a, b});
    }
  }
  return c;
}

double correlator_vn(const DensityOperator& rho, const Hamiltonian& h, double ti, double tj,
                     const ProjectiveDecomposition& dec, const SignPattern& signs) {
  const DichotomicObservable q(dec, signs);
  return correlator_vn(rho, h, ti, tj, q, q);
}

double vn_luders_gap(const InterferenceTable& interference, const SignPattern& first_signs,
                     const SignPattern& final_signs) {
  if (first_signs.size() != interference.first_outcomes() ||
      final_signs.size() != interference.final_outcomes()) {
    throw std::invalid_argument("vn_luders_gap: sign lists do not match the interference table");
  }
  double gap = 0.0;
  for (std::size_t n = 0; n < first_signs.size(); ++n) {
    for (std::size_t np = 0; np < first_signs.size(); ++np) {
      if (n == np) continue;
      for (std::size_t m = 0; m < final_signs.size(); ++m) {
        gap += first_signs[n] * final_signs[m] * interference(n, np, m);
      }
    }
  }
  return gap;
}

// ---------------------------------------------------------------------------
// Single-+1 moments

PairMoments moments_from_table(const HistoryTable& t) {
  if (t.arity() != 2) throw std::invalid_argument("moments_from_table: two-time table required");
  const auto ni = static_cast<Eigen::Index>(t.shape()[0]);
  const auto nj = static_cast<Eigen::Index>(t.shape()[1]);
  RealMatrix m(ni, nj);
  for (Eigen::Index a = 0; a < ni; ++a) {
    for (Eigen::Index b = 0; b < nj; ++b) {
      m(a, b) = t.at({static_cast<std::size_t>(a), static_cast<std::size_t>(b)});
    }
  }
  const RealVector rows = m.rowwise().sum();
  const RealVector cols = m.colwise().sum().transpose();
  const double total = m.sum();
  PairMoments out;
  out.first_i = 2.0 * rows.array() - total;
  out.first_j = 2.0 * cols.array() - total;
  // <Q_i(a) Q_j(b)> = sum_{k,l} eps_a(k) eps_b(l) t(k,l) with eps_a(k) = 2 delta_ak - 1.
  out.corr.resize(ni, nj);
  for (Eigen::Index a = 0; a < ni; ++a) {
    for (Eigen::Index b = 0; b < nj; ++b) {
      out.corr(a, b) = 4.0 * m(a, b) - 2.0 * rows(a) - 2.0 * cols(b) + total;
    }
  }
  return out;
}

PairMoments pair_moments(const DensityOperator& rho, const Hamiltonian& h, double ti, double tj,
                         const ProjectiveDecomposition& dec_i, const ProjectiveDecomposition& dec_j,
                         MeasurementPolicy policy) {
  if (!(tj > ti)) throw std::invalid_argument("pair_moments: times must be increasing");
  const Schedule schedule({ti, tj});
  const std::array<ProjectiveDecomposition, 2> decs{dec_i, dec_j};
  const HistoryTable table = policy == MeasurementPolicy::Luders
                                 ? quasi_prob(rho, schedule, decs, h)
                                 : sequential_prob(rho, schedule, decs, h);
  PairMoments out = moments_from_table(table);
  const auto pi = single_time_prob(rho, dec_i, h, ti);
  const auto pj = single_time_prob(rho, dec_j, h, tj);
  for (std::size_t a = 0; a < pi.size(); ++a) out.first_i(static_cast<Eigen::Index>(a)) = 2.0 * pi[a] - 1.0;
  for (std::size_t b = 0; b < pj.size(); ++b) out.first_j(static_cast<Eigen::Index>(b)) = 2.0 * pj[b] - 1.0;
  return out;
}

HistoryTable table_from_moments(const PairMoments& m) {
  HistoryTable out({m.outcomes_i(), m.outcomes_j()});
  for (std::size_t a = 0; a < m.outcomes_i(); ++a) {
    for (std::size_t b = 0; b < m.outcomes_j(); ++b) {
      const auto ia = static_cast<Eigen::Index>(a);
      const auto ib = static_cast<Eigen::Index>(b);
      out.at({a, b}) = 0.25 * (1.0 + m.first_i(ia) + m.first_j(ib) + m.corr(ia, ib));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Dichotomic moments with dressing

namespace {

double signed_sum(const HistoryTable& t, std::initializer_list<std::size_t> axes) {
  double s = 0.0;
  for (std::size_t flat = 0; flat < t.size(); ++flat) {
    const HistoryString h = t.unflatten(flat);
    int sign = 1;
    for (std::size_t axis : axes) sign *= sign_of(h[axis]);
    s += sign * t[flat];
  }
  return s;
}

}  // namespace

CorrelatorSet dressed_moments(const DensityOperator& rho, const Hamiltonian& h,
                              const Schedule& schedule,
                              std::span<const DichotomicObservable> observables) {
  const std::size_t k = schedule.size();
  if (k < 2 || k > 3) throw std::invalid_argument("dressed_moments: schedule must have 2 or 3 times");
  if (observables.size() != k) {
    throw std::invalid_argument("dressed_moments: need one observable per time");
  }
  std::vector<ProjectiveDecomposition> decs;
  for (const auto& q : observables) decs.push_back(q.luders_decomposition());

  CorrelatorSet set;
  set.policy = MeasurementPolicy::Luders;
  set.quasi = quasi_prob(rho, schedule, decs, h);
  set.sequential = sequential_prob(rho, schedule, decs, h);

  for (std::size_t i = 0; i < k; ++i) {
    set.first.push_back(expectation(rho, h, schedule[i], observables[i]));
  }
  const auto kk = static_cast<Eigen::Index>(k);
  set.pair = RealMatrix::Identity(kk, kk);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      const double c =
          correlator_luders(rho, h, schedule[i], schedule[j], observables[i], observables[j]);
      set.pair(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = c;
      set.pair(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) = c;
    }
  }
  if (k == 2) {
    set.q2_after_1 = signed_sum(set.sequential, {1});
  } else {
    set.q2_after_1 = signed_sum(set.sequential, {1});
    set.q3_after_12 = signed_sum(set.sequential, {2});
    set.c23_after_1 = signed_sum(set.sequential, {1, 2});
    set.c13_after_2 = signed_sum(set.sequential, {0, 2});
    set.triple = signed_sum(set.quasi, {0, 1, 2});
    set.triple_sequential = signed_sum(set.sequential, {0, 1, 2});
  }
  return set;
}

HistoryTable quasi_from_moments(const CorrelatorSet& set) {
  const std::size_t k = set.first.size();
  HistoryTable out(std::vector<std::size_t>(k, 2));
  for (std::size_t flat = 0; flat < out.size(); ++flat) {
    const HistoryString h = out.unflatten(flat);
    double v = 1.0;
    for (std::size_t i = 0; i < k; ++i) v += sign_of(h[i]) * set.first[i];
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) {
        v += sign_of(h[i]) * sign_of(h[j]) *
             set.pair(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
      }
    }
    if (k == 3) v += sign_of(h[0]) * sign_of(h[1]) * sign_of(h[2]) * set.triple.value();
    out[flat] = v / static_cast<double>(1u << k);
  }
  return out;
}

HistoryTable sequential_from_moments(const CorrelatorSet& set) {
  const std::size_t k = set.first.size();
  HistoryTable out(std::vector<std::size_t>(k, 2));
  for (std::size_t flat = 0; flat < out.size(); ++flat) {
    const HistoryString h = out.unflatten(flat);
    const int s1 = sign_of(h[0]);
    const int s2 = sign_of(h[1]);
    double v = 1.0 + s1 * set.first[0] + s2 * set.q2_after_1.value() + s1 * s2 * set.pair(0, 1);
    if (k == 3) {
      const int s3 = sign_of(h[2]);
      v += s3 * set.q3_after_12.value() + s2 * s3 * set.c23_after_1.value() +
           s1 * s3 * set.c13_after_2.value() + s1 * s2 * s3 * set.triple_sequential.value();
    }
    out[flat] = v / static_cast<double>(1u << k);
  }
  return out;
}

L1Decomposition l1_decomposition(const CorrelatorSet& set) {
  if (set.first.size() != 3) throw std::invalid_argument("l1_decomposition: three-time set required");
  L1Decomposition out;
  out.direct = 1.0 + set.pair(0, 1) + set.pair(0, 2) + set.pair(1, 2);
  for (std::size_t flat = 0; flat < set.sequential.size(); ++flat) {
    const HistoryString h = set.sequential.unflatten(flat);
    const int s1 = sign_of(h[0]);
    const int s2 = sign_of(h[1]);
    const int s3 = sign_of(h[2]);
    out.sequential_part += (1 + s1 * s2 + s1 * s3 + s2 * s3) * set.sequential[flat];
  }
  out.c23_correction = set.pair(1, 2) - set.c23_after_1.value();
  out.c13_correction = set.pair(0, 2) - set.c13_after_2.value();
  return out;
}

}  // namespace lgmr
