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

#include "lgmr/fine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <Eigen/LU>
#include <Eigen/QR>

namespace lgmr {

namespace {

std::vector<double> axis_sums(const HistoryTable& t, std::size_t axis) {
  const HistoryTable m = t.marginal({axis});
  return {m.values().begin(), m.values().end()};
}

std::size_t pow_size(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  for (std::size_t k = 0; k < exp; ++k) r *= base;
  return r;
}

// One row per marginal entry, one column per joint cell.
void marginal_system(const MarginalSet& ms, RealMatrix& a, RealVector& b) {
  const std::size_t cells = pow_size(ms.outcomes, ms.times);
  std::size_t rows = 0;
  for (const auto& t : ms.tables) rows += t.size();
  a = RealMatrix::Zero(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cells));
  b.resize(static_cast<Eigen::Index>(rows));
  const std::vector<std::size_t> shape(ms.times, ms.outcomes);
  const HistoryTable joint(shape);
  std::size_t offset = 0;
  for (std::size_t k = 0; k < ms.tables.size(); ++k) {
    const auto& t = ms.tables[k];
    const auto& p = ms.pairs[k];
    for (std::size_t r = 0; r < t.size(); ++r) b(static_cast<Eigen::Index>(offset + r)) = t[r];
    for (std::size_t cell = 0; cell < cells; ++cell) {
      const HistoryString h = joint.unflatten(cell);
      const std::size_t r = h[p.i] * ms.outcomes + h[p.j];
      a(static_cast<Eigen::Index>(offset + r), static_cast<Eigen::Index>(cell)) = 1.0;
    }
    offset += t.size();
  }
}

}  // namespace

double MarginalSet::single_time_mismatch() const {
  double worst = 0.0;
  for (std::size_t k = 0; k < tables.size(); ++k) {
    const auto rows = axis_sums(tables[k], 0);
    const auto cols = axis_sums(tables[k], 1);
    for (std::size_t n = 0; n < outcomes; ++n) {
      worst = std::max(worst, std::abs(rows[n] - singles[pairs[k].i][n]));
      worst = std::max(worst, std::abs(cols[n] - singles[pairs[k].j][n]));
    }
  }
  return worst;
}

double MarginalSet::min_entry() const {
  double m = std::numeric_limits<double>::infinity();
  for (const auto& t : tables) m = std::min(m, t.min());
  return m;
}

MarginalSet make_marginal_set(std::size_t outcomes, std::size_t times, std::vector<TimePair> pairs,
                              std::vector<HistoryTable> tables) {
  if (times < 2 || times > Schedule::kMaxTimes) {
    throw std::invalid_argument("MarginalSet: times must be 2 to 4");
  }
  if (pairs.size() != tables.size() || pairs.empty()) {
    throw std::invalid_argument("MarginalSet: one table per pair required");
  }
  MarginalSet ms;
  ms.outcomes = outcomes;
  ms.times = times;
  ms.singles.assign(times, {});
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const auto& p = pairs[k];
    if (p.i >= p.j || p.j >= times) throw std::invalid_argument("MarginalSet: bad time pair");
    if (tables[k].shape() != std::vector<std::size_t>{outcomes, outcomes}) {
      throw std::invalid_argument("MarginalSet: table shape does not match outcome count");
    }
    if (ms.singles[p.i].empty()) ms.singles[p.i] = axis_sums(tables[k], 0);
    if (ms.singles[p.j].empty()) ms.singles[p.j] = axis_sums(tables[k], 1);
  }
  for (const auto& s : ms.singles) {
    if (s.empty()) throw std::invalid_argument("MarginalSet: every time must appear in a pair");
  }
  ms.pairs = std::move(pairs);
  ms.tables = std::move(tables);
  return ms;
}

MarginalSet marginals_from_moments(const ScheduleMoments& m) {
  std::vector<TimePair> pairs;
  if (m.times == 3) {
    pairs = {{0, 1}, {1, 2}, {0, 2}};
  } else if (m.times == 4) {
    pairs = {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}};
  } else {
    throw std::invalid_argument("marginals_from_moments: three or four times required");
  }
  std::vector<HistoryTable> tables;
  for (const auto& p : pairs) tables.push_back(table_from_moments(m.at(p.i, p.j)));
  const std::size_t n = m.moments.front().outcomes_i();
  return make_marginal_set(n, m.times, std::move(pairs), std::move(tables));
}

MarginalSet marginals_of_joint(const HistoryTable& joint, std::span<const TimePair> pairs) {
  std::vector<HistoryTable> tables;
  for (const auto& p : pairs) tables.push_back(joint.marginal({p.i, p.j}));
  return make_marginal_set(joint.shape()[0], joint.arity(), {pairs.begin(), pairs.end()},
                           std::move(tables));
}

FeasibilityResult joint_feasibility(const MarginalSet& ms, const FeasibilityOptions& options) {
  if (ms.single_time_mismatch() > options.consistency_tol) {
    throw std::invalid_argument("joint_feasibility: single-time marginals disagree across tables");
  }
  RealMatrix a;
  RealVector b;
  marginal_system(ms, a, b);
  const SimplexResult sr = phase1_feasibility(a, b, options.simplex);

  FeasibilityResult out;
  out.feasible = sr.feasible;
  out.phase1_objective = sr.phase1_objective;
  if (sr.feasible) {
    RealVector x = sr.x;
    if (options.polish) out.polished = polish_solution(a, b, x);
    HistoryTable joint(std::vector<std::size_t>(ms.times, ms.outcomes));
    for (std::size_t c = 0; c < joint.size(); ++c) joint[c] = x(static_cast<Eigen::Index>(c));
    out.joint = std::move(joint);
  } else {
    out.certificate.assign(sr.certificate.data(), sr.certificate.data() + sr.certificate.size());
    out.certificate_value = b.dot(sr.certificate);
  }
  return out;
}

bool vertex_feasible(const MarginalSet& ms, double tol) {
  if (ms.outcomes != 2) throw std::invalid_argument("vertex_feasible: two-outcome sets only");
  RealMatrix a;
  RealVector b;
  marginal_system(ms, a, b);
  Eigen::FullPivLU<RealMatrix> lu(a);
  lu.setThreshold(1e-10);
  const auto r = static_cast<std::size_t>(lu.rank());
  const auto n = static_cast<std::size_t>(a.cols());
  // Every vertex of {A x = b, x >= 0} is a basic solution on r columns.
  std::vector<std::size_t> pick(r);
  for (std::size_t k = 0; k < r; ++k) pick[k] = k;
  while (true) {
    RealMatrix as(a.rows(), static_cast<Eigen::Index>(r));
    for (std::size_t k = 0; k < r; ++k) as.col(static_cast<Eigen::Index>(k)) = a.col(static_cast<Eigen::Index>(pick[k]));
    Eigen::ColPivHouseholderQR<RealMatrix> qr(as);
    qr.setThreshold(1e-10);
    if (static_cast<std::size_t>(qr.rank()) == r) {
      const RealVector xs = qr.solve(b);
      if ((as * xs - b).cwiseAbs().maxCoeff() <= tol && xs.minCoeff() >= -tol) return true;
    }
    std::size_t k = r;
    while (k > 0 && pick[k - 1] == n - r + (k - 1)) --k;
    if (k == 0) return false;
    ++pick[k - 1];
    for (std::size_t q = k; q < r; ++q) pick[q] = pick[q - 1] + 1;
  }
}

TripleBoundInterval triple_interval(const PairMoments& c12, const PairMoments& c23,
                                    const PairMoments& c13, std::size_t n1, std::size_t n2,
                                    std::size_t n3) {
  const auto i1 = static_cast<Eigen::Index>(n1);
  const auto i2 = static_cast<Eigen::Index>(n2);
  const auto i3 = static_cast<Eigen::Index>(n3);
  const double m1 = c12.first_i(i1);
  const double m2 = c12.first_j(i2);
  const double m3 = c23.first_j(i3);
  const double k12 = c12.corr(i1, i2);
  const double k23 = c23.corr(i2, i3);
  const double k13 = c13.corr(i1, i3);
  auto f = [&](int s1, int s2, int s3) {
    return 1.0 + s1 * m1 + s2 * m2 + s3 * m3 + s1 * s2 * k12 + s2 * s3 * k23 + s1 * s3 * k13;
  };
  TripleBoundInterval out;
  out.indices = {n1, n2, n3};
  out.lower_bounds = {-f(1, 1, 1), -f(1, -1, -1), -f(-1, 1, -1), -f(-1, -1, 1)};
  out.upper_bounds = {f(-1, -1, -1), f(-1, 1, 1), f(1, -1, 1), f(1, 1, -1)};
  out.lower = *std::max_element(out.lower_bounds.begin(), out.lower_bounds.end());
  out.upper = *std::min_element(out.upper_bounds.begin(), out.upper_bounds.end());
  return out;
}

std::vector<TripleBoundInterval> triple_intervals(const ScheduleMoments& m) {
  if (m.times != 3) throw std::invalid_argument("triple_intervals: three-time moments required");
  const PairMoments& c12 = m.at(0, 1);
  const PairMoments& c23 = m.at(1, 2);
  const PairMoments& c13 = m.at(0, 2);
  const std::size_t n = c12.outcomes_i();
  std::vector<TripleBoundInterval> out;
  out.reserve(n * n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) out.push_back(triple_interval(c12, c23, c13, a, b, c));
    }
  }
  return out;
}

HistoryTable fine_ansatz_join(const HistoryTable& p123, const HistoryTable& p134, double tol) {
  if (p123.arity() != 3 || p134.arity() != 3) {
    throw std::invalid_argument("fine_ansatz_join: three-time tables required");
  }
  const std::size_t n = p123.shape()[0];
  if (p123.shape() != std::vector<std::size_t>(3, n) || p134.shape() != p123.shape()) {
    throw std::invalid_argument("fine_ansatz_join: tables must share one outcome count");
  }
  const HistoryTable p13 = p123.marginal({0, 2});
  const HistoryTable p13b = p134.marginal({0, 1});
  for (std::size_t k = 0; k < p13.size(); ++k) {
    if (std::abs(p13[k] - p13b[k]) > tol) {
      throw std::invalid_argument("fine_ansatz_join: the (1,3) marginals disagree");
    }
  }
  constexpr double kZero = 1e-14;
  HistoryTable out(std::vector<std::size_t>(4, n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t c = 0; c < n; ++c) {
      const double den = p13.at({a, c});
      for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t d = 0; d < n; ++d) {
          const double left = p123.at({a, b, c});
          const double right = p134.at({a, c, d});
          if (std::abs(den) <= kZero) {
            if (std::abs(left) > tol || std::abs(right) > tol) {
              throw std::invalid_argument(
                  "fine_ansatz_join: nonzero numerator over a vanishing (1,3) marginal");
            }
            out.at({a, b, c, d}) = 0.0;
          } else {
            out.at({a, b, c, d}) = left * right / den;
          }
        }
      }
    }
  }
  return out;
}

}  // namespace lgmr
