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

#include "lgmr/histories.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "histories_internal.hpp"

namespace lgmr {

namespace detail {

std::vector<ProjectiveDecomposition> evolved_decompositions(
    const DensityOperator& rho, const Schedule& schedule,
    std::span<const ProjectiveDecomposition> decompositions, const Hamiltonian& h) {
  if (decompositions.empty()) throw std::invalid_argument("histories: no decompositions given");
  if (decompositions.size() != 1 && decompositions.size() != schedule.size()) {
    throw std::invalid_argument("histories: need one decomposition per time (or a single one)");
  }
  if (rho.dim() != h.dim()) throw std::invalid_argument("histories: state/Hamiltonian dimension mismatch");
  std::vector<ProjectiveDecomposition> out;
  out.reserve(schedule.size());
  for (std::size_t i = 0; i < schedule.size(); ++i) {
    const auto& dec = decompositions[decompositions.size() == 1 ? 0 : i];
    if (dec.dim() != rho.dim()) {
      throw std::invalid_argument("histories: decomposition dimension mismatch at time " +
                                  std::to_string(i + 1));
    }
    out.push_back(heisenberg_evolve(dec, h, schedule[i]));
  }
  return out;
}

std::vector<std::size_t> shape_of(const std::vector<ProjectiveDecomposition>& evolved) {
  std::vector<std::size_t> shape;
  shape.reserve(evolved.size());
  for (const auto& d : evolved) shape.push_back(d.size());
  return shape;
}

std::vector<Matrix> class_operators(const std::vector<ProjectiveDecomposition>& evolved) {
  std::vector<Matrix> level{evolved.front().projectors()};
  for (std::size_t k = 1; k < evolved.size(); ++k) {
    std::vector<Matrix> next;
    next.reserve(level.size() * evolved[k].size());
    for (const Matrix& prefix : level) {
      for (const Matrix& e : evolved[k].projectors()) next.push_back(e * prefix);
    }
    level = std::move(next);
  }
  return level;
}

}  // namespace detail

using detail::evolved_decompositions;
using detail::shape_of;

std::vector<double> single_time_prob(const DensityOperator& rho, const ProjectiveDecomposition& dec,
                                     const Hamiltonian& h, double t) {
  if (dec.dim() != rho.dim() || rho.dim() != h.dim()) {
    throw std::invalid_argument("single_time_prob: dimension mismatch");
  }
  const ProjectiveDecomposition evolved = heisenberg_evolve(dec, h, t);
  std::vector<double> p(dec.size());
  for (std::size_t n = 0; n < dec.size(); ++n) {
    p[n] = (evolved[n] * rho.matrix()).trace().real();
  }
  return p;
}

namespace {

// Depth-first over histories carrying sigma_alpha = C_alpha rho C_alpha^dagger.
void accumulate_sequential(const std::vector<ProjectiveDecomposition>& evolved, std::size_t depth,
                           const Matrix& sigma, std::size_t flat, HistoryTable& out) {
  const auto& dec = evolved[depth];
  for (std::size_t n = 0; n < dec.size(); ++n) {
    const std::size_t idx = flat * dec.size() + n;
    if (depth + 1 == evolved.size()) {
      out[idx] = (dec[n] * sigma).trace().real();
    } else {
      accumulate_sequential(evolved, depth + 1, dec[n] * sigma * dec[n], idx, out);
    }
  }
}

// Carries X_alpha = C_alpha rho.
void accumulate_quasi(const std::vector<ProjectiveDecomposition>& evolved, std::size_t depth,
                      const Matrix& x, std::size_t flat, HistoryTable& out) {
  const auto& dec = evolved[depth];
  for (std::size_t n = 0; n < dec.size(); ++n) {
    const std::size_t idx = flat * dec.size() + n;
    if (depth + 1 == evolved.size()) {
      out[idx] = (dec[n] * x).trace().real();
    } else {
      accumulate_quasi(evolved, depth + 1, dec[n] * x, idx, out);
    }
  }
}

}  // namespace

HistoryTable sequential_prob(const DensityOperator& rho, const Schedule& schedule,
                             std::span<const ProjectiveDecomposition> decompositions,
                             const Hamiltonian& h) {
  const auto evolved = evolved_decompositions(rho, schedule, decompositions, h);
  HistoryTable out(shape_of(evolved));
  accumulate_sequential(evolved, 0, rho.matrix(), 0, out);
  return out;
}

HistoryTable quasi_prob(const DensityOperator& rho, const Schedule& schedule,
                        std::span<const ProjectiveDecomposition> decompositions,
                        const Hamiltonian& h) {
  const auto evolved = evolved_decompositions(rho, schedule, decompositions, h);
  HistoryTable out(shape_of(evolved));
  accumulate_quasi(evolved, 0, rho.matrix(), 0, out);
  return out;
}

// ---------------------------------------------------------------------------
// DecoherenceRecord

DecoherenceRecord::DecoherenceRecord(Schedule schedule, std::vector<std::size_t> shape, Matrix table)
    : schedule_(std::move(schedule)), shape_(std::move(shape)), table_(std::move(table)) {
  if (shape_.size() != schedule_.size()) {
    throw std::invalid_argument("DecoherenceRecord: shape does not match schedule");
  }
  std::size_t count = 1;
  for (std::size_t s : shape_) count *= s;
  if (static_cast<std::size_t>(table_.rows()) != count || table_.rows() != table_.cols()) {
    throw std::invalid_argument("DecoherenceRecord: table size does not match shape");
  }
}

std::size_t DecoherenceRecord::flat(std::span<const std::size_t> h) const {
  if (h.size() != shape_.size()) throw std::invalid_argument("DecoherenceRecord: history length");
  std::size_t f = 0;
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (h[i] >= shape_[i]) throw std::out_of_range("DecoherenceRecord: outcome out of range");
    f = f * shape_[i] + h[i];
  }
  return f;
}

Complex DecoherenceRecord::operator()(std::span<const std::size_t> a,
                                      std::span<const std::size_t> b) const {
  return table_(static_cast<Eigen::Index>(flat(a)), static_cast<Eigen::Index>(flat(b)));
}

HistoryTable DecoherenceRecord::diagonal() const {
  HistoryTable out(shape_);
  for (Eigen::Index i = 0; i < table_.rows(); ++i) out[static_cast<std::size_t>(i)] = table_(i, i).real();
  return out;
}

HistoryTable DecoherenceRecord::row_sums() const {
  HistoryTable out(shape_);
  const RealVector sums = table_.real().rowwise().sum();
  for (Eigen::Index i = 0; i < sums.size(); ++i) out[static_cast<std::size_t>(i)] = sums(i);
  return out;
}

std::vector<double> DecoherenceRecord::undisturbed_final() const {
  // D vanishes unless both histories agree at the final time, and the
  // earlier projectors sum to the identity.
  const std::size_t last = shape_.back();
  std::vector<double> out(last, 0.0);
  for (Eigen::Index i = 0; i < table_.rows(); ++i) {
    for (Eigen::Index j = 0; j < table_.cols(); ++j) {
      const auto fi = static_cast<std::size_t>(i) % last;
      if (fi == static_cast<std::size_t>(j) % last) out[fi] += table_(i, j).real();
    }
  }
  return out;
}

DecoherenceRecord DecoherenceRecord::coarse_grained(std::size_t slot,
                                                    const Eigen::MatrixXi& groups) const {
  if (slot >= shape_.size()) throw std::invalid_argument("coarse_grained: slot out of range");
  if (static_cast<std::size_t>(groups.cols()) != shape_[slot] || groups.rows() == 0) {
    throw std::invalid_argument("coarse_grained: group matrix does not match slot outcomes");
  }
  for (Eigen::Index c = 0; c < groups.cols(); ++c) {
    if (groups.col(c).sum() != 1 || groups.col(c).minCoeff() < 0) {
      throw std::invalid_argument("coarse_grained: each outcome must belong to exactly one group");
    }
  }
  std::vector<std::size_t> new_shape = shape_;
  new_shape[slot] = static_cast<std::size_t>(groups.rows());
  std::size_t old_count = history_count();
  std::size_t new_count = 1;
  for (std::size_t s : new_shape) new_count *= s;

  // Linear map M (new x old): M(g, alpha) = 1 when alpha's slot outcome is in g
  // and all other outcomes agree. Then D' = M D M^T.
  std::size_t stride = 1;
  for (std::size_t i = slot + 1; i < shape_.size(); ++i) stride *= shape_[i];
  RealMatrix map = RealMatrix::Zero(static_cast<Eigen::Index>(new_count),
                                    static_cast<Eigen::Index>(old_count));
  for (std::size_t alpha = 0; alpha < old_count; ++alpha) {
    const std::size_t lo = alpha % stride;
    const std::size_t outcome = (alpha / stride) % shape_[slot];
    const std::size_t hi = alpha / (stride * shape_[slot]);
    Eigen::Index g = 0;
    groups.col(static_cast<Eigen::Index>(outcome)).maxCoeff(&g);
    const std::size_t target = (hi * new_shape[slot] + static_cast<std::size_t>(g)) * stride + lo;
    map(static_cast<Eigen::Index>(target), static_cast<Eigen::Index>(alpha)) = 1.0;
  }
  const Matrix m = map.cast<Complex>();
  return DecoherenceRecord(schedule_, std::move(new_shape), m * table_ * m.transpose());
}

DecoherenceRecord decoherence_functional(const DensityOperator& rho, const Schedule& schedule,
                                         std::span<const ProjectiveDecomposition> decompositions,
                                         const Hamiltonian& h) {
  if (schedule.size() < 2) {
    throw std::invalid_argument("decoherence_functional: need 2 to 4 times");
  }
  const auto evolved = evolved_decompositions(rho, schedule, decompositions, h);
  auto shape = shape_of(evolved);
  std::size_t count = 1;
  for (std::size_t s : shape) count *= s;
  if (count > kMaxDecoherenceHistories) {
    throw std::invalid_argument("decoherence_functional: too many histories for a dense table");
  }
  const std::vector<Matrix> ops = detail::class_operators(evolved);
  const auto d2 = static_cast<Eigen::Index>(rho.dim() * rho.dim());
  const auto hc = static_cast<Eigen::Index>(count);
  Matrix a(d2, hc);
  Matrix b(d2, hc);
  for (Eigen::Index k = 0; k < hc; ++k) {
    const Matrix& c = ops[static_cast<std::size_t>(k)];
    const Matrix cr = c * rho.matrix();
    a.col(k) = Eigen::Map<const Vector>(cr.data(), d2);
    b.col(k) = Eigen::Map<const Vector>(c.data(), d2);
  }
  // D(alpha, alpha') = sum_ij (C_alpha rho)_ij conj(C_alpha')_ij.
  Matrix table = a.transpose() * b.conjugate();
  return DecoherenceRecord(schedule, std::move(shape), std::move(table));
}

// ---------------------------------------------------------------------------
// Interference

InterferenceTable::InterferenceTable(std::size_t first_outcomes, std::size_t final_outcomes)
    : first_(first_outcomes), final_(final_outcomes) {
  if (first_ < 2 || final_ < 1) throw std::invalid_argument("InterferenceTable: bad outcome counts");
  values_.assign(pair_count() * final_, 0.0);
}

std::size_t InterferenceTable::index(std::size_t n, std::size_t n_prime, std::size_t m) const {
  if (n == n_prime || n >= first_ || n_prime >= first_ || m >= final_) {
    throw std::out_of_range("InterferenceTable: index out of range");
  }
  if (n > n_prime) std::swap(n, n_prime);
  // Pairs (n < n') enumerated row by row.
  const std::size_t pair = n * (2 * first_ - n - 1) / 2 + (n_prime - n - 1);
  return pair * final_ + m;
}

double InterferenceTable::operator()(std::size_t n, std::size_t n_prime, std::size_t m) const {
  return values_[index(n, n_prime, m)];
}

double& InterferenceTable::entry(std::size_t n, std::size_t n_prime, std::size_t m) {
  return values_[index(n, n_prime, m)];
}

double InterferenceTable::pair_sum(std::size_t n, std::size_t n_prime) const {
  double s = 0.0;
  for (std::size_t m = 0; m < final_; ++m) s += (*this)(n, n_prime, m);
  return s;
}

double InterferenceTable::max_abs() const {
  double out = 0.0;
  for (double v : values_) out = std::max(out, std::abs(v));
  return out;
}

InterferenceTable interference_terms(const DecoherenceRecord& record) {
  if (record.arity() != 2) throw std::invalid_argument("interference_terms: record must be two-time");
  const std::size_t first = record.shape()[0];
  const std::size_t last = record.shape()[1];
  InterferenceTable out(first, last);
  for (std::size_t n = 0; n < first; ++n) {
    for (std::size_t np = n + 1; np < first; ++np) {
      for (std::size_t m = 0; m < last; ++m) {
        out.entry(n, np, m) = record({n, m}, {np, m}).real();
      }
    }
  }
  return out;
}

std::vector<double> coherence_witness(const DecoherenceRecord& record,
                                      const std::optional<SignPattern>& signs) {
  if (record.arity() != 2) throw std::invalid_argument("coherence_witness: record must be two-time");
  const std::size_t first = record.shape()[0];
  const std::size_t last = record.shape()[1];
  Eigen::MatrixXi groups;
  if (signs) {
    if (signs->size() != first) {
      throw std::invalid_argument("coherence_witness: sign list does not match first-time outcomes");
    }
    groups = Eigen::MatrixXi::Zero(2, static_cast<Eigen::Index>(first));
    bool plus = false;
    bool minus = false;
    for (std::size_t n = 0; n < first; ++n) {
      const int s = (*signs)[n];
      if (s != 1 && s != -1) throw std::invalid_argument("coherence_witness: signs must be +/-1");
      groups(s > 0 ? 0 : 1, static_cast<Eigen::Index>(n)) = 1;
      (s > 0 ? plus : minus) = true;
    }
    if (!plus || !minus) throw std::invalid_argument("coherence_witness: need both signs");
  } else {
    groups = Eigen::MatrixXi::Identity(static_cast<Eigen::Index>(first),
                                       static_cast<Eigen::Index>(first));
  }
  const DecoherenceRecord grouped = record.coarse_grained(0, groups);
  const HistoryTable disturbed = grouped.diagonal().marginal({1});
  std::vector<double> w = record.undisturbed_final();
  for (std::size_t m = 0; m < last; ++m) w[m] -= disturbed[m];
  return w;
}

}  // namespace lgmr
