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
#include <bit>
#include <stdexcept>

#include <Eigen/LU>

#include "lgmr/mrconds.hpp"

namespace lgmr {

std::vector<NamedSigns> single_plus_groupings(std::size_t n) {
  if (n < 2) throw std::invalid_argument("single_plus_groupings: need at least two outcomes");
  std::vector<NamedSigns> out;
  const std::size_t count = n == 2 ? 1 : n;
  for (std::size_t k = 0; k < count; ++k) {
    SignPattern s(n, -1);
    s[k] = 1;
    std::string label;
    if (n == 2) {
      label = "Q";
    } else if (n == 3) {
      label = std::string(1, "QRS"[k]);
    } else {
      label = "Q" + std::to_string(k + 1);
    }
    out.push_back({label, std::move(s)});
  }
  return out;
}

std::vector<NamedSigns> complete_groupings(std::size_t n) {
  std::vector<NamedSigns> out = single_plus_groupings(n);
  std::size_t rank = nsit_rank(n, n, out, false);
  const std::size_t target = InterferenceTable(n, n).independent_count();
  if (n > 20) throw std::invalid_argument("complete_groupings: outcome count too large");
  // Multi-block patterns with element 1 on the + side, plus-set masks in
  // increasing order.
  for (std::size_t mask = 1; mask < (std::size_t{1} << n) && rank < target; mask += 2) {
    const auto plus = static_cast<std::size_t>(std::popcount(mask));
    if (plus < 2 || plus + 2 > n) continue;
    SignPattern s(n, -1);
    std::string label = "B";
    for (std::size_t k = 0; k < n; ++k) {
      if ((mask >> k) & 1U) {
        s[k] = 1;
        label += std::to_string(k + 1);
      }
    }
    out.push_back({label, std::move(s)});
    const std::size_t r = nsit_rank(n, n, out, false);
    if (r > rank) {
      rank = r;
    } else {
      out.pop_back();
    }
  }
  return out;
}

namespace {

void check_signs(const SignPattern& s, std::size_t n) {
  if (s.size() != n) throw std::invalid_argument("NSIT: sign list does not match outcome count");
  bool plus = false;
  bool minus = false;
  for (int v : s) {
    if (v == 1) plus = true;
    else if (v == -1) minus = true;
    else throw std::invalid_argument("NSIT: signs must be +/-1");
  }
  if (!plus || !minus) throw std::invalid_argument("NSIT: grouping needs both signs");
}

}  // namespace

std::size_t nsit_rank(std::size_t first_outcomes, std::size_t final_outcomes,
                      std::span<const NamedSigns> groupings, bool include_full) {
  const std::size_t f = final_outcomes;
  const std::size_t pairs = first_outcomes * (first_outcomes - 1) / 2;
  const std::size_t cols = pairs * (f - 1);
  if (cols == 0) return 0;

  // Unknowns: I_p(m) for m < f - 1; I_p(f - 1) = -sum of the others.
  // A witness with pair coefficients w_p reads W(m) = sum_p w_p I_p(m).
  std::vector<std::vector<double>> pair_weights;
  if (include_full) pair_weights.emplace_back(pairs, 2.0);
  for (const auto& g : groupings) {
    check_signs(g.signs, first_outcomes);
    std::vector<double> w;
    for (std::size_t n = 0; n < first_outcomes; ++n) {
      for (std::size_t np = n + 1; np < first_outcomes; ++np) {
        w.push_back(g.signs[n] != g.signs[np] ? 2.0 : 0.0);
      }
    }
    pair_weights.push_back(std::move(w));
  }
  RealMatrix a = RealMatrix::Zero(static_cast<Eigen::Index>(pair_weights.size() * f),
                                  static_cast<Eigen::Index>(cols));
  Eigen::Index row = 0;
  for (const auto& w : pair_weights) {
    for (std::size_t m = 0; m < f; ++m, ++row) {
      for (std::size_t p = 0; p < pairs; ++p) {
        if (m + 1 < f) {
          a(row, static_cast<Eigen::Index>(p * (f - 1) + m)) = w[p];
        } else {
          for (std::size_t k = 0; k + 1 < f; ++k) {
            a(row, static_cast<Eigen::Index>(p * (f - 1) + k)) = -w[p];
          }
        }
      }
    }
  }
  Eigen::FullPivLU<RealMatrix> lu(a);
  lu.setThreshold(1e-9);
  return static_cast<std::size_t>(lu.rank());
}

NsitSuite nsit2_suite(const DecoherenceRecord& record, std::span<const NamedSigns> groupings,
                      bool include_full, const TimePair& pair, double tol) {
  if (record.arity() != 2) throw std::invalid_argument("nsit2_suite: record must be two-time");
  const std::size_t first = record.shape()[0];
  const std::size_t last = record.shape()[1];
  NsitSuite out;
  if (include_full) {
    const auto w = coherence_witness(record);
    for (std::size_t m = 0; m < last; ++m) {
      out.reports.push_back(make_report({Family::NsitFull, pair.label(), "", {m}}, w[m],
                                        Sense::Zero, 0.0, 0.0, tol));
    }
  }
  for (const auto& g : groupings) {
    check_signs(g.signs, first);
    const auto w = coherence_witness(record, g.signs);
    for (std::size_t m = 0; m < last; ++m) {
      out.reports.push_back(make_report({Family::NsitDichotomic, pair.label(), g.label, {m}}, w[m],
                                        Sense::Zero, 0.0, 0.0, tol));
    }
  }
  out.rank = nsit_rank(first, last, groupings, include_full);
  out.independent = first * (first - 1) / 2 * (last - 1);
  return out;
}

ThreeTimeTables three_time_tables(const DensityOperator& rho, const Hamiltonian& h,
                                  const Schedule& schedule, const ProjectiveDecomposition& dec,
                                  const NamedSigns& grouping) {
  if (schedule.size() != 3) throw std::invalid_argument("three_time_tables: need three times");
  check_signs(grouping.signs, dec.size());
  const ProjectiveDecomposition g = make_dichotomic(dec, grouping.signs).luders_decomposition();
  ThreeTimeTables t;
  t.label = grouping.label;
  const std::array<ProjectiveDecomposition, 3> d3{g, g, dec};
  t.p123 = sequential_prob(rho, schedule, d3, h);
  const std::array<ProjectiveDecomposition, 2> d2{g, dec};
  const std::array<std::size_t, 2> late{1, 2};
  const std::array<std::size_t, 2> outer{0, 2};
  t.p23 = sequential_prob(rho, schedule.subset(late), d2, h);
  t.p13 = sequential_prob(rho, schedule.subset(outer), d2, h);
  t.p3 = single_time_prob(rho, dec, h, schedule[2]);
  return t;
}

NsitSuite nsit3_suite(std::span<const ThreeTimeTables> tables, std::size_t outcomes,
                      std::span<const NamedSigns> groupings, double tol) {
  NsitSuite out;
  for (const auto& t : tables) {
    if (t.p123.arity() != 3 || t.p23.arity() != 2 || t.p13.arity() != 2 ||
        t.p3.size() != outcomes || t.p123.shape()[2] != outcomes) {
      throw std::invalid_argument("nsit3_suite: table shapes do not match");
    }
    const HistoryTable p2_3 = t.p23.marginal({1});
    const HistoryTable p1_23 = t.p123.marginal({1, 2});
    const HistoryTable p1_2_3 = t.p123.marginal({0, 2});
    for (std::size_t n = 0; n < outcomes; ++n) {
      out.reports.push_back(make_report({Family::Nsit3_2_3, "123", t.label, {n}},
                                        t.p3[n] - p2_3[n], Sense::Zero, 0.0, 0.0, tol));
    }
    for (std::size_t s = 0; s < 2; ++s) {
      for (std::size_t n = 0; n < outcomes; ++n) {
        out.reports.push_back(make_report({Family::Nsit3_1_23, "123", t.label, {s, n}},
                                          t.p23.at({s, n}) - p1_23.at({s, n}), Sense::Zero, 0.0,
                                          0.0, tol));
      }
    }
    for (std::size_t s = 0; s < 2; ++s) {
      for (std::size_t n = 0; n < outcomes; ++n) {
        out.reports.push_back(make_report({Family::Nsit3_1_2_3, "123", t.label, {s, n}},
                                          t.p13.at({s, n}) - p1_2_3.at({s, n}), Sense::Zero, 0.0,
                                          0.0, tol));
      }
    }
  }
  out.rank = nsit_rank(outcomes, outcomes, groupings, false);
  out.independent = outcomes * (outcomes - 1) / 2 * (outcomes - 1);
  return out;
}

}  // namespace lgmr
