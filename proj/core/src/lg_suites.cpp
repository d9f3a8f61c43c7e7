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

#include <stdexcept>

#include "lgmr/mrconds.hpp"

namespace lgmr {

namespace {

using Idx = Eigen::Index;

Idx ix(std::size_t n) { return static_cast<Idx>(n); }

std::string sign_word(std::initializer_list<int> signs) {
  std::string s;
  for (int v : signs) s += v > 0 ? '+' : '-';
  return s;
}

void check_square(const PairMoments& m, std::size_t n, const char* what) {
  if (m.outcomes_i() != n || m.outcomes_j() != n) {
    throw std::invalid_argument(std::string(what) + ": moment sets must share the outcome count");
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Two times

std::vector<ConditionReport> lg2_suite(const PairMoments& m, const TimePair& pair, double tol) {
  std::vector<ConditionReport> out;
  out.reserve(m.outcomes_i() * m.outcomes_j());
  for (std::size_t a = 0; a < m.outcomes_i(); ++a) {
    for (std::size_t b = 0; b < m.outcomes_j(); ++b) {
      const double lhs = 1.0 + m.first_i(ix(a)) + m.first_j(ix(b)) + m.corr(ix(a), ix(b));
      out.push_back(make_report({Family::LG2Nvalued, pair.label(), "", {a, b}}, lhs,
                                Sense::GreaterEq, 0.0, 0.0, tol));
    }
  }
  return out;
}

std::vector<ConditionReport> lg2_suite(const HistoryTable& quasi, const TimePair& pair,
                                       double tol) {
  return lg2_suite(moments_from_table(quasi), pair, tol);
}

std::vector<ConditionReport> lg2_dichotomic(double qi, double qj, double cij, const TimePair& pair,
                                            double tol) {
  std::vector<ConditionReport> out;
  for (int si : {1, -1}) {
    for (int sj : {1, -1}) {
      const double lhs = 1.0 + si * qi + sj * qj + si * sj * cij;
      out.push_back(make_report({Family::LG2Dichotomic, pair.label(), sign_word({si, sj}), {}},
                                lhs, Sense::GreaterEq, 0.0, 0.0, tol));
    }
  }
  return out;
}

QrMoments qr_moments(const PairMoments& m) {
  check_square(m, 3, "qr_moments");
  QrMoments q;
  q.q1 = m.first_i(0);
  q.r1 = m.first_i(1);
  q.q2 = m.first_j(0);
  q.r2 = m.first_j(1);
  q.qq = m.corr(0, 0);
  q.qr = m.corr(0, 1);
  q.rq = m.corr(1, 0);
  q.rr = m.corr(1, 1);
  return q;
}

std::vector<ConditionReport> lg2_qrs_reduced(const QrMoments& m, const TimePair& pair, double tol) {
  struct Row {
    const char* word;
    std::size_t a, b;
    Sense sense;
    double lhs;
  };
  const Row rows[] = {
      {"QQ", 0, 0, Sense::GreaterEq, 1.0 + m.q1 + m.q2 + m.qq},
      {"RQ", 1, 0, Sense::GreaterEq, 1.0 + m.r1 + m.q2 + m.rq},
      {"QR", 0, 1, Sense::GreaterEq, 1.0 + m.q1 + m.r2 + m.qr},
      {"RR", 1, 1, Sense::GreaterEq, 1.0 + m.r1 + m.r2 + m.rr},
      {"SS", 2, 2, Sense::GreaterEq, m.qq + m.qr + m.rq + m.rr},
      {"SQ", 2, 0, Sense::LessEq, m.q1 + m.r1 + m.qq + m.rq},
      {"SR", 2, 1, Sense::LessEq, m.q1 + m.r1 + m.qr + m.rr},
      {"QS", 0, 2, Sense::LessEq, m.q2 + m.r2 + m.qq + m.qr},
      {"RS", 1, 2, Sense::LessEq, m.q2 + m.r2 + m.rq + m.rr},
  };
  std::vector<ConditionReport> out;
  for (const Row& r : rows) {
    out.push_back(make_report({Family::LG2QRS, pair.label(), r.word, {r.a, r.b}}, r.lhs, r.sense,
                              0.0, 0.0, tol));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Three times

std::vector<ConditionReport> lg3_suite(const PairMoments& c12, const PairMoments& c23,
                                       const PairMoments& c13, const FlipSigns& flips,
                                       double tol) {
  const std::size_t n = c12.outcomes_i();
  check_square(c12, n, "lg3_suite");
  check_square(c23, n, "lg3_suite");
  check_square(c13, n, "lg3_suite");
  for (int s : flips) {
    if (s != 1 && s != -1) throw std::invalid_argument("lg3_suite: flip signs must be +/-1");
  }
  const auto [s1, s2, s3] = flips;
  const std::string variant = flips == kNoFlip ? "" : sign_word({s1, s2, s3});
  std::vector<ConditionReport> out;
  out.reserve(n * n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        const double lhs = 1.0 + s1 * s2 * c12.corr(ix(a), ix(b)) +
                           s2 * s3 * c23.corr(ix(b), ix(c)) + s1 * s3 * c13.corr(ix(a), ix(c));
        out.push_back(make_report({Family::LG3Nvalued, "123", variant, {a, b, c}}, lhs,
                                  Sense::GreaterEq, 0.0, 0.0, tol));
      }
    }
  }
  return out;
}

std::vector<ConditionReport> lg3_suite(const ScheduleMoments& m, const FlipSigns& flips,
                                       double tol) {
  if (m.times != 3) throw std::invalid_argument("lg3_suite: three-time moments required");
  return lg3_suite(m.at(0, 1), m.at(1, 2), m.at(0, 2), flips, tol);
}

std::vector<ConditionReport> lg3_sign_variants(const ScheduleMoments& m, double tol) {
  std::vector<ConditionReport> out;
  for (const FlipSigns& f : kFlipClasses) {
    auto part = lg3_suite(m, f, tol);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::vector<ConditionReport> lg3_dichotomic(double c12, double c23, double c13, double tol) {
  std::vector<ConditionReport> out;
  for (const FlipSigns& f : kFlipClasses) {
    const auto [s1, s2, s3] = f;
    const double lhs = 1.0 + s1 * s2 * c12 + s2 * s3 * c23 + s1 * s3 * c13;
    out.push_back(make_report({Family::LG3Dichotomic, "123", sign_word({s1, s2, s3}), {}}, lhs,
                              Sense::GreaterEq, 0.0, 0.0, tol));
  }
  return out;
}

const std::array<std::string, 27>& lg3_qrs_order() {
  static const std::array<std::string, 27> order{
      "QQQ", "RQQ", "QRQ", "RRQ", "QQR", "RQR", "QRR", "RRR", "SQQ",
      "SRQ", "SQR", "SRR", "QSQ", "RSQ", "QSR", "RSR", "QQS", "RQS",
      "QRS", "RRS", "SSR", "SSQ", "QSS", "RSS", "SQS", "SRS", "SSS"};
  return order;
}

namespace {

std::size_t letter_index(char c) {
  switch (c) {
    case 'Q': return 0;
    case 'R': return 1;
    case 'S': return 2;
  }
  throw std::invalid_argument("lg3_qrs_full: bad letter");
}

// <X_i Y_j> with every S eliminated through Q + R + S = -1.
double qrs_corr(const QrMoments& m, std::size_t x, std::size_t y) {
  const double first[2] = {m.q1, m.r1};
  const double second[2] = {m.q2, m.r2};
  const double base[2][2] = {{m.qq, m.qr}, {m.rq, m.rr}};
  if (x < 2 && y < 2) return base[x][y];
  if (x == 2 && y < 2) return -second[y] - base[0][y] - base[1][y];
  if (x < 2 && y == 2) return -first[x] - base[x][0] - base[x][1];
  return 1.0 + m.q1 + m.q2 + m.r1 + m.r2 + m.qq + m.qr + m.rq + m.rr;
}

}  // namespace

std::vector<ConditionReport> lg3_qrs_full(const QrMoments& m12, const QrMoments& m23,
                                          const QrMoments& m13, double tol) {
  std::vector<ConditionReport> out;
  for (const std::string& w : lg3_qrs_order()) {
    const std::size_t a = letter_index(w[0]);
    const std::size_t b = letter_index(w[1]);
    const std::size_t c = letter_index(w[2]);
    const double lhs = 1.0 + qrs_corr(m12, a, b) + qrs_corr(m23, b, c) + qrs_corr(m13, a, c);
    out.push_back(make_report({Family::LG3QRS, "123", w, {a, b, c}}, lhs, Sense::GreaterEq, 0.0,
                              0.0, tol));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Four times

namespace {

const char* const kChshPairs[4] = {"12", "23", "34", "14"};

}  // namespace

std::vector<ConditionReport> lg4_suite(const PairMoments& c12, const PairMoments& c23,
                                       const PairMoments& c34, const PairMoments& c14,
                                       std::size_t minus_position, double tol) {
  if (minus_position > 3) throw std::invalid_argument("lg4_suite: minus position must be 0..3");
  const std::size_t n = c12.outcomes_i();
  for (const PairMoments* m : {&c12, &c23, &c34, &c14}) check_square(*m, n, "lg4_suite");
  double sg[4] = {1.0, 1.0, 1.0, 1.0};
  sg[minus_position] = -1.0;
  const std::string variant = std::string("-") + kChshPairs[minus_position];
  std::vector<ConditionReport> out;
  out.reserve(n * n * n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t d = 0; d < n; ++d) {
          const double lhs = sg[0] * c12.corr(ix(a), ix(b)) + sg[1] * c23.corr(ix(b), ix(c)) +
                             sg[2] * c34.corr(ix(c), ix(d)) + sg[3] * c14.corr(ix(a), ix(d));
          out.push_back(make_report({Family::LG4CHSH, "1234", variant, {a, b, c, d}}, lhs,
                                    Sense::Within, -2.0, 2.0, tol));
        }
      }
    }
  }
  return out;
}

std::vector<ConditionReport> lg4_suite(const ScheduleMoments& m, std::size_t minus_position,
                                       double tol) {
  if (m.times != 4) throw std::invalid_argument("lg4_suite: four-time moments required");
  return lg4_suite(m.at(0, 1), m.at(1, 2), m.at(2, 3), m.at(0, 3), minus_position, tol);
}

std::vector<ConditionReport> lg4_dichotomic(double c12, double c23, double c34, double c14,
                                            double tol) {
  const double c[4] = {c12, c23, c34, c14};
  std::vector<ConditionReport> out;
  for (std::size_t k = 0; k < 4; ++k) {
    double lhs = 0.0;
    for (std::size_t p = 0; p < 4; ++p) lhs += (p == k ? -1.0 : 1.0) * c[p];
    out.push_back(make_report({Family::LG4Dichotomic, "1234", std::string("-") + kChshPairs[k], {}},
                              lhs, Sense::Within, -2.0, 2.0, tol));
  }
  return out;
}

}  // namespace lgmr
