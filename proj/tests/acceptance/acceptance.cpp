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


// Acceptance suite: one PASS/FAIL line per criterion; exits 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "lgmr/fine.hpp"
#include "lgmr/runner.hpp"
#include "lgmr/scan.hpp"
#include "oracles.hpp"

using namespace lgmr;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int number;
  const char* name;
  double budget_s;  // 0: no runtime bound
  std::function<Outcome()> run;
};

std::string fmt(const char* f, double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

double max_abs_diff(double a, double b, double acc) { return std::max(acc, std::abs(a - b)); }

Matrix pure(oracle::Gen& g, int n) {
  const Vector v = g.state(n);
  return v * v.adjoint();
}

// ---------------------------------------------------------------------------

Outcome lueders_bound_qubit() {
  ScenarioSpec s;
  s.dim = 2;
  s.state = StateKind::Basis;
  s.hamiltonian = HamiltonianKind::SpinPrecession;  // omega J_x = (omega / 2) sigma_x
  s.omega = 1.0;
  s.axis = 'x';
  s.schedule = ScheduleKind::EqualSpacing;
  s.time_count = 3;
  const SweepAxis tau{SweepParameter::Spacing, 0, 0.05, std::numbers::pi, 64};
  const ExtremumRecord r = maximize_violation(s, std::span(&tau, 1), Family::LG3Nvalued);
  return {std::abs(r.margin + 0.5) <= 1e-6,
          "margin=" + fmt("%.12f", r.margin) + " tau=" + fmt("%.6f", r.parameters.at(0))};
}

Outcome fine_audit() {
  ScenarioSpec spec;
  spec.dim = 3;
  spec.state = StateKind::PureRandom;
  spec.hamiltonian = HamiltonianKind::RandomHermitian;
  spec.schedule = ScheduleKind::RandomTimes;
  spec.time_count = 3;
  spec.horizon = 3.0;
  const auto batch = generate_batch(spec, 2026, 500);
  AuditOptions opt;
  opt.band = 1e-7;
  const AuditReport rep = equivalence_audit(batch, opt);
  std::size_t agree = 0;
  std::size_t outside = 0;
  for (const auto& r : rep.records) {
    if (r.in_band) continue;
    ++outside;
    agree += r.lg_verdict == r.feasible;
  }
  const std::size_t feasible = rep.records.size() - rep.infeasible;
  return {rep.robust_mismatches == 0 && outside > 0 && agree == outside,
          std::to_string(agree) + "/" + std::to_string(outside) + " agree outside band, " +
              std::to_string(rep.band_excluded) + " in band, " + std::to_string(feasible) +
              " feasible"};
}

Outcome identity_suite() {
  oracle::Gen g(303);
  const int n = 3;
  const auto dec = fine_decomposition(3);
  double pqd = 0, wit = 0, vni = 0, six_literal = 0, six_fixed = 0, lgvn_literal = 0, lgvn_fixed = 0;
  double mom = 0, p12 = 0, q123 = 0, p123 = 0;
  for (int c = 0; c < 100; ++c) {
    const Matrix rho_m = c % 2 == 0 ? pure(g, n) : g.mixed(n);
    const Matrix h_m = g.hermitian(n);
    const auto t = g.times(3);
    const DensityOperator rho(rho_m);
    const Hamiltonian h(h_m);
    const Schedule s3(t);
    const Schedule s2({t[0], t[1]});

    // q(alpha) = p(alpha) + Re D(alpha, not alpha), class operators built here.
    const HistoryTable q = quasi_prob(rho, s3, std::span(&dec, 1), h);
    const HistoryTable p = sequential_prob(rho, s3, std::span(&dec, 1), h);
    const auto fine = oracle::fine(n);
    for (std::size_t k = 0; k < q.size(); ++k) {
      const HistoryString a = q.unflatten(k);
      Matrix cls = Matrix::Identity(n, n);
      for (std::size_t j = 0; j < 3; ++j) cls = oracle::heis(fine[a[j]], h_m, t[j]) * cls;
      const Matrix neg = Matrix::Identity(n, n) - cls;
      pqd = max_abs_diff(q[k], p[k] + (cls * rho_m * neg.adjoint()).trace().real(), pqd);
    }

    // Witness = 2 x interference sum.
    const auto rec = decoherence_functional(rho, s2, std::span(&dec, 1), h);
    const auto w = coherence_witness(rec);
    auto i_or = [&](int a, int b, int m) { return oracle::interference(rho_m, h_m, t[0], t[1], a, b, m); };
    for (int m = 0; m < n; ++m) {
      double sum = 0.0;
      for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) sum += i_or(a, b, m);
      }
      wit = max_abs_diff(w[static_cast<std::size_t>(m)], 2.0 * sum, wit);
    }

    // C^L - C^vN = sum_{n != n'} sum_m eps(n) eps(m) I_{n n'}(m).
    for (int plus = 0; plus < n; ++plus) {
      SignPattern eps(3, -1);
      eps[static_cast<std::size_t>(plus)] = 1;
      const auto qd = make_dichotomic(dec, eps);
      const double cl = correlator_luders(rho, h, t[0], t[1], qd, qd);
      const double cv = correlator_vn(rho, h, t[0], t[1], dec, eps);
      double rhs = 0.0;
      for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
          if (a == b) continue;
          for (int m = 0; m < n; ++m) rhs += eps[a] * eps[m] * i_or(a, b, m);
        }
      }
      vni = max_abs_diff(cl - cv, rhs, vni);

      if (plus == 0) {
        // Signs (+,-,-) with A, B, C the three outcomes.
        const double i_bc_a = i_or(1, 2, 0);
        six_literal = max_abs_diff(cv, cl - 4.0 * i_bc_a, six_literal);
        six_fixed = max_abs_diff(cv, cl + 4.0 * i_bc_a, six_fixed);
        const double m1 = expectation(rho, h, t[0], qd);
        const double m2 = expectation(rho, h, t[1], qd);
        const auto seq = oracle::sequential(rho_m, h_m, {t[0], t[1]}, {fine, fine});
        const double lhs = 1.0 + m1 + m2 + cv;
        const double base = seq[0] + i_or(0, 1, 0) + i_or(0, 2, 0);
        lgvn_literal = max_abs_diff(lhs, 4.0 * (base - i_bc_a), lgvn_literal);
        lgvn_fixed = max_abs_diff(lhs, 4.0 * (base + i_bc_a), lgvn_fixed);
      }
    }

    // Moment expansions for a two-sign grouping.
    SignPattern eps{1, c % 3 == 0 ? 1 : -1, -1};
    const auto qd = make_dichotomic(dec, eps);
    const auto grp = oracle::grouping(eps);
    const double m1 = expectation(rho, h, t[0], qd);
    const double m2 = expectation(rho, h, t[1], qd);
    const double c12 = correlator_luders(rho, h, t[0], t[1], qd, qd);
    const Matrix q1 = oracle::heis(qd.op(), h_m, t[0]);
    const Matrix q2 = oracle::heis(qd.op(), h_m, t[1]);
    const double m2_after =
        m2 + 0.5 * ((q1 * q2 - q2 * q1) * q1 * rho_m).trace().real();
    const auto q_or = oracle::quasi(rho_m, h_m, {t[0], t[1]}, {grp, grp});
    const auto p_or = oracle::sequential(rho_m, h_m, {t[0], t[1]}, {grp, grp});
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < 2; ++b) {
        const int s1 = a == 0 ? 1 : -1;
        const int s2 = b == 0 ? 1 : -1;
        mom = max_abs_diff(q_or[2 * a + b], 0.25 * (1 + s1 * m1 + s2 * m2 + s1 * s2 * c12), mom);
        p12 = max_abs_diff(p_or[2 * a + b], 0.25 * (1 + s1 * m1 + s2 * m2_after + s1 * s2 * c12), p12);
      }
    }
    const std::vector<DichotomicObservable> obs(3, qd);
    const CorrelatorSet set = dressed_moments(rho, h, s3, obs);
    const HistoryTable qm = quasi_from_moments(set);
    const HistoryTable pm = sequential_from_moments(set);
    const auto q3 = oracle::quasi(rho_m, h_m, t, {grp, grp, grp});
    const auto p3 = oracle::sequential(rho_m, h_m, t, {grp, grp, grp});
    for (std::size_t k = 0; k < 8; ++k) {
      q123 = max_abs_diff(qm[k], q3[k], q123);
      p123 = max_abs_diff(pm[k], p3[k], p123);
    }
  }
  const double tol = 1e-12;
  const double others = std::max({pqd, wit, vni, mom, p12, q123, p123});
  const bool pass = others <= tol && six_literal <= tol && lgvn_literal <= tol;
  std::string d = "pqd=" + fmt("%.1e", pqd) + " wit=" + fmt("%.1e", wit) + " vNI=" + fmt("%.1e", vni) +
                  " mom=" + fmt("%.1e", mom) + " p12=" + fmt("%.1e", p12) + " q123=" + fmt("%.1e", q123) +
                  " p123=" + fmt("%.1e", p123) + "; (+,-,-) C^vN=C^L-4I_BC(A): " + fmt("%.2e", six_literal) +
                  " [with +4I_BC(A): " + fmt("%.1e", six_fixed) + "]; LGvn as stated: " +
                  fmt("%.2e", lgvn_literal) + " [with +I_BC(A): " + fmt("%.1e", lgvn_fixed) + "]";
  return {pass, d};
}

Outcome dichotomic_reduction() {
  oracle::Gen g(404);
  const auto dec = fine_decomposition(2);
  double worst = 0.0;
  bool sets_match = true;
  // Every margin of one list appears in the other, to tol.
  auto same_set = [](const std::vector<double>& a, const std::vector<double>& b, double tol) {
    auto covered = [tol](const std::vector<double>& x, const std::vector<double>& y) {
      return std::all_of(x.begin(), x.end(), [&](double v) {
        return std::any_of(y.begin(), y.end(), [&](double u) { return std::abs(u - v) <= tol; });
      });
    };
    return covered(a, b) && covered(b, a);
  };
  for (int c = 0; c < 100; ++c) {
    const Matrix rho_m = c % 2 == 0 ? pure(g, 2) : g.mixed(2);
    const auto t = g.times(3);
    const DensityOperator rho(rho_m);
    const Hamiltonian h(g.hermitian(2));
    const auto m = schedule_moments(rho, h, Schedule(t), dec, MeasurementPolicy::Luders);
    const auto q = single_plus(dec, 0);
    for (std::size_t k = 0; k < 3; ++k) {
      const auto [i, j] = std::pair{m.pairs[k].i, m.pairs[k].j};
      const double qi = expectation(rho, h, t[i], q);
      const double qj = expectation(rho, h, t[j], q);
      const double cij = correlator_luders(rho, h, t[i], t[j], q, q);
      std::vector<double> a, b;
      for (const auto& r : lg2_suite(m.moments[k], m.pairs[k])) a.push_back(r.margin);
      for (const auto& r : lg2_dichotomic(qi, qj, cij, m.pairs[k])) b.push_back(r.margin);
      sets_match = sets_match && a.size() == 4 && same_set(a, b, 1e-12);
      for (double v : a) {
        double best = std::numeric_limits<double>::infinity();
        for (double u : b) best = std::min(best, std::abs(u - v));
        worst = std::max(worst, best);
      }
    }
    const double c12 = correlator_luders(rho, h, t[0], t[1], q, q);
    const double c23 = correlator_luders(rho, h, t[1], t[2], q, q);
    const double c13 = correlator_luders(rho, h, t[0], t[2], q, q);
    std::vector<double> a, b;
    for (const auto& r : lg3_suite(m)) a.push_back(r.margin);
    for (const auto& r : lg3_dichotomic(c12, c23, c13)) b.push_back(r.margin);
    sets_match = sets_match && same_set(a, b, 1e-12);
    for (double v : a) {
      double best = std::numeric_limits<double>::infinity();
      for (double u : b) best = std::min(best, std::abs(u - v));
      worst = std::max(worst, best);
    }
  }
  return {sets_match, "max margin distance " + fmt("%.1e", worst)};
}

Outcome interference_counting() {
  const std::size_t c2 = InterferenceTable(2, 2).independent_count();
  const std::size_t c3 = InterferenceTable(3, 3).independent_count();
  const std::size_t c4 = InterferenceTable(4, 4).independent_count();
  const std::size_t r4_single = nsit_rank(4, 4, single_plus_groupings(4), false);
  const auto full4 = complete_groupings(4);
  const std::size_t r4_full = nsit_rank(4, 4, full4, false);
  const bool two_block = std::any_of(full4.begin(), full4.end(), [](const NamedSigns& s) {
    return std::count(s.signs.begin(), s.signs.end(), 1) >= 2;
  });
  const std::size_t r3 = nsit_rank(3, 3, single_plus_groupings(3), false);

  // The same counts as reported by an evaluated suite.
  ScenarioSpec spec;
  spec.dim = 4;
  spec.time_count = 2;
  spec.seed = 5;
  const Scenario sc = generate_scenario(spec);
  const auto rec = decoherence_functional(sc.rho, sc.schedule, std::span(&sc.decomposition, 1), sc.h);
  const NsitSuite suite = nsit2_suite(rec, full4);

  const bool pass = c2 == 1 && c3 == 6 && c4 == 18 && r3 == 6 && r4_single < 18 && two_block &&
                    r4_full == 18 && suite.independent == 18 && suite.complete();
  return {pass, "counts " + std::to_string(c2) + "/" + std::to_string(c3) + "/" + std::to_string(c4) +
                    ", N=4 rank " + std::to_string(r4_single) + " with single-plus, " +
                    std::to_string(r4_full) + " with " + std::to_string(full4.size() - 4) +
                    " two-block"};
}

Outcome non_hierarchy() {
  const SearchRecord r = nonhierarchy_search(3, 11);
  if (!r.found || !r.scenario) return {false, "no scenario found"};
  const Scenario& s = *r.scenario;
  const auto nsit = evaluate_family(s, Family::NsitFull);
  const auto lg = evaluate_family(s, Family::LG2Nvalued);
  double w = 0.0;
  for (const auto& x : nsit) w = std::max(w, std::abs(x.lhs));
  // Independent check of the witness from explicit interference terms.
  double w_or = 0.0;
  const int n = 3;
  for (int m = 0; m < n; ++m) {
    double sum = 0.0;
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        sum += oracle::interference(s.rho.matrix(), s.h.matrix(), s.schedule[0], s.schedule[1], a, b, m);
      }
    }
    w_or = std::max(w_or, std::abs(2.0 * sum));
  }
  const double lg_worst = worst_margin(lg);
  return {w <= 1e-9 && w_or <= 1e-9 && lg_worst <= -1e-3,
          "max |NSIT| " + fmt("%.1e", w) + " (explicit " + fmt("%.1e", w_or) + "), worst LG2 margin " +
              fmt("%.5f", lg_worst)};
}

Outcome beyond_lueders() {
  const SearchRecord r = beyond_luders_search(3, 5);
  if (!r.scenario) return {false, "no scenario returned"};
  Scenario vn = *r.scenario;
  const double vn_margin = worst_margin(evaluate_family(vn, Family::LG3Nvalued));
  Scenario lu = vn;
  lu.policy = MeasurementPolicy::Luders;
  const double lu_margin = worst_margin(evaluate_family(lu, Family::LG3Nvalued));
  // Two-time interference behind the gap, pair by pair.
  double gap = 0.0;
  const std::array<std::array<std::size_t, 2>, 3> pairs{{{0, 1}, {1, 2}, {0, 2}}};
  for (const auto& pr : pairs) {
    const auto rec = decoherence_functional(vn.rho, vn.schedule.subset(pr), std::span(&vn.decomposition, 1), vn.h);
    const auto it = interference_terms(rec);
    for (std::size_t plus = 0; plus < 3; ++plus) {
      SignPattern eps(3, -1);
      eps[plus] = 1;
      const double g = vn_luders_gap(it, eps, eps);
      const auto q = make_dichotomic(vn.decomposition, eps);
      const double direct = correlator_luders(vn.rho, vn.h, vn.schedule[pr[0]], vn.schedule[pr[1]], q, q) -
                            correlator_vn(vn.rho, vn.h, vn.schedule[pr[0]], vn.schedule[pr[1]], vn.decomposition, eps);
      if (std::abs(g - direct) > 1e-10) return {false, "interference gap does not match correlators"};
      gap = std::max(gap, std::abs(g));
    }
  }
  return {vn_margin <= -0.55 && gap > 1e-6 && lu_margin >= -0.5 - 1e-6,
          "vN margin " + fmt("%.6f", vn_margin) + ", Lueders margin " + fmt("%.6f", lu_margin) +
              ", max two-time gap " + fmt("%.3f", gap)};
}

Outcome fine_ansatz() {
  oracle::Gen g(808);
  const auto dec = fine_decomposition(2);
  std::size_t accepted = 0;
  std::size_t tried = 0;
  double worst_match = 0.0;
  double min_entry = std::numeric_limits<double>::infinity();
  double chsh = 0.0;
  bool ok = true;
  const std::vector<TimePair> triple{{0, 1}, {1, 2}, {0, 2}};
  while (accepted < 100 && tried < 50000) {
    ++tried;
    const double weight = g.uniform(0.05, 0.6);
    const Matrix rho_m = weight * pure(g, 2) + (1.0 - weight) * 0.5 * Matrix::Identity(2, 2);
    const auto t = g.times(4, 10.0);
    const DensityOperator rho(rho_m);
    const Hamiltonian h(g.hermitian(2, 5.0));
    const auto m = schedule_moments(rho, h, Schedule(t), dec, MeasurementPolicy::Luders);
    auto sub = [&](std::size_t a, std::size_t b, std::size_t c) {
      ScheduleMoments s;
      s.times = 3;
      s.pairs = triple;
      s.moments = {m.at(a, b), m.at(b, c), m.at(a, c)};
      return s;
    };
    const ScheduleMoments m123 = sub(0, 1, 2);
    const ScheduleMoments m134 = sub(0, 2, 3);
    bool pass = true;
    for (const ScheduleMoments* s : {&m123, &m134}) {
      for (std::size_t k = 0; k < 3; ++k) pass = pass && all_satisfied(lg2_suite(s->moments[k]));
      pass = pass && all_satisfied(lg3_sign_variants(*s));
    }
    if (!pass) continue;
    ++accepted;
    const FeasibilityResult f123 = joint_feasibility(marginals_from_moments(m123));
    const FeasibilityResult f134 = joint_feasibility(marginals_from_moments(m134));
    if (!f123.feasible || !f134.feasible) {
      ok = false;
      continue;
    }
    const HistoryTable joint = fine_ansatz_join(*f123.joint, *f134.joint);
    min_entry = std::min(min_entry, joint.min());
    const std::vector<std::pair<std::size_t, std::size_t>> pairs{{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}};
    std::array<double, 4> corr{};
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      const auto [a, b] = pairs[k];
      const HistoryTable got = joint.marginal({a, b});
      const HistoryTable want = table_from_moments(m.at(a, b));
      for (std::size_t e = 0; e < 4; ++e) worst_match = std::max(worst_match, std::abs(got[e] - want[e]));
      if (k < 4) corr[k] = got[0] - got[1] - got[2] + got[3];
    }
    for (std::size_t minus = 0; minus < 4; ++minus) {
      double sum = 0.0;
      for (std::size_t k = 0; k < 4; ++k) sum += (k == minus ? -1.0 : 1.0) * corr[k];
      chsh = std::max(chsh, std::abs(sum));
    }
  }
  const bool pass = ok && accepted == 100 && min_entry >= -1e-12 && worst_match <= 1e-9 && chsh <= 2.0 + 1e-12;
  return {pass, std::to_string(accepted) + " scenarios (" + std::to_string(tried) + " drawn), min entry " +
                    fmt("%.1e", min_entry) + ", marginal error " + fmt("%.1e", worst_match) +
                    ", max |CHSH| " + fmt("%.4f", chsh)};
}

Outcome qrs_consistency() {
  oracle::Gen g(909);
  const auto dec = fine_decomposition(3);
  double worst = 0.0;
  for (int c = 0; c < 100; ++c) {
    const Matrix rho_m = c % 2 == 0 ? pure(g, 3) : g.mixed(3);
    const auto m = schedule_moments(DensityOperator(rho_m), Hamiltonian(g.hermitian(3)), Schedule(g.times(3)),
                                    dec, MeasurementPolicy::Luders);
    const auto full = lg3_suite(m);
    const auto qrs = lg3_qrs_full(qr_moments(m.at(0, 1)), qr_moments(m.at(1, 2)), qr_moments(m.at(0, 2)));
    for (const auto& r : qrs) {
      const auto& i = r.id.indices;
      worst = std::max(worst, std::abs(r.lhs - full[i[0] * 9 + i[1] * 3 + i[2]].lhs));
    }
  }
  return {worst <= 1e-12, "max entry difference " + fmt("%.1e", worst)};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome determinism() {
  const auto root = std::filesystem::temp_directory_path() / "lgmr_acceptance_determinism";
  std::filesystem::remove_all(root);
  const char* const configs[] = {
      R"({"command": "sweep",
          "scenario": {"dim": 3, "seed": 31, "schedule": {"kind": "equal-spacing", "count": 3}},
          "families": ["LG2-Nvalued", "LG3-Nvalued", "NSIT-full", "LG3-QRS"],
          "axes": [{"parameter": "spacing", "lower": 0.05, "upper": 2.0, "points": 24},
                   {"parameter": "start", "lower": 0.0, "upper": 1.0, "points": 6}]})",
      R"({"command": "evaluate", "all_flips": true,
          "scenario": {"dim": 4, "seed": 32, "state": {"kind": "mixed-random"},
                       "schedule": {"kind": "random", "count": 3, "horizon": 2}}})",
      R"({"command": "fine-audit", "batch": {"count": 24, "base_seed": 33},
          "scenario": {"dim": 3, "schedule": {"kind": "random", "count": 3, "horizon": 3}}})",
  };
  std::size_t compared = 0;
  std::ostringstream log;
  for (std::size_t k = 0; k < std::size(configs); ++k) {
    std::vector<std::vector<std::string>> runs;
    for (unsigned threads : {4U, 4U, 1U}) {
      RunConfig c = parse_config(configs[k]);
      c.threads = threads;
      c.out_dir = (root / ("c" + std::to_string(k) + "_" + std::to_string(runs.size()))).string();
      const RunOutcome out = run_config(c, OutputFormat::Table, log);
      std::vector<std::string> files;
      for (const auto& f : out.files) files.push_back(slurp(f));
      runs.push_back(std::move(files));
    }
    if (runs[0].empty()) return {false, "no tabular output for config " + std::to_string(k)};
    if (runs[0] != runs[1]) return {false, "repeat run differs for config " + std::to_string(k)};
    if (runs[0] != runs[2]) return {false, "serial run differs for config " + std::to_string(k)};
    compared += runs[0].size();
  }
  std::filesystem::remove_all(root);
  return {true, std::to_string(compared) + " files byte-identical over 2 parallel runs and 1 serial run"};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "Lueders bound, three times (qubit)", 10.0, lueders_bound_qubit},
      {2, "generalized Fine theorem audit (500 qutrits)", 300.0, fine_audit},
      {3, "algebraic identity suite (100 qutrits)", 0.0, identity_suite},
      {4, "dichotomic reduction (100 qubits)", 0.0, dichotomic_reduction},
      {5, "interference counting and N=4 completeness", 0.0, interference_counting},
      {6, "non-hierarchy: NSIT holds, LG2 fails", 60.0, non_hierarchy},
      {7, "beyond-Lueders violation under von Neumann", 0.0, beyond_lueders},
      {8, "four-time Fine ansatz (100 scenarios)", 0.0, fine_ansatz},
      {9, "QRS elimination consistency (100 qutrits)", 0.0, qrs_consistency},
      {10, "determinism of tabular exports", 0.0, determinism},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.budget_s > 0.0 && secs > c.budget_s) {
      o.pass = false;
      o.detail += " [over the " + fmt("%.0f", c.budget_s) + " s budget]";
    }
    failed += !o.pass;
    std::printf("%s  criterion %2d  %-46s %7.2f s  %s\n", o.pass ? "PASS" : "FAIL", c.number, c.name, secs,
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
