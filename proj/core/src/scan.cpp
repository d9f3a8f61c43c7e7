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


#include "lgmr/scan.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include <Eigen/QR>

#include "parallel.hpp"

namespace lgmr {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

class Evaluator {
 public:
  Evaluator(const Scenario& s, const EvaluationOptions& o) : s_(s), opt_(o) {}

  std::vector<ConditionReport> run(Family f) {
    const std::size_t n = s_.dim();
    const std::size_t k = s_.schedule.size();
    std::vector<ConditionReport> out;
    auto append = [&out](std::vector<ConditionReport> part) {
      out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    };
    switch (f) {
      case Family::LG2Nvalued:
        for (std::size_t p = 0; p < m().pairs.size(); ++p) {
          append(lg2_suite(m().moments[p], m().pairs[p], opt_.tol));
        }
        break;
      case Family::LG2Dichotomic:
        need(n == 2, f, "needs two outcomes");
        for (std::size_t p = 0; p < m().pairs.size(); ++p) {
          const PairMoments& pm = m().moments[p];
          append(lg2_dichotomic(pm.first_i(0), pm.first_j(0), pm.corr(0, 0), m().pairs[p], opt_.tol));
        }
        break;
      case Family::LG2QRS:
        need(n == 3, f, "needs three outcomes");
        for (std::size_t p = 0; p < m().pairs.size(); ++p) {
          append(lg2_qrs_reduced(qr_moments(m().moments[p]), m().pairs[p], opt_.tol));
        }
        break;
      case Family::LG3Nvalued:
        need(k == 3, f, "needs three times");
        append(opt_.all_flips ? lg3_sign_variants(m(), opt_.tol) : lg3_suite(m(), kNoFlip, opt_.tol));
        break;
      case Family::LG3Dichotomic:
        need(k == 3 && n == 2, f, "needs three times and two outcomes");
        append(lg3_dichotomic(m().at(0, 1).corr(0, 0), m().at(1, 2).corr(0, 0), m().at(0, 2).corr(0, 0),
                              opt_.tol));
        break;
      case Family::LG3QRS:
        need(k == 3 && n == 3, f, "needs three times and three outcomes");
        append(lg3_qrs_full(qr_moments(m().at(0, 1)), qr_moments(m().at(1, 2)),
                            qr_moments(m().at(0, 2)), opt_.tol));
        break;
      case Family::LG4CHSH:
        need(k == 4, f, "needs four times");
        for (std::size_t pos = 0; pos < 4; ++pos) append(lg4_suite(m(), pos, opt_.tol));
        break;
      case Family::LG4Dichotomic:
        need(k == 4 && n == 2, f, "needs four times and two outcomes");
        append(lg4_dichotomic(m().at(0, 1).corr(0, 0), m().at(1, 2).corr(0, 0), m().at(2, 3).corr(0, 0),
                              m().at(0, 3).corr(0, 0), opt_.tol));
        break;
      case Family::NsitFull:
      case Family::NsitDichotomic:
        for (std::size_t i = 0; i < k; ++i) {
          for (std::size_t j = i + 1; j < k; ++j) {
            const std::size_t pos[2] = {i, j};
            const DecoherenceRecord rec = decoherence_functional(
                s_.rho, s_.schedule.subset(pos), std::span(&s_.decomposition, 1), s_.h);
            const NsitSuite suite = nsit2_suite(rec, groupings(), f == Family::NsitFull, {i, j}, opt_.tol);
            for (const auto& r : suite.reports) {
              if (r.id.family == f) out.push_back(r);
            }
          }
        }
        break;
      case Family::Nsit3_2_3:
      case Family::Nsit3_1_23:
      case Family::Nsit3_1_2_3: {
        need(k == 3, f, "needs three times");
        std::vector<ThreeTimeTables> tables;
        for (const auto& g : groupings()) {
          tables.push_back(three_time_tables(s_.rho, s_.h, s_.schedule, s_.decomposition, g));
        }
        const NsitSuite suite = nsit3_suite(tables, n, groupings(), opt_.tol);
        for (const auto& r : suite.reports) {
          if (r.id.family == f) out.push_back(r);
        }
        break;
      }
    }
    return out;
  }

 private:
  static void need(bool ok, Family f, const char* what) {
    if (!ok) throw std::invalid_argument("evaluate_family: " + to_string(f) + " " + what);
  }

  const ScheduleMoments& m() {
    if (!moments_) {
      moments_ = schedule_moments(s_.rho, s_.h, s_.schedule, s_.decomposition, s_.policy);
    }
    return *moments_;
  }

  const std::vector<NamedSigns>& groupings() {
    if (groupings_.empty()) groupings_ = complete_groupings(s_.dim());
    return groupings_;
  }

  const Scenario& s_;
  EvaluationOptions opt_;
  std::optional<ScheduleMoments> moments_;
  std::vector<NamedSigns> groupings_;
};

bool coords_less(const std::vector<double>& a, const std::vector<double>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// Strict weak order on (value, coordinates); NaN is never produced here.
bool better(double va, const std::vector<double>& ca, double vb, const std::vector<double>& cb) {
  if (va != vb) return va < vb;
  return coords_less(ca, cb);
}

std::vector<double> to_std(const RealVector& v) { return {v.data(), v.data() + v.size()}; }

struct Worst {
  double value = kInf;
  std::string id;
};

Worst worst_of(const std::vector<ConditionReport>& reports) {
  Worst w;
  for (const auto& r : reports) {
    if (r.margin < w.value) {
      w.value = r.margin;
      w.id = r.id.to_string();
    }
  }
  return w;
}

}  // namespace

std::vector<ConditionReport> evaluate_family(const Scenario& s, Family family,
                                             const EvaluationOptions& options) {
  return Evaluator(s, options).run(family);
}

std::vector<ConditionReport> evaluate_families(const Scenario& s, std::span<const Family> families,
                                               const EvaluationOptions& options) {
  Evaluator ev(s, options);
  std::vector<ConditionReport> out;
  for (Family f : families) {
    auto part = ev.run(f);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

std::vector<Family> applicable_families(std::size_t outcomes, std::size_t times) {
  std::vector<Family> out;
  if (outcomes == 2) out.push_back(Family::LG2Dichotomic);
  out.push_back(Family::LG2Nvalued);
  if (outcomes == 3) out.push_back(Family::LG2QRS);
  if (times == 3) {
    if (outcomes == 2) out.push_back(Family::LG3Dichotomic);
    out.push_back(Family::LG3Nvalued);
    if (outcomes == 3) out.push_back(Family::LG3QRS);
  }
  if (times == 4) {
    out.push_back(Family::LG4CHSH);
    if (outcomes == 2) out.push_back(Family::LG4Dichotomic);
  }
  out.push_back(Family::NsitFull);
  out.push_back(Family::NsitDichotomic);
  if (times == 3) {
    out.push_back(Family::Nsit3_2_3);
    out.push_back(Family::Nsit3_1_23);
    out.push_back(Family::Nsit3_1_2_3);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Sweeps

std::string to_string(SweepParameter p) {
  switch (p) {
    case SweepParameter::Spacing: return "spacing";
    case SweepParameter::Start: return "start";
    case SweepParameter::Time: return "time";
    case SweepParameter::Omega: return "omega";
    case SweepParameter::BlochTheta: return "bloch_theta";
    case SweepParameter::BlochPhi: return "bloch_phi";
  }
  return "unknown";
}

std::vector<double> SweepAxis::values() const {
  if (points == 0) throw std::invalid_argument("SweepAxis: empty grid");
  if (!std::isfinite(lower) || !std::isfinite(upper)) throw std::invalid_argument("SweepAxis: unbounded range");
  if (points == 1) return {lower};
  std::vector<double> v(points);
  for (std::size_t k = 0; k < points; ++k) {
    v[k] = lower + (upper - lower) * static_cast<double>(k) / static_cast<double>(points - 1);
  }
  v.back() = upper;
  return v;
}

std::string SweepAxis::label() const {
  std::string s = to_string(parameter);
  if (parameter == SweepParameter::Time) s += std::to_string(index + 1);
  return s;
}

void apply_parameter(ScenarioSpec& spec, const SweepAxis& axis, double value) {
  switch (axis.parameter) {
    case SweepParameter::Spacing:
      spec.schedule = ScheduleKind::EqualSpacing;
      spec.spacing = value;
      break;
    case SweepParameter::Start:
      spec.start = value;
      break;
    case SweepParameter::Time:
      if (spec.schedule != ScheduleKind::Explicit || axis.index >= spec.times.size()) {
        throw std::invalid_argument("apply_parameter: time axis needs an explicit schedule entry");
      }
      spec.times[axis.index] = value;
      break;
    case SweepParameter::Omega:
      spec.omega = value;
      break;
    case SweepParameter::BlochTheta:
      spec.bloch_theta = value;
      break;
    case SweepParameter::BlochPhi:
      spec.bloch_phi = value;
      break;
  }
}

SweepResult sweep(const ScenarioSpec& base, std::span<const SweepAxis> axes,
                  std::span<const Family> families, const SweepOptions& options) {
  if (axes.empty() || axes.size() > 2) throw std::invalid_argument("sweep: one or two axes required");
  if (families.empty()) throw std::invalid_argument("sweep: no condition families requested");
  std::vector<std::vector<double>> grids;
  std::size_t total = 1;
  for (const auto& a : axes) {
    grids.push_back(a.values());
    total *= grids.back().size();
  }
  // Configuration errors surface before the parallel loop.
  {
    ScenarioSpec probe = base;
    for (std::size_t d = 0; d < axes.size(); ++d) apply_parameter(probe, axes[d], grids[d].front());
  }

  SweepResult out;
  out.axes.assign(axes.begin(), axes.end());
  out.families.assign(families.begin(), families.end());
  out.points.resize(total);
  std::vector<std::vector<std::string>> ids(total);

  detail::parallel_for(total, options.threads, [&](std::size_t k) {
    SweepPoint& pt = out.points[k];
    ScenarioSpec spec = base;
    std::size_t rest = k;
    pt.coords.assign(axes.size(), 0.0);
    for (std::size_t d = axes.size(); d-- > 0;) {
      const std::size_t i = rest % grids[d].size();
      rest /= grids[d].size();
      pt.coords[d] = grids[d][i];
    }
    for (std::size_t d = 0; d < axes.size(); ++d) apply_parameter(spec, axes[d], pt.coords[d]);
    std::optional<Scenario> sc;
    try {
      sc = generate_scenario(spec);
    } catch (const std::invalid_argument&) {
      return;  // e.g. coincident times at a grid corner
    }
    Evaluator ev(*sc, options.evaluation);
    for (Family f : families) {
      const Worst w = worst_of(ev.run(f));
      pt.worst.push_back(w.value);
      ids[k].push_back(w.id);
    }
  });

  for (std::size_t k = 0; k < total; ++k) {
    const SweepPoint& pt = out.points[k];
    for (std::size_t q = 0; q < pt.worst.size(); ++q) {
      if (!std::isfinite(pt.worst[q])) continue;
      if (!out.extremum || better(pt.worst[q], pt.coords, out.extremum->value, out.extremum->coords)) {
        out.extremum = Extremum{pt.worst[q], pt.coords, base.seed, families[q], ids[k][q]};
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Searches

ExtremumRecord maximize_violation(const ScenarioSpec& base, std::span<const SweepAxis> axes,
                                  Family family, const SearchOptions& options) {
  if (axes.empty()) throw std::invalid_argument("maximize_violation: no free parameters");
  const auto d = static_cast<Eigen::Index>(axes.size());
  Box box{RealVector(d), RealVector(d)};
  for (Eigen::Index i = 0; i < d; ++i) {
    box.lower(i) = axes[static_cast<std::size_t>(i)].lower;
    box.upper(i) = axes[static_cast<std::size_t>(i)].upper;
  }
  box.validate();
  if (options.starts == 0 || options.grid_points == 0) {
    throw std::invalid_argument("maximize_violation: starts and grid points must be positive");
  }

  auto scenario_at = [&](const RealVector& x) {
    ScenarioSpec spec = base;
    for (Eigen::Index i = 0; i < d; ++i) apply_parameter(spec, axes[static_cast<std::size_t>(i)], x(i));
    return generate_scenario(spec);
  };
  auto objective = [&](const RealVector& x) {
    try {
      return worst_of(evaluate_family(scenario_at(x), family, options.evaluation)).value;
    } catch (const std::invalid_argument&) {
      return kInf;
    }
  };
  // Family / scenario mismatches are configuration errors, not infeasible points.
  {
    ScenarioSpec spec = base;
    for (Eigen::Index i = 0; i < d; ++i) {
      apply_parameter(spec, axes[static_cast<std::size_t>(i)], 0.5 * (box.lower(i) + box.upper(i)));
    }
    evaluate_family(generate_scenario(spec), family, options.evaluation);
  }

  // Seed grid: per-axis count so the product is about grid_points.
  const auto per_axis = std::max<std::size_t>(
      2, static_cast<std::size_t>(std::llround(std::pow(static_cast<double>(options.grid_points),
                                                        1.0 / static_cast<double>(d)))));
  std::size_t total = 1;
  for (Eigen::Index i = 0; i < d; ++i) total *= per_axis;
  std::vector<RealVector> seeds(total, RealVector(d));
  for (std::size_t k = 0; k < total; ++k) {
    std::size_t rest = k;
    for (Eigen::Index i = d; i-- > 0;) {
      const std::size_t q = rest % per_axis;
      rest /= per_axis;
      seeds[k](i) = box.lower(i) + (box.upper(i) - box.lower(i)) * static_cast<double>(q) /
                                       static_cast<double>(per_axis - 1);
    }
  }
  std::vector<double> seed_values(total);
  detail::parallel_for(total, options.threads, [&](std::size_t k) { seed_values[k] = objective(seeds[k]); });

  std::vector<std::size_t> order(total);
  for (std::size_t k = 0; k < total; ++k) order[k] = k;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return better(seed_values[a], to_std(seeds[a]), seed_values[b], to_std(seeds[b]));
  });
  const std::size_t starts = std::min(options.starts, total);

  std::vector<NelderMeadResult> refined(starts);
  detail::parallel_for(starts, options.threads, [&](std::size_t s) {
    refined[s] = nelder_mead(objective, seeds[order[s]], options.local, box);
  });

  std::size_t best = 0;
  ExtremumRecord out;
  out.evaluations = total;
  for (std::size_t s = 0; s < starts; ++s) {
    out.evaluations += refined[s].evaluations;
    if (s > 0 && better(refined[s].value, to_std(refined[s].x), refined[best].value, to_std(refined[best].x))) {
      best = s;
    }
  }
  if (!std::isfinite(refined[best].value)) {
    throw std::invalid_argument("maximize_violation: no valid point in the parameter box");
  }
  out.parameters = to_std(refined[best].x);
  out.seed = base.seed;
  out.family = family;
  const Worst w = worst_of(evaluate_family(scenario_at(refined[best].x), family, options.evaluation));
  out.margin = w.value;
  out.condition = w.id;
  return out;
}

std::size_t parameter_count(std::size_t dim) { return 2 * dim + dim * dim; }

Scenario parametrized_scenario(std::size_t dim, const RealVector& x, std::vector<double> times,
                               MeasurementPolicy policy, std::uint64_t seed) {
  if (static_cast<std::size_t>(x.size()) != parameter_count(dim)) {
    throw std::invalid_argument("parametrized_scenario: parameter count mismatch");
  }
  const auto n = static_cast<Eigen::Index>(dim);
  Vector psi(n);
  for (Eigen::Index k = 0; k < n; ++k) psi(k) = Complex(x(2 * k), x(2 * k + 1));
  if (psi.norm() < 1e-12) throw std::invalid_argument("parametrized_scenario: vanishing state vector");
  Matrix h = Matrix::Zero(n, n);
  Eigen::Index p = 2 * n;
  for (Eigen::Index k = 0; k < n; ++k) h(k, k) = x(p++);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      h(i, j) = Complex(x(p), x(p + 1));
      h(j, i) = std::conj(h(i, j));
      p += 2;
    }
  }
  return Scenario{seed, DensityOperator::pure(psi / psi.norm()), Hamiltonian(h),
                  Schedule(std::move(times)), fine_decomposition(dim), policy};
}

namespace {

RealVector random_parameters(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng = make_engine(seed);
  std::normal_distribution<double> g(0.0, 1.0);
  RealVector x(static_cast<Eigen::Index>(count));
  for (Eigen::Index i = 0; i < x.size(); ++i) x(i) = g(rng);
  return x;
}

// Gauss-Newton on a residual with a central-difference Jacobian and
// minimum-norm steps.
template <class Residual>
RealVector gauss_newton(const Residual& r, RealVector x, std::size_t iterations, double goal,
                        std::size_t& evaluations) {
  RealVector fx = r(x);
  ++evaluations;
  for (std::size_t it = 0; it < iterations && fx.cwiseAbs().maxCoeff() > goal; ++it) {
    RealMatrix j(fx.size(), x.size());
    for (Eigen::Index i = 0; i < x.size(); ++i) {
      const double h = 1e-7 * std::max(1.0, std::abs(x(i)));
      RealVector xp = x;
      RealVector xm = x;
      xp(i) += h;
      xm(i) -= h;
      j.col(i) = (r(xp) - r(xm)) / (2.0 * h);
      evaluations += 2;
    }
    const RealVector step = j.completeOrthogonalDecomposition().solve(fx);
    const RealVector next = x - step;
    const RealVector fn = r(next);
    ++evaluations;
    if (fn.cwiseAbs().maxCoeff() >= fx.cwiseAbs().maxCoeff()) break;
    x = next;
    fx = fn;
  }
  return x;
}

}  // namespace

SearchRecord nonhierarchy_search(std::size_t dim, std::uint64_t seed, double witness_tol,
                                 double lg_depth, const SearchOptions& options) {
  if (dim < 2) throw std::invalid_argument("nonhierarchy_search: dim must be at least 2");
  const std::vector<double> times{0.0, 1.0};
  const ProjectiveDecomposition dec = fine_decomposition(dim);

  struct Eval {
    RealVector witness;
    double lg = kInf;
  };
  auto eval = [&](const RealVector& x) {
    const Scenario s = parametrized_scenario(dim, x, times, MeasurementPolicy::Luders);
    const DecoherenceRecord rec = decoherence_functional(s.rho, s.schedule, std::span(&dec, 1), s.h);
    const auto w = coherence_witness(rec);
    Eval e;
    e.witness = Eigen::Map<const RealVector>(w.data(), static_cast<Eigen::Index>(w.size()));
    e.lg = worst_margin(lg2_suite(moments_from_table(quasi_prob(s.rho, s.schedule, std::span(&dec, 1), s.h))));
    return e;
  };
  // Aim well past the required depth so the final polish keeps it.
  const double aim = -50.0 * lg_depth;
  auto objective = [&](const RealVector& x) {
    try {
      const Eval e = eval(x);
      const double gap = std::max(0.0, e.lg - aim);
      return 1e4 * e.witness.squaredNorm() + gap * gap;
    } catch (const std::invalid_argument&) {
      return kInf;
    }
  };

  std::vector<SearchRecord> runs(options.starts);
  detail::parallel_for(options.starts, options.threads, [&](std::size_t k) {
    SearchRecord& run = runs[k];
    run.seed = derive_seed(seed, k);
    const RealVector x0 = random_parameters(parameter_count(dim), run.seed);
    NelderMeadOptions local = options.local;
    local.initial_step = 0.3;
    local.max_evaluations = std::max<std::size_t>(local.max_evaluations, 6000);
    const NelderMeadResult nm = nelder_mead(objective, x0, local);
    run.evaluations = nm.evaluations;
    RealVector x = gauss_newton([&](const RealVector& y) { return eval(y).witness; }, nm.x, 40,
                                1e-15, run.evaluations);
    const Eval e = eval(x);
    run.parameters = x;
    run.objective = e.lg;
    run.found = e.witness.cwiseAbs().maxCoeff() <= witness_tol && e.lg <= -lg_depth;
    run.scenario = parametrized_scenario(dim, x, times, MeasurementPolicy::Luders, run.seed);
  });

  for (auto& r : runs) {
    if (r.found) return r;
  }
  return runs.empty() ? SearchRecord{} : runs.front();
}

SearchRecord beyond_luders_search(std::size_t dim, std::uint64_t seed, double target,
                                  const SearchOptions& options) {
  if (dim < 2) throw std::invalid_argument("beyond_luders_search: dim must be at least 2");
  const std::size_t base = parameter_count(dim);
  auto times_of = [base](const RealVector& x) {
    const double t1 = 0.05 + x(static_cast<Eigen::Index>(base)) * x(static_cast<Eigen::Index>(base));
    const double t2 = 0.05 + x(static_cast<Eigen::Index>(base + 1)) * x(static_cast<Eigen::Index>(base + 1));
    return std::vector<double>{0.0, t1, t1 + t2};
  };
  auto scenario_of = [&](const RealVector& x, std::uint64_t s) {
    return parametrized_scenario(dim, x.head(static_cast<Eigen::Index>(base)), times_of(x),
                                 MeasurementPolicy::VonNeumann, s);
  };
  auto objective = [&](const RealVector& x) {
    try {
      return worst_margin(evaluate_family(scenario_of(x, 0), Family::LG3Nvalued, options.evaluation));
    } catch (const std::invalid_argument&) {
      return kInf;
    }
  };

  std::vector<SearchRecord> runs(options.starts);
  detail::parallel_for(options.starts, options.threads, [&](std::size_t k) {
    SearchRecord& run = runs[k];
    run.seed = derive_seed(seed, k);
    const RealVector x0 = random_parameters(base + 2, run.seed);
    NelderMeadOptions local = options.local;
    local.initial_step = 0.3;
    const NelderMeadResult nm = nelder_mead(objective, x0, local);
    run.evaluations = nm.evaluations;
    run.parameters = nm.x;
    run.objective = nm.value;
    run.found = nm.value <= target;
    run.scenario = scenario_of(nm.x, run.seed);
  });

  std::size_t best = 0;
  for (std::size_t k = 1; k < runs.size(); ++k) {
    if (runs[k].objective < runs[best].objective) best = k;
  }
  return runs.empty() ? SearchRecord{} : runs[best];
}

}  // namespace lgmr
