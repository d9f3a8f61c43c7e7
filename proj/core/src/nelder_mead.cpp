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


#include "lgmr/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace lgmr {

void Box::validate() const {
  if (lower.size() != upper.size() || lower.size() == 0) {
    throw std::invalid_argument("Box: bounds must be non-empty and of equal length");
  }
  for (Eigen::Index i = 0; i < lower.size(); ++i) {
    if (!std::isfinite(lower(i)) || !std::isfinite(upper(i))) {
      throw std::invalid_argument("Box: unbounded parameter box");
    }
    if (lower(i) > upper(i)) throw std::invalid_argument("Box: lower bound exceeds upper bound");
  }
}

RealVector Box::clamp(const RealVector& x) const { return x.cwiseMax(lower).cwiseMin(upper); }

NelderMeadResult nelder_mead(const Objective& f, const RealVector& x0,
                             const NelderMeadOptions& options, const std::optional<Box>& box) {
  const Eigen::Index n = x0.size();
  if (n == 0) throw std::invalid_argument("nelder_mead: empty parameter vector");
  if (box) {
    box->validate();
    if (box->lower.size() != n) throw std::invalid_argument("nelder_mead: box dimension mismatch");
  }
  auto project = [&](const RealVector& x) { return box ? box->clamp(x) : x; };

  NelderMeadResult out;
  auto eval = [&](const RealVector& x) {
    ++out.evaluations;
    return f(x);
  };

  std::vector<RealVector> pts(static_cast<std::size_t>(n + 1));
  std::vector<double> val(pts.size());
  pts[0] = project(x0);
  for (Eigen::Index i = 0; i < n; ++i) {
    RealVector v = pts[0];
    double step = options.initial_step;
    if (box) step *= std::max(box->upper(i) - box->lower(i), 1e-12);
    // Step inward when the start sits on the upper face.
    if (box && v(i) + step > box->upper(i)) step = -step;
    v(i) += step;
    pts[static_cast<std::size_t>(i + 1)] = project(v);
  }
  for (std::size_t k = 0; k < pts.size(); ++k) val[k] = eval(pts[k]);

  std::vector<std::size_t> order(pts.size());
  while (out.evaluations < options.max_evaluations) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return val[a] < val[b]; });
    const std::size_t best = order.front();
    const std::size_t worst = order.back();
    const std::size_t second = order[order.size() - 2];

    double spread = 0.0;
    for (const auto& p : pts) spread = std::max(spread, (p - pts[best]).cwiseAbs().maxCoeff());
    if (std::abs(val[worst] - val[best]) <= options.ftol && spread <= options.xtol) {
      out.converged = true;
      break;
    }
    if (spread <= options.xtol * 1e-3) {
      out.converged = true;
      break;
    }

    RealVector centroid = RealVector::Zero(n);
    for (std::size_t k = 0; k < pts.size(); ++k) {
      if (k != worst) centroid += pts[k];
    }
    centroid /= static_cast<double>(n);

    const RealVector xr = project(centroid + (centroid - pts[worst]));
    const double fr = eval(xr);
    if (fr < val[best]) {
      const RealVector xe = project(centroid + 2.0 * (centroid - pts[worst]));
      const double fe = eval(xe);
      if (fe < fr) {
        pts[worst] = xe;
        val[worst] = fe;
      } else {
        pts[worst] = xr;
        val[worst] = fr;
      }
      continue;
    }
    if (fr < val[second]) {
      pts[worst] = xr;
      val[worst] = fr;
      continue;
    }
    const bool outside = fr < val[worst];
    const RealVector xc = outside ? project(centroid + 0.5 * (xr - centroid))
                                  : project(centroid + 0.5 * (pts[worst] - centroid));
    const double fc = eval(xc);
    if (fc < (outside ? fr : val[worst])) {
      pts[worst] = xc;
      val[worst] = fc;
      continue;
    }
    for (std::size_t k = 0; k < pts.size(); ++k) {
      if (k == best) continue;
      pts[k] = project(pts[best] + 0.5 * (pts[k] - pts[best]));
      val[k] = eval(pts[k]);
    }
  }

  const auto it = std::min_element(val.begin(), val.end());
  const auto k = static_cast<std::size_t>(it - val.begin());
  out.x = pts[k];
  out.value = *it;
  return out;
}

}  // namespace lgmr
