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

#pragma once

// Dense phase-1 simplex for {x >= 0, |A x - b| <= band}.

#include <cstddef>

#include "lgmr/qcore.hpp"

namespace lgmr {

struct SimplexOptions {
  /// Half-width of the band around each equality.
  double band = 1e-9;
  /// Phase-1 objectives at or below this count as feasible.
  double feasibility_tol = 1e-12;
  /// Reduced costs and pivot elements below this are treated as zero.
  double pivot_tol = 1e-12;
  std::size_t max_pivots = 100000;
};

struct SimplexResult {
  bool feasible = false;
  /// A point of the banded system when feasible.
  RealVector x;
  /// Farkas vector for the exact system when infeasible:
  /// A^T y <= 0 and b^T y > 0.
  RealVector certificate;
  double phase1_objective = 0.0;
  std::size_t pivots = 0;
};

/// Bland's rule throughout, so the pivot sequence is deterministic and
/// cannot cycle.
SimplexResult phase1_feasibility(const RealMatrix& a, const RealVector& b,
                                 const SimplexOptions& options = {});

/// Re-solves A_S x_S = b exactly on the support of a banded solution and
/// returns it when it stays within `tol` of nonnegative; negatives that
/// small are clipped to zero.
bool polish_solution(const RealMatrix& a, const RealVector& b, RealVector& x, double tol = 1e-12);

}  // namespace lgmr
