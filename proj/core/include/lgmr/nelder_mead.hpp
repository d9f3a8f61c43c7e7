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

#include <cstddef>
#include <functional>
#include <optional>

#include "lgmr/qcore.hpp"

namespace lgmr {

/// Axis-aligned parameter box.
struct Box {
  RealVector lower;
  RealVector upper;

  std::size_t size() const { return static_cast<std::size_t>(lower.size()); }
  /// Throws unless both ends are finite and lower <= upper.
  void validate() const;
  RealVector clamp(const RealVector& x) const;
};

struct NelderMeadOptions {
  /// Initial simplex edge, as a fraction of the box width per coordinate
  /// (absolute when there is no box).
  double initial_step = 0.05;
  double ftol = 1e-15;
  double xtol = 1e-12;
  std::size_t max_evaluations = 4000;
};

struct NelderMeadResult {
  RealVector x;
  double value = 0.0;
  std::size_t evaluations = 0;
  bool converged = false;
};

using Objective = std::function<double(const RealVector&)>;

/// Standard reflection / expansion / contraction / shrink simplex search.
/// Every trial point is clamped into `box` when one is given.
NelderMeadResult nelder_mead(const Objective& f, const RealVector& x0,
                             const NelderMeadOptions& options = {},
                             const std::optional<Box>& box = std::nullopt);

}  // namespace lgmr
