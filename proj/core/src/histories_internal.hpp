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

#include <span>
#include <vector>

#include "lgmr/qcore.hpp"

namespace lgmr::detail {

/// Heisenberg-picture decompositions, one per scheduled time.
std::vector<ProjectiveDecomposition> evolved_decompositions(
    const DensityOperator& rho, const Schedule& schedule,
    std::span<const ProjectiveDecomposition> decompositions, const Hamiltonian& h);

std::vector<std::size_t> shape_of(const std::vector<ProjectiveDecomposition>& evolved);

/// C_alpha for every history, flat-index order.
std::vector<Matrix> class_operators(const std::vector<ProjectiveDecomposition>& evolved);

}  // namespace lgmr::detail
