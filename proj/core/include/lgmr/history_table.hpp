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
#include <initializer_list>
#include <span>
#include <vector>

namespace lgmr {

/// Outcome indices, one per measurement time (earliest first).
using HistoryString = std::vector<std::size_t>;

/// Dense real table over history strings. Row-major: the earliest time is
/// the most significant index.
class HistoryTable {
 public:
  HistoryTable() = default;
  explicit HistoryTable(std::vector<std::size_t> shape, double fill = 0.0);

  std::size_t arity() const { return shape_.size(); }
  const std::vector<std::size_t>& shape() const { return shape_; }
  std::size_t size() const { return values_.size(); }

  double& operator[](std::size_t flat) { return values_[flat]; }
  double operator[](std::size_t flat) const { return values_[flat]; }
  double& at(std::span<const std::size_t> history);
  double at(std::span<const std::size_t> history) const;
  double& at(std::initializer_list<std::size_t> history) {
    return at(std::span<const std::size_t>(history.begin(), history.size()));
  }
  double at(std::initializer_list<std::size_t> history) const {
    return at(std::span<const std::size_t>(history.begin(), history.size()));
  }

  std::size_t flatten(std::span<const std::size_t> history) const;
  HistoryString unflatten(std::size_t flat) const;

  std::span<const double> values() const { return values_; }
  std::span<double> values() { return values_; }

  double sum() const;
  double min() const;
  /// Sum over every axis not listed in `keep` (ascending, distinct).
  HistoryTable marginal(std::span<const std::size_t> keep) const;
  HistoryTable marginal(std::initializer_list<std::size_t> keep) const {
    return marginal(std::span<const std::size_t>(keep.begin(), keep.size()));
  }

 private:
  std::vector<std::size_t> shape_;
  std::vector<std::size_t> strides_;
  std::vector<double> values_;
};

/// Calls `fn(history)` for every string over `shape`, in flat-index order.
template <typename Fn>
void for_each_history(std::span<const std::size_t> shape, Fn&& fn) {
  std::size_t total = 1;
  for (std::size_t s : shape) total *= s;
  HistoryString h(shape.size(), 0);
  for (std::size_t flat = 0; flat < total; ++flat) {
    fn(static_cast<const HistoryString&>(h));
    for (std::size_t axis = shape.size(); axis-- > 0;) {
      if (++h[axis] < shape[axis]) break;
      h[axis] = 0;
    }
  }
}

}  // namespace lgmr
