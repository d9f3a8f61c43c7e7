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

#include "lgmr/history_table.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace lgmr {

HistoryTable::HistoryTable(std::vector<std::size_t> shape, double fill) : shape_(std::move(shape)) {
  if (shape_.empty()) throw std::invalid_argument("HistoryTable: empty shape");
  std::size_t total = 1;
  strides_.assign(shape_.size(), 1);
  for (std::size_t axis = shape_.size(); axis-- > 0;) {
    if (shape_[axis] == 0) throw std::invalid_argument("HistoryTable: zero-length axis");
    strides_[axis] = total;
    total *= shape_[axis];
  }
  values_.assign(total, fill);
}

std::size_t HistoryTable::flatten(std::span<const std::size_t> history) const {
  if (history.size() != shape_.size()) {
    throw std::invalid_argument("HistoryTable: history length does not match table arity");
  }
  std::size_t flat = 0;
  for (std::size_t axis = 0; axis < shape_.size(); ++axis) {
    if (history[axis] >= shape_[axis]) throw std::out_of_range("HistoryTable: outcome out of range");
    flat += history[axis] * strides_[axis];
  }
  return flat;
}

HistoryString HistoryTable::unflatten(std::size_t flat) const {
  if (flat >= values_.size()) throw std::out_of_range("HistoryTable: flat index out of range");
  HistoryString h(shape_.size());
  for (std::size_t axis = 0; axis < shape_.size(); ++axis) {
    h[axis] = flat / strides_[axis];
    flat %= strides_[axis];
  }
  return h;
}

double& HistoryTable::at(std::span<const std::size_t> history) { return values_[flatten(history)]; }

double HistoryTable::at(std::span<const std::size_t> history) const {
  return values_[flatten(history)];
}

double HistoryTable::sum() const { return std::accumulate(values_.begin(), values_.end(), 0.0); }

double HistoryTable::min() const { return *std::min_element(values_.begin(), values_.end()); }

HistoryTable HistoryTable::marginal(std::span<const std::size_t> keep) const {
  if (keep.empty()) throw std::invalid_argument("HistoryTable: marginal must keep an axis");
  std::vector<std::size_t> shape;
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] >= shape_.size() || (i > 0 && keep[i] <= keep[i - 1])) {
      throw std::invalid_argument("HistoryTable: marginal axes must be ascending and in range");
    }
    shape.push_back(shape_[keep[i]]);
  }
  HistoryTable out(shape);
  for (std::size_t flat = 0; flat < values_.size(); ++flat) {
    std::size_t rem = flat;
    std::size_t target = 0;
    std::size_t k = 0;
    for (std::size_t axis = 0; axis < shape_.size(); ++axis) {
      const std::size_t idx = rem / strides_[axis];
      rem %= strides_[axis];
      if (k < keep.size() && keep[k] == axis) {
        target += idx * out.strides_[k];
        ++k;
      }
    }
    out.values_[target] += values_[flat];
  }
  return out;
}

}  // namespace lgmr
