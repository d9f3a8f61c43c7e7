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


#include "doctest.h"
#include "lgmr/history_table.hpp"

using namespace lgmr;

TEST_CASE("flat index round trip and marginals") {
  HistoryTable t({2, 3, 4});
  for (std::size_t k = 0; k < t.size(); ++k) {
    CHECK(t.flatten(t.unflatten(k)) == k);
    t[k] = static_cast<double>(k);
  }
  CHECK(t.at({1, 2, 3}) == 23.0);
  CHECK(t.sum() == doctest::Approx(276.0));

  const HistoryTable m02 = t.marginal({0, 2});
  CHECK(m02.shape() == std::vector<std::size_t>{2, 4});
  // sum over the middle axis: 4*0+... for (0,0): 0+4+8
  CHECK(m02.at({0, 0}) == 12.0);
  CHECK(m02.sum() == doctest::Approx(t.sum()));
  CHECK(t.marginal({1}).at({2}) == doctest::Approx((8 + 9 + 10 + 11) + (20 + 21 + 22 + 23)));
  CHECK_THROWS(t.marginal({2, 0}));
}

TEST_CASE("histories are visited in flat order") {
  const std::vector<std::size_t> shape{3, 2};
  std::size_t k = 0;
  HistoryTable t(shape);
  for_each_history(shape, [&](const HistoryString& h) { CHECK(t.flatten(h) == k++); });
  CHECK(k == 6);
}
