// Copyright 2026 The Authors.
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

#include "core/brute_force.h"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace listpred {

OptimalSubset BruteForceOptimal(const RewardFunction& reward,
                                std::span<const Item> items, int64_t budget) {
  if (items.size() > kMaxBruteForceItems) {
    throw std::invalid_argument(
        "brute force limited to " + std::to_string(kMaxBruteForceItems) +
        " items, got " + std::to_string(items.size()) +
        "; use a smaller instance");
  }
  std::vector<Item> sorted(items.begin(), items.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const Item& a, const Item& b) { return a.id < b.id; });
  const size_t n = sorted.size();

  std::vector<ItemId> best_ids;
  double best_value = reward.Evaluate(best_ids);
  std::vector<ItemId> ids;
  for (uint64_t mask = 1; mask < (uint64_t{1} << n); ++mask) {
    ids.clear();
    int64_t length = 0;
    for (size_t i = 0; i < n; ++i) {
      if (mask & (uint64_t{1} << i)) {
        ids.push_back(sorted[i].id);
        length += sorted[i].length;
      }
    }
    if (length > budget) continue;
    const double value = reward.Evaluate(ids);
    bool better = value > best_value;
    if (value == best_value) {
      better = ids.size() < best_ids.size() ||
               (ids.size() == best_ids.size() && ids < best_ids);
    }
    if (better) {
      best_value = value;
      best_ids = ids;
    }
  }
  OptimalSubset result;
  result.list = MakeItemList(best_ids, ItemIndex(sorted));
  result.value = best_value;
  return result;
}

}  // namespace listpred
