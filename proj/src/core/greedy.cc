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

#include "core/greedy.h"

#include <algorithm>
#include <stdexcept>

namespace listpred {

std::vector<Item> HalfBudgetFilter(std::span<const Item> items, int64_t budget,
                                   bool enabled) {
  std::vector<Item> kept;
  kept.reserve(items.size());
  for (const Item& item : items) {
    // length > W/2 without rounding W.
    if (enabled && 2 * item.length > budget) continue;
    kept.push_back(item);
  }
  return kept;
}

ItemList GreedyClairvoyant(const RewardFunction& reward,
                           std::span<const Item> items, int64_t budget,
                           const GreedyOptions& options) {
  if (budget < 1) throw std::invalid_argument("budget must be >= 1");
  std::vector<Item> pool =
      HalfBudgetFilter(items, budget, options.half_budget_filter);
  std::sort(pool.begin(), pool.end(),
            [](const Item& a, const Item& b) { return a.id < b.id; });

  ItemList list;
  double current = 0.0;
  std::vector<ItemId> scratch;
  while (true) {
    const Item* best = nullptr;
    double best_benefit = 0.0;
    for (const Item& item : pool) {
      if (list.Contains(item.id) || !FitsBudget(list, item, budget)) continue;
      scratch = list.ids();
      scratch.push_back(item.id);
      const double benefit = (reward.Evaluate(scratch) - current) /
                             static_cast<double>(item.length);
      // Strict comparison keeps the lowest id among ties.
      if (best == nullptr || benefit > best_benefit) {
        best = &item;
        best_benefit = benefit;
      }
    }
    if (best == nullptr || best_benefit <= 0.0) break;
    list.Append(*best);
    current = reward.Evaluate(list);
  }
  return list;
}

}  // namespace listpred
