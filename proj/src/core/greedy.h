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

#ifndef LISTPRED_CORE_GREEDY_H_
#define LISTPRED_CORE_GREEDY_H_

#include <span>
#include <vector>

#include "core/item.h"
#include "core/reward.h"

namespace listpred {

// Items are budget-feasible when the list length stays <= budget.
inline bool FitsBudget(const ItemList& list, const Item& item,
                       int64_t budget) {
  return list.total_length() + item.length <= budget;
}

// Drops items longer than budget / 2 when `enabled`; otherwise returns all.
std::vector<Item> HalfBudgetFilter(std::span<const Item> items, int64_t budget,
                                   bool enabled);

struct GreedyOptions {
  bool half_budget_filter = false;
};

// Clairvoyant benefit-per-length greedy under a knapsack budget. Appends the
// feasible item with the largest normalized benefit (lowest id on ties) and
// stops once nothing fits or the best benefit is zero.
ItemList GreedyClairvoyant(const RewardFunction& reward,
                           std::span<const Item> items, int64_t budget,
                           const GreedyOptions& options = {});

}  // namespace listpred

#endif  // LISTPRED_CORE_GREEDY_H_
