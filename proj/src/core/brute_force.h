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

#ifndef LISTPRED_CORE_BRUTE_FORCE_H_
#define LISTPRED_CORE_BRUTE_FORCE_H_

#include <span>

#include "core/item.h"
#include "core/reward.h"

namespace listpred {

inline constexpr size_t kMaxBruteForceItems = 20;

struct OptimalSubset {
  ItemList list;  // ids in ascending order
  double value = 0.0;
};

// Exact maximizer of f over all subsets with total length <= budget.
// Ties prefer fewer items, then the lexicographically smallest sorted id
// sequence, so the answer does not depend on the order of `items`.
// Throws std::invalid_argument above kMaxBruteForceItems items.
OptimalSubset BruteForceOptimal(const RewardFunction& reward,
                                std::span<const Item> items, int64_t budget);

}  // namespace listpred

#endif  // LISTPRED_CORE_BRUTE_FORCE_H_
