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

#ifndef LISTPRED_LISTPRED_EXAMPLES_H_
#define LISTPRED_LISTPRED_EXAMPLES_H_

#include <span>
#include <vector>

#include "core/item.h"
#include "features/feature_map.h"
#include "learners/ranking.h"

namespace listpred {

// w_i = [prod_{j>i} (1 - length_j / budget)] * length_i for every position.
std::vector<double> PositionWeights(std::span<const int64_t> lengths,
                                    int64_t budget);

struct ExampleOptions {
  int64_t budget = 1;
  bool half_budget_filter = false;
};

// One cost-sensitive example per position of `list`. At position i the
// candidates are the items not in the prefix L_{i-1} (budget-infeasible ones
// included, flagged), costed by c(s) = max_s' b(s'|L_{i-1}) - b(s|L_{i-1}).
// Throws std::invalid_argument when the instance carries no reward.
std::vector<CostSensitiveExample> MakeExamples(const ProblemInstance& instance,
                                               const ItemList& list,
                                               const FeatureMap& features,
                                               const ExampleOptions& options);

// Sum over examples of weight * cost of the item actually listed there.
double ListLoss(std::span<const CostSensitiveExample> examples,
                const ItemList& list);

}  // namespace listpred

#endif  // LISTPRED_LISTPRED_EXAMPLES_H_
