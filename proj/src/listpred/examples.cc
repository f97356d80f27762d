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

#include "listpred/examples.h"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "core/greedy.h"
#include "core/reward.h"

namespace listpred {

std::vector<double> PositionWeights(std::span<const int64_t> lengths,
                                    int64_t budget) {
  if (budget < 1) throw std::invalid_argument("budget must be >= 1");
  std::vector<double> weights(lengths.size());
  double tail = 1.0;  // product over later positions
  for (size_t i = lengths.size(); i-- > 0;) {
    weights[i] = tail * static_cast<double>(lengths[i]);
    tail *= 1.0 - static_cast<double>(lengths[i]) / static_cast<double>(budget);
  }
  return weights;
}

std::vector<CostSensitiveExample> MakeExamples(const ProblemInstance& instance,
                                               const ItemList& list,
                                               const FeatureMap& features,
                                               const ExampleOptions& options) {
  if (instance.reward == nullptr) {
    throw std::invalid_argument("instance " + instance.state_id +
                                " has no reward oracle");
  }
  const RewardFunction& reward = *instance.reward;
  std::vector<Item> pool = HalfBudgetFilter(instance.items, options.budget,
                                            options.half_budget_filter);
  std::sort(pool.begin(), pool.end(),
            [](const Item& a, const Item& b) { return a.id < b.id; });

  std::vector<int64_t> lengths;
  for (ItemId id : list.ids()) lengths.push_back(instance.item(id).length);
  const std::vector<double> weights = PositionWeights(lengths, options.budget);

  std::vector<CostSensitiveExample> examples;
  examples.reserve(list.size());
  ItemList prefix;
  std::vector<ItemId> scratch;
  for (size_t i = 0; i < list.size(); ++i) {
    CostSensitiveExample example;
    example.position = static_cast<int>(i);
    example.weight = weights[i];
    const double base = reward.Evaluate(prefix);
    std::vector<double> benefits;
    for (const Item& item : pool) {
      if (prefix.Contains(item.id)) continue;
      scratch = prefix.ids();
      scratch.push_back(item.id);
      benefits.push_back((reward.Evaluate(scratch) - base) /
                         static_cast<double>(item.length));
      example.candidates.push_back({item.id,
                                    features.Compute(instance, prefix, item),
                                    0.0, FitsBudget(prefix, item, options.budget)});
    }
    const double best = *std::max_element(benefits.begin(), benefits.end());
    for (size_t c = 0; c < benefits.size(); ++c) {
      example.candidates[c].cost = best - benefits[c];
    }
    examples.push_back(std::move(example));
    prefix.Append(instance.item(list.ids()[i]));
  }
  return examples;
}

double ListLoss(std::span<const CostSensitiveExample> examples,
                const ItemList& list) {
  if (examples.size() != list.size()) {
    throw std::invalid_argument("example count differs from list size");
  }
  double loss = 0.0;
  for (size_t i = 0; i < examples.size(); ++i) {
    const ItemId picked = list.ids()[i];
    bool found = false;
    for (const Candidate& c : examples[i].candidates) {
      if (c.id == picked) {
        loss += examples[i].weight * c.cost;
        found = true;
        break;
      }
    }
    if (!found) {
      throw std::logic_error("listed item " + std::to_string(picked) +
                             " missing from its example");
    }
  }
  return loss;
}

}  // namespace listpred
