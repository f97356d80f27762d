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

#ifndef LISTPRED_CORE_REWARD_H_
#define LISTPRED_CORE_REWARD_H_

#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "core/item.h"

namespace listpred {

// Raised when a reward is asked about an item it was not built for.
class CorruptInstanceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A monotone submodular set function with values in [0, 1] and
// f(empty) = 0. Evaluation has set semantics: order and repeated ids are
// ignored. Implementations are immutable after construction.
class RewardFunction {
 public:
  virtual ~RewardFunction() = default;

  virtual double Evaluate(std::span<const ItemId> items) const = 0;
  double Evaluate(const ItemList& list) const { return Evaluate(list.ids()); }
};

// f(L + s) - f(L). Throws std::invalid_argument if s is already in L.
double MarginalBenefit(const RewardFunction& reward, const ItemList& list,
                       const Item& item);

// b(s|L) = (f(L + s) - f(L)) / length(s).
double NormalizedBenefit(const RewardFunction& reward, const ItemList& list,
                         const Item& item);

// Weighted concept coverage, normalized by the total concept weight.
class CoverageReward : public RewardFunction {
 public:
  CoverageReward(const std::map<int, double>& universe_weights,
                 const std::map<ItemId, std::vector<int>>& item_covers);

  double Evaluate(std::span<const ItemId> items) const override;
  using RewardFunction::Evaluate;

  double normalizer() const { return normalizer_; }

 private:
  // Concepts are remapped to dense indices in ascending id order so that
  // sums are always accumulated in the same order.
  std::vector<double> weights_;
  std::unordered_map<ItemId, std::vector<int>> covers_;
  double normalizer_ = 0.0;
};

// Multi-reference ROUGE-1 recall of the union of the items' tokens.
class RougeRecallReward : public RewardFunction {
 public:
  RougeRecallReward(const std::vector<std::vector<TokenId>>& references,
                    const std::map<ItemId, std::vector<TokenId>>& item_tokens);

  double Evaluate(std::span<const ItemId> items) const override;
  using RewardFunction::Evaluate;

  int64_t total_reference_tokens() const { return total_reference_tokens_; }

 private:
  std::vector<std::unordered_map<TokenId, int64_t>> reference_counts_;
  std::unordered_map<ItemId, std::vector<TokenId>> item_tokens_;
  int64_t total_reference_tokens_ = 0;
};

}  // namespace listpred

#endif  // LISTPRED_CORE_REWARD_H_
