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

#include "core/reward.h"

#include <algorithm>

namespace listpred {

double MarginalBenefit(const RewardFunction& reward, const ItemList& list,
                       const Item& item) {
  if (list.Contains(item.id)) {
    throw std::invalid_argument("item " + std::to_string(item.id) +
                                " already in list");
  }
  std::vector<ItemId> extended = list.ids();
  extended.push_back(item.id);
  return reward.Evaluate(extended) - reward.Evaluate(list.ids());
}

double NormalizedBenefit(const RewardFunction& reward, const ItemList& list,
                         const Item& item) {
  if (item.length < 1) {
    throw std::invalid_argument("item " + std::to_string(item.id) +
                                " has non-positive length");
  }
  return MarginalBenefit(reward, list, item) /
         static_cast<double>(item.length);
}

CoverageReward::CoverageReward(
    const std::map<int, double>& universe_weights,
    const std::map<ItemId, std::vector<int>>& item_covers) {
  std::map<int, int> dense;
  for (const auto& [concept_id, weight] : universe_weights) {
    if (!(weight >= 0.0)) {
      throw std::invalid_argument("concept " + std::to_string(concept_id) +
                                  " has negative weight");
    }
    dense.emplace(concept_id, static_cast<int>(weights_.size()));
    weights_.push_back(weight);
  }
  for (double w : weights_) normalizer_ += w;
  if (!(normalizer_ > 0.0)) {
    throw std::invalid_argument("coverage universe has zero total weight");
  }
  for (const auto& [item_id, concepts] : item_covers) {
    std::vector<int>& out = covers_[item_id];
    for (int c : concepts) {
      auto it = dense.find(c);
      if (it == dense.end()) {
        throw std::invalid_argument("item " + std::to_string(item_id) +
                                    " covers unknown concept " +
                                    std::to_string(c));
      }
      out.push_back(it->second);
    }
  }
}

double CoverageReward::Evaluate(std::span<const ItemId> items) const {
  std::vector<char> covered(weights_.size(), 0);
  for (ItemId id : items) {
    auto it = covers_.find(id);
    if (it == covers_.end()) {
      throw CorruptInstanceError("coverage reward has no item " +
                                 std::to_string(id));
    }
    for (int c : it->second) covered[c] = 1;
  }
  double total = 0.0;
  for (size_t c = 0; c < weights_.size(); ++c) {
    if (covered[c]) total += weights_[c];
  }
  return std::min(1.0, total / normalizer_);
}

RougeRecallReward::RougeRecallReward(
    const std::vector<std::vector<TokenId>>& references,
    const std::map<ItemId, std::vector<TokenId>>& item_tokens) {
  for (const auto& reference : references) {
    auto& counts = reference_counts_.emplace_back();
    for (TokenId token : reference) ++counts[token];
    total_reference_tokens_ += static_cast<int64_t>(reference.size());
  }
  if (total_reference_tokens_ <= 0) {
    throw std::invalid_argument("references contain no tokens");
  }
  for (const auto& [id, tokens] : item_tokens) item_tokens_[id] = tokens;
}

double RougeRecallReward::Evaluate(std::span<const ItemId> items) const {
  std::vector<ItemId> unique(items.begin(), items.end());
  std::sort(unique.begin(), unique.end());
  unique.erase(std::unique(unique.begin(), unique.end()), unique.end());

  std::unordered_map<TokenId, int64_t> candidate;
  for (ItemId id : unique) {
    auto it = item_tokens_.find(id);
    if (it == item_tokens_.end()) {
      throw CorruptInstanceError("rouge reward has no item " +
                                 std::to_string(id));
    }
    for (TokenId token : it->second) ++candidate[token];
  }
  int64_t overlap = 0;
  for (const auto& counts : reference_counts_) {
    for (const auto& [token, count] : counts) {
      auto it = candidate.find(token);
      if (it != candidate.end()) overlap += std::min(count, it->second);
    }
  }
  return static_cast<double>(overlap) /
         static_cast<double>(total_reference_tokens_);
}

}  // namespace listpred
