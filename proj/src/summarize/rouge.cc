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

#include "summarize/rouge.h"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace listpred {

RougeScores Rouge1(std::span<const TokenId> candidate,
                   const std::vector<std::vector<TokenId>>& references) {
  if (references.empty()) throw std::invalid_argument("no reference summaries");
  std::unordered_map<TokenId, int64_t> candidate_counts;
  for (TokenId t : candidate) ++candidate_counts[t];

  int64_t overlap = 0;
  int64_t reference_total = 0;
  for (const auto& reference : references) {
    std::unordered_map<TokenId, int64_t> counts;
    for (TokenId t : reference) ++counts[t];
    reference_total += static_cast<int64_t>(reference.size());
    for (const auto& [token, count] : counts) {
      auto it = candidate_counts.find(token);
      if (it != candidate_counts.end()) overlap += std::min(count, it->second);
    }
  }
  RougeScores scores;
  if (reference_total > 0) {
    scores.recall = static_cast<double>(overlap) / reference_total;
  }
  const int64_t precision_total =
      static_cast<int64_t>(candidate.size()) *
      static_cast<int64_t>(references.size());
  if (precision_total > 0) {
    scores.precision = static_cast<double>(overlap) / precision_total;
  }
  if (scores.recall + scores.precision > 0.0) {
    scores.f1 = 2.0 * scores.recall * scores.precision /
                (scores.recall + scores.precision);
  }
  return scores;
}

RougeScores Rouge1(const ItemList& list, const ProblemInstance& instance,
                   const std::vector<std::vector<TokenId>>& references) {
  std::vector<TokenId> tokens;
  for (ItemId id : list.ids()) {
    const Item& item = instance.item(id);
    tokens.insert(tokens.end(), item.tokens.begin(), item.tokens.end());
  }
  return Rouge1(tokens, references);
}

}  // namespace listpred
