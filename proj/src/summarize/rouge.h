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

#ifndef LISTPRED_SUMMARIZE_ROUGE_H_
#define LISTPRED_SUMMARIZE_ROUGE_H_

#include <span>
#include <vector>

#include "core/item.h"

namespace listpred {

struct RougeScores {
  double recall = 0.0;
  double precision = 0.0;
  double f1 = 0.0;
};

// Multi-reference ROUGE-1 without stemming or stopword removal:
//   overlap   = sum_ref sum_gram min(count_cand, count_ref)
//   recall    = overlap / sum_ref |ref|
//   precision = overlap / (|cand| * #refs)
// F1 is their harmonic mean, 0 when both vanish. Throws
// std::invalid_argument when `references` is empty.
RougeScores Rouge1(std::span<const TokenId> candidate,
                   const std::vector<std::vector<TokenId>>& references);

// Scores the concatenated tokens of the listed items.
RougeScores Rouge1(const ItemList& list, const ProblemInstance& instance,
                   const std::vector<std::vector<TokenId>>& references);

}  // namespace listpred

#endif  // LISTPRED_SUMMARIZE_ROUGE_H_
