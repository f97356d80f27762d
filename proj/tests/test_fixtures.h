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

#ifndef LISTPRED_TESTS_TEST_FIXTURES_H_
#define LISTPRED_TESTS_TEST_FIXTURES_H_

#include <algorithm>
#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "core/item.h"
#include "core/reward.h"
#include "features/tfidf.h"

namespace listpred::testing {

struct ItemSpec {
  ItemId id;
  int64_t length;
  std::vector<int> concepts;
};

inline Item MakeItem(ItemId id, int64_t length, std::vector<TokenId> tokens) {
  Item item;
  item.id = id;
  item.length = length;
  item.tokens = std::move(tokens);
  return item;
}

// Coverage instance whose item tokens are the covered concepts.
inline ProblemInstance CoverageInstance(const std::vector<ItemSpec>& specs,
                                        const std::map<int, double>& weights) {
  ProblemInstance x;
  std::map<ItemId, std::vector<int>> covers;
  for (const ItemSpec& s : specs) {
    x.items.push_back(MakeItem(s.id, s.length, {s.concepts.begin(),
                                                s.concepts.end()}));
    covers.emplace(s.id, s.concepts);
  }
  x.reward = std::make_shared<CoverageReward>(weights, covers);
  std::vector<std::vector<TokenId>> corpus;
  std::vector<ItemId> ids;
  for (const Item& item : x.items) {
    corpus.push_back(item.tokens);
    ids.push_back(item.id);
  }
  if (!corpus.empty()) {
    x.tfidf = std::make_shared<TfIdfModel>(TfIdfModel::Build(corpus, ids));
  }
  x.Reindex();
  return x;
}

inline std::map<int, double> UnitWeights(int first, int last) {
  std::map<int, double> w;
  for (int c = first; c <= last; ++c) w.emplace(c, 1.0);
  return w;
}

// a:{1,2} len 2, b:{3} len 1, c:{1,2,3,4} len 5 over unit concepts 1..4.
inline ProblemInstance ThreeItemInstance() {
  return CoverageInstance({{0, 2, {1, 2}}, {1, 1, {3}}, {2, 5, {1, 2, 3, 4}}},
                          UnitWeights(1, 4));
}

// Random coverage instance with n items, lengths in [1, max_length].
inline ProblemInstance RandomCoverageInstance(Rng& rng, int n, int concepts,
                                              int max_length) {
  std::map<int, double> weights;
  for (int c = 0; c < concepts; ++c) weights.emplace(c, 0.1 + UniformUnit(rng));
  std::vector<ItemSpec> specs;
  for (int i = 0; i < n; ++i) {
    ItemSpec s{i, 1 + static_cast<int64_t>(UniformIndex(rng, max_length)), {}};
    const int count = 1 + static_cast<int>(UniformIndex(rng, 3));
    for (int k = 0; k < count; ++k) {
      const int c = static_cast<int>(UniformIndex(rng, concepts));
      if (std::find(s.concepts.begin(), s.concepts.end(), c) ==
          s.concepts.end()) {
        s.concepts.push_back(c);
      }
    }
    std::sort(s.concepts.begin(), s.concepts.end());
    specs.push_back(std::move(s));
  }
  return CoverageInstance(specs, weights);
}

}  // namespace listpred::testing

#endif  // LISTPRED_TESTS_TEST_FIXTURES_H_
