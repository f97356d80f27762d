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

#ifndef LISTPRED_CORE_ITEM_H_
#define LISTPRED_CORE_ITEM_H_

#include <cstdint>
#include <memory>
#include <random>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace listpred {

using ItemId = int32_t;
using TokenId = int32_t;
using Rng = std::mt19937_64;

// An atomic selectable unit, e.g. one sentence. `length` is the knapsack
// cost (bytes for text).
struct Item {
  ItemId id = 0;
  int64_t length = 1;
  std::vector<TokenId> tokens;
  // Per-item features that do not depend on the partial list.
  std::vector<double> static_features;
  // Source location, used to restore reading order on output.
  int32_t doc_index = 0;
  int32_t position = 0;
};

// An ordered list of distinct items together with its total length.
class ItemList {
 public:
  ItemList() = default;

  void Append(const Item& item);
  bool Contains(ItemId id) const;

  const std::vector<ItemId>& ids() const { return ids_; }
  int64_t total_length() const { return total_length_; }
  size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }

  // First `count` items as a new list.
  ItemList Prefix(size_t count, std::span<const Item> items) const;

 private:
  std::vector<ItemId> ids_;
  int64_t total_length_ = 0;
};

// Id -> item lookup over a borrowed item vector.
class ItemIndex {
 public:
  explicit ItemIndex(std::span<const Item> items);

  const Item& at(ItemId id) const;
  bool contains(ItemId id) const { return position_.count(id) > 0; }
  std::span<const Item> items() const { return items_; }

 private:
  std::span<const Item> items_;
  std::unordered_map<ItemId, size_t> position_;
};

// Throws std::logic_error if the list repeats an id, names an unknown item,
// or its cached total length disagrees with the recomputed sum.
void VerifyItemList(const ItemList& list, const ItemIndex& index);

// Builds a list by appending `ids` in order.
ItemList MakeItemList(std::span<const ItemId> ids, const ItemIndex& index);

class RewardFunction;
class TfIdfModel;

// One state x_t: the candidate set plus what is needed to score or
// featurize it. `reward` is absent at prediction time.
struct ProblemInstance {
  std::string state_id;
  std::vector<Item> items;
  std::shared_ptr<const RewardFunction> reward;
  std::shared_ptr<const TfIdfModel> tfidf;

  // Rebuilds id lookup; call after mutating `items`.
  void Reindex();
  const Item& item(ItemId id) const;
  bool has_item(ItemId id) const { return lookup_.count(id) > 0; }

 private:
  std::unordered_map<ItemId, size_t> lookup_;
};

// Uniform index in [0, n) using rejection, independent of the standard
// library's distribution implementation.
uint64_t UniformIndex(Rng& rng, uint64_t n);
// Uniform double in [0, 1).
double UniformUnit(Rng& rng);

}  // namespace listpred

#endif  // LISTPRED_CORE_ITEM_H_
