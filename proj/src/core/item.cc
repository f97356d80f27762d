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

#include "core/item.h"

#include <stdexcept>
#include <string>
#include <unordered_set>

namespace listpred {

void ItemList::Append(const Item& item) {
  if (item.length < 1) {
    throw std::invalid_argument("item " + std::to_string(item.id) +
                                " has non-positive length");
  }
  if (Contains(item.id)) {
    throw std::invalid_argument("item " + std::to_string(item.id) +
                                " already in list");
  }
  ids_.push_back(item.id);
  total_length_ += item.length;
}

bool ItemList::Contains(ItemId id) const {
  for (ItemId existing : ids_) {
    if (existing == id) return true;
  }
  return false;
}

ItemList ItemList::Prefix(size_t count, std::span<const Item> items) const {
  const ItemIndex index(items);
  ItemList out;
  for (size_t i = 0; i < count && i < ids_.size(); ++i) {
    out.Append(index.at(ids_[i]));
  }
  return out;
}

ItemIndex::ItemIndex(std::span<const Item> items) : items_(items) {
  position_.reserve(items.size());
  for (size_t i = 0; i < items.size(); ++i) {
    if (!position_.emplace(items[i].id, i).second) {
      throw std::invalid_argument("duplicate item id " +
                                  std::to_string(items[i].id));
    }
  }
}

const Item& ItemIndex::at(ItemId id) const {
  auto it = position_.find(id);
  if (it == position_.end()) {
    throw std::out_of_range("unknown item id " + std::to_string(id));
  }
  return items_[it->second];
}

void VerifyItemList(const ItemList& list, const ItemIndex& index) {
  std::unordered_set<ItemId> seen;
  int64_t total = 0;
  for (ItemId id : list.ids()) {
    if (!seen.insert(id).second) {
      throw std::logic_error("duplicate id " + std::to_string(id) +
                             " in item list");
    }
    if (!index.contains(id)) {
      throw std::logic_error("item list names unknown id " +
                             std::to_string(id));
    }
    total += index.at(id).length;
  }
  if (total != list.total_length()) {
    throw std::logic_error("item list total length " +
                           std::to_string(list.total_length()) +
                           " disagrees with recomputed " +
                           std::to_string(total));
  }
}

ItemList MakeItemList(std::span<const ItemId> ids, const ItemIndex& index) {
  ItemList list;
  for (ItemId id : ids) list.Append(index.at(id));
  return list;
}

void ProblemInstance::Reindex() {
  lookup_.clear();
  lookup_.reserve(items.size());
  for (size_t i = 0; i < items.size(); ++i) {
    if (items[i].length < 1) {
      throw std::invalid_argument("item " + std::to_string(items[i].id) +
                                  " has non-positive length");
    }
    if (!lookup_.emplace(items[i].id, i).second) {
      throw std::invalid_argument("duplicate item id " +
                                  std::to_string(items[i].id) +
                                  " in instance " + state_id);
    }
  }
}

const Item& ProblemInstance::item(ItemId id) const {
  auto it = lookup_.find(id);
  if (it == lookup_.end()) {
    throw std::out_of_range("unknown item id " + std::to_string(id) +
                            " in instance " + state_id);
  }
  return items[it->second];
}

uint64_t UniformIndex(Rng& rng, uint64_t n) {
  if (n == 0) throw std::invalid_argument("UniformIndex: empty range");
  const uint64_t limit = Rng::max() - (Rng::max() % n);
  uint64_t draw = rng();
  while (draw >= limit) draw = rng();
  return draw % n;
}

double UniformUnit(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace listpred
