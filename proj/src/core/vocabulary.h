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

#ifndef LISTPRED_CORE_VOCABULARY_H_
#define LISTPRED_CORE_VOCABULARY_H_

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "core/item.h"

namespace listpred {

// Interns token strings as dense ids in first-seen order.
class Vocabulary {
 public:
  TokenId Intern(const std::string& token) {
    auto [it, inserted] =
        ids_.emplace(token, static_cast<TokenId>(names_.size()));
    if (inserted) names_.push_back(token);
    return it->second;
  }

  std::optional<TokenId> Find(const std::string& token) const {
    auto it = ids_.find(token);
    if (it == ids_.end()) return std::nullopt;
    return it->second;
  }

  const std::string& Name(TokenId id) const { return names_.at(id); }
  size_t size() const { return names_.size(); }

 private:
  std::unordered_map<std::string, TokenId> ids_;
  std::vector<std::string> names_;
};

}  // namespace listpred

#endif  // LISTPRED_CORE_VOCABULARY_H_
