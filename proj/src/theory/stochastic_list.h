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

#ifndef LISTPRED_THEORY_STOCHASTIC_LIST_H_
#define LISTPRED_THEORY_STOCHASTIC_LIST_H_

#include <cstdint>
#include <span>
#include <vector>

#include "core/item.h"
#include "core/reward.h"

namespace listpred {

inline constexpr size_t kMaxExactStochasticItems = 20;

// Randomization of a deterministic list: member i is kept independently
// with probability 1 / length(i).
struct StochasticListSpec {
  std::vector<ItemId> base;
  std::vector<double> inclusion;

  static StochasticListSpec FromItems(std::span<const Item> items);
};

struct ExpectationMode {
  enum class Kind { kExact, kMonteCarlo };
  Kind kind = Kind::kExact;
  int64_t samples = 0;
  uint64_t seed = 0;

  static ExpectationMode Exact() { return {}; }
  static ExpectationMode MonteCarlo(int64_t samples, uint64_t seed) {
    return {Kind::kMonteCarlo, samples, seed};
  }
};

struct StochasticEstimate {
  double value = 0.0;
  // Zero for exact expectations.
  double standard_error = 0.0;
};

// E[f(prefix + randomized list)]. Exact mode enumerates all 2^|base|
// inclusion patterns and throws std::invalid_argument above
// kMaxExactStochasticItems members.
StochasticEstimate StochasticListValue(const StochasticListSpec& spec,
                                       const RewardFunction& reward,
                                       const ExpectationMode& mode,
                                       std::span<const ItemId> prefix = {});

}  // namespace listpred

#endif  // LISTPRED_THEORY_STOCHASTIC_LIST_H_
