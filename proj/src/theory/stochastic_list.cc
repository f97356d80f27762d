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

#include "theory/stochastic_list.h"

#include <cmath>
#include <stdexcept>
#include <string>

namespace listpred {

StochasticListSpec StochasticListSpec::FromItems(std::span<const Item> items) {
  StochasticListSpec spec;
  for (const Item& item : items) {
    if (item.length < 1) {
      throw std::invalid_argument("item " + std::to_string(item.id) +
                                  " has non-positive length");
    }
    spec.base.push_back(item.id);
    spec.inclusion.push_back(1.0 / static_cast<double>(item.length));
  }
  return spec;
}

StochasticEstimate StochasticListValue(const StochasticListSpec& spec,
                                       const RewardFunction& reward,
                                       const ExpectationMode& mode,
                                       std::span<const ItemId> prefix) {
  if (spec.base.size() != spec.inclusion.size()) {
    throw std::invalid_argument("inclusion probabilities do not match list");
  }
  for (double p : spec.inclusion) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw std::invalid_argument("inclusion probability outside [0, 1]");
    }
  }
  const size_t n = spec.base.size();
  std::vector<ItemId> ids;
  auto evaluate = [&](auto&& included) {
    ids.assign(prefix.begin(), prefix.end());
    for (size_t i = 0; i < n; ++i) {
      if (included(i)) ids.push_back(spec.base[i]);
    }
    return reward.Evaluate(ids);
  };

  if (mode.kind == ExpectationMode::Kind::kExact) {
    if (n > kMaxExactStochasticItems) {
      throw std::invalid_argument(
          "exact expectation limited to " +
          std::to_string(kMaxExactStochasticItems) + " items");
    }
    double expected = 0.0;
    for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
      double probability = 1.0;
      for (size_t i = 0; i < n; ++i) {
        probability *= (mask >> i) & 1 ? spec.inclusion[i]
                                       : 1.0 - spec.inclusion[i];
      }
      if (probability == 0.0) continue;
      expected += probability *
                  evaluate([mask](size_t i) { return (mask >> i) & 1; });
    }
    return {expected, 0.0};
  }

  if (mode.samples < 1) {
    throw std::invalid_argument("Monte Carlo needs at least one sample");
  }
  Rng rng(mode.seed);
  std::vector<char> keep(n);
  double sum = 0.0;
  double sum_sq = 0.0;
  for (int64_t s = 0; s < mode.samples; ++s) {
    for (size_t i = 0; i < n; ++i) {
      keep[i] = UniformUnit(rng) < spec.inclusion[i];
    }
    const double value = evaluate([&keep](size_t i) { return keep[i] != 0; });
    sum += value;
    sum_sq += value * value;
  }
  const double count = static_cast<double>(mode.samples);
  const double mean = sum / count;
  const double variance = std::max(0.0, sum_sq / count - mean * mean);
  return {mean, std::sqrt(variance / count)};
}

}  // namespace listpred
