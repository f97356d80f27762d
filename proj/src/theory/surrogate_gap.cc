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

#include "theory/surrogate_gap.h"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "learners/rwm.h"
#include "listpred/evaluate.h"

namespace listpred {
namespace {

double MinRowSum(const std::vector<std::vector<double>>& rows) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& row : rows) {
    best = std::min(best, std::accumulate(row.begin(), row.end(), 0.0));
  }
  return best;
}

const std::vector<double>* PositionWeights(const Policy& policy,
                                           size_t position) {
  if (policy.learner != LearnerKind::kRanker) {
    throw std::invalid_argument("surrogate losses need a ranker policy");
  }
  if (policy.mode == Mode::kScp) return &policy.weights.at(0);
  if (position >= policy.weights.size()) return nullptr;
  return &policy.weights[position];
}

}  // namespace

double SurrogateGap(std::span<const double> played_cost,
                    std::span<const double> played_convex,
                    const std::vector<std::vector<double>>& class_cost,
                    const std::vector<std::vector<double>>& class_convex) {
  const size_t rounds = played_cost.size();
  if (rounds == 0 || played_convex.size() != rounds) {
    throw std::invalid_argument("played loss sequences differ in length");
  }
  if (class_cost.empty() || class_cost.size() != class_convex.size()) {
    throw std::invalid_argument("class loss tables differ in size");
  }
  for (size_t m = 0; m < class_cost.size(); ++m) {
    if (class_cost[m].size() != rounds || class_convex[m].size() != rounds) {
      throw std::invalid_argument("class loss rows must have one entry per round");
    }
  }
  double played = 0.0;
  for (size_t t = 0; t < rounds; ++t) {
    played += played_cost[t] - played_convex[t];
  }
  return (played + MinRowSum(class_convex) - MinRowSum(class_cost)) /
         static_cast<double>(rounds);
}

double PolicyCostLoss(const Policy& policy,
                      std::span<const CostSensitiveExample> examples) {
  double loss = 0.0;
  for (const CostSensitiveExample& example : examples) {
    const auto* weights = PositionWeights(policy, example.position);
    if (weights != nullptr) loss += PolicyLoss(*weights, example);
  }
  return loss;
}

double PolicyHingeLoss(const Policy& policy,
                       std::span<const CostSensitiveExample> examples) {
  double loss = 0.0;
  for (const CostSensitiveExample& example : examples) {
    const auto* weights = PositionWeights(policy, example.position);
    if (weights != nullptr) {
      loss += HingeLoss(*weights, ReduceToRanking(example));
    }
  }
  return loss;
}

SurrogateGapEstimate EstimateSurrogateGap(
    const PolicyBundle& bundle,
    const std::vector<std::vector<CostSensitiveExample>>& round_examples,
    uint64_t seed) {
  const size_t rounds = bundle.snapshots.size();
  if (round_examples.size() != rounds || rounds == 0) {
    throw std::invalid_argument("need one example set per training round");
  }
  std::vector<double> played_cost(rounds);
  std::vector<double> played_convex(rounds);
  for (size_t t = 0; t < rounds; ++t) {
    played_cost[t] = PolicyCostLoss(bundle.snapshots[t], round_examples[t]);
    played_convex[t] = PolicyHingeLoss(bundle.snapshots[t], round_examples[t]);
  }

  std::vector<size_t> chosen(rounds);
  std::iota(chosen.begin(), chosen.end(), size_t{0});
  if (chosen.size() > kMaxMixtureSnapshots) {
    Rng rng(seed);
    for (size_t i = 0; i < kMaxMixtureSnapshots; ++i) {
      std::swap(chosen[i], chosen[i + UniformIndex(rng, rounds - i)]);
    }
    chosen.resize(kMaxMixtureSnapshots);
  }
  // The final policy is always a comparator.
  Policy final_policy = bundle.Current();

  std::vector<std::vector<double>> class_cost;
  std::vector<std::vector<double>> class_convex;
  auto add_comparator = [&](const Policy& policy) {
    auto& cost = class_cost.emplace_back(rounds);
    auto& convex = class_convex.emplace_back(rounds);
    for (size_t t = 0; t < rounds; ++t) {
      cost[t] = PolicyCostLoss(policy, round_examples[t]);
      convex[t] = PolicyHingeLoss(policy, round_examples[t]);
    }
  };
  for (size_t t : chosen) add_comparator(bundle.snapshots[t]);
  add_comparator(final_policy);

  SurrogateGapEstimate out;
  out.gap = SurrogateGap(played_cost, played_convex, class_cost, class_convex);
  out.estimate = true;
  out.comparators = class_cost.size();
  return out;
}

}  // namespace listpred
