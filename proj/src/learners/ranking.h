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

#ifndef LISTPRED_LEARNERS_RANKING_H_
#define LISTPRED_LEARNERS_RANKING_H_

#include <cstdint>
#include <span>
#include <vector>

#include "core/item.h"

namespace listpred {

// One candidate of a cost-sensitive example. `feasible` marks candidates
// that still fit the budget at this position; costs are defined for all.
struct Candidate {
  ItemId id = 0;
  std::vector<double> features;
  double cost = 0.0;
  bool feasible = true;
};

// (v, c, w) for one list position.
struct CostSensitiveExample {
  int position = 0;  // 0-based
  double weight = 0.0;
  std::vector<Candidate> candidates;
};

// Throws std::logic_error unless costs are finite and nonnegative with
// minimum 0 and the weight is finite and nonnegative.
void ValidateExample(const CostSensitiveExample& example);

struct RankingPair {
  std::vector<double> better;  // features of the lower-cost item
  std::vector<double> worse;
  double weight = 0.0;  // example weight * |cost difference|
};

// One pair per unordered candidate pair with distinct costs.
std::vector<RankingPair> ReduceToRanking(const CostSensitiveExample& example);

// weight * max(0, 1 - h.(better - worse)). The loss vanishes once the
// lower-cost item outscores the other by a margin of 1.
double HingeLoss(std::span<const double> weights, const RankingPair& pair);
double HingeLoss(std::span<const double> weights,
                 std::span<const RankingPair> pairs);

// Subgradient of the summed hinge loss: sum over pairs with positive loss
// of -weight * (better - worse).
std::vector<double> HingeSubgradient(std::span<const double> weights,
                                     std::span<const RankingPair> pairs);

double Score(std::span<const double> weights, std::span<const double> features);

// Highest-scoring feasible candidate, lowest id on ties. Throws
// std::invalid_argument when no candidate is feasible.
ItemId PredictBest(std::span<const double> weights,
                   std::span<const Candidate> candidates);

// Linear scorer trained by online subgradient descent on the pairwise hinge
// loss with step eta0 / sqrt(t).
class LinearRanker {
 public:
  explicit LinearRanker(int dimension, double eta0 = 0.5);
  LinearRanker(std::vector<double> weights, double eta0, int64_t update_count);

  // One step on the batch; an empty batch only advances the step counter.
  // Throws std::runtime_error on a non-finite gradient.
  void Update(std::span<const RankingPair> pairs);

  const std::vector<double>& weights() const { return weights_; }
  int dimension() const { return static_cast<int>(weights_.size()); }
  double eta0() const { return eta0_; }
  int64_t update_count() const { return update_count_; }

 private:
  std::vector<double> weights_;
  double eta0_;
  int64_t update_count_ = 0;
};

}  // namespace listpred

#endif  // LISTPRED_LEARNERS_RANKING_H_
