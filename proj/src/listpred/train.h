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

#ifndef LISTPRED_LISTPRED_TRAIN_H_
#define LISTPRED_LISTPRED_TRAIN_H_

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "core/item.h"
#include "features/feature_map.h"
#include "learners/ranking.h"
#include "learners/rwm.h"
#include "listpred/policy.h"

namespace listpred {

struct TrainConfig {
  Mode mode = Mode::kScp;
  LearnerKind learner = LearnerKind::kRanker;
  int64_t budget = 665;
  int iterations = 100;
  uint64_t seed = 1;
  // Ranker step size eta0 (steps are eta0 / sqrt(t)).
  double eta0 = 0.5;
  // RWM learning rate; <= 0 selects sqrt(8 ln|class| / iterations).
  double rwm_eta = 0.0;
  bool half_budget_filter = false;
  // CONSEQOPT list length k.
  int max_positions = 0;
  // Finite policy class for the RWM learner.
  PolicyClass policy_class;

  // Throws std::invalid_argument on out-of-range settings.
  void Validate() const;
};

struct TraceRound {
  int instance_index = 0;
  double list_value = 0.0;
  int64_t list_length = 0;
  int list_size = 0;
  // Cost-sensitive loss of the executed policy: sum_i w_i c_i(s_i).
  double loss = 0.0;
  // Pairwise hinge loss of the pre-update rankers on this round's pairs
  // (ranker learner only).
  double surrogate_loss = 0.0;
  // RWM only: loss of each class member, summed over positions.
  std::vector<double> policy_losses;
};

struct TrainingTrace {
  std::vector<TraceRound> rounds;

  double CumulativeLoss() const;
};

// Trained learners plus every per-round policy snapshot.
struct PolicyBundle {
  TrainConfig config;
  int dimension = 0;
  std::vector<LinearRanker> rankers;
  std::vector<RandomizedWeightedMajority> rwm;
  std::shared_ptr<const PolicyClass> policy_class;
  // snapshots[t] is the policy that constructed the list of round t.
  std::vector<Policy> snapshots;
  TrainingTrace trace;

  Policy Current() const;
  // Round with the highest training list value (first on ties).
  size_t BestSnapshot() const;
  // RWM: executed loss minus, per position learner, the best fixed member.
  double Regret() const;
};

// Untrained bundle (zero rankers or uniform RWM).
PolicyBundle InitBundle(int dimension, const TrainConfig& config);

// Signed coordinate rankers +e_k and -e_k; a default RWM class.
PolicyClass CoordinatePolicyClass(int dimension);

// Called once per round with the examples fed to Update.
using ExampleObserver = std::function<void(
    int round, const ProblemInstance& instance, const ItemList& list,
    const std::vector<CostSensitiveExample>& examples)>;

// Online training loop: each round draws a state uniformly (seeded),
// constructs a list with the current policy, turns it into cost-sensitive
// examples, and routes them to the learners (all to the single learner in
// SCP; position i to learner i in CONSEQOPT). Throws std::runtime_error on a
// non-finite loss.
PolicyBundle Train(std::span<const ProblemInstance> instances,
                   const FeatureMap& features, const TrainConfig& config,
                   const ExampleObserver& observer = {});

}  // namespace listpred

#endif  // LISTPRED_LISTPRED_TRAIN_H_
