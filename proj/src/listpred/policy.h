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

#ifndef LISTPRED_LISTPRED_POLICY_H_
#define LISTPRED_LISTPRED_POLICY_H_

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "core/item.h"
#include "features/feature_map.h"

namespace listpred {

// SCP applies one policy at every position; CONSEQOPT keeps one policy per
// position and stops after the last one.
enum class Mode { kScp, kConseqOpt };
enum class LearnerKind { kRanker, kRwm };

std::string ModeName(Mode mode);
Mode ParseMode(const std::string& name);
std::string LearnerName(LearnerKind kind);
LearnerKind ParseLearner(const std::string& name);

// A finite class of fixed linear policies (one weight vector each).
using PolicyClass = std::vector<std::vector<double>>;

// A frozen list-construction policy. Ranker policies hold one weight vector
// per position; RWM policies hold one distribution over `policy_class` per
// position. SCP policies have exactly one position entry.
struct Policy {
  Mode mode = Mode::kScp;
  LearnerKind learner = LearnerKind::kRanker;
  std::vector<std::vector<double>> weights;
  std::vector<std::vector<double>> mixtures;
  std::shared_ptr<const PolicyClass> policy_class;

  size_t num_positions() const {
    return learner == LearnerKind::kRanker ? weights.size() : mixtures.size();
  }
};

// Picks a concrete weight vector per position. RWM mixtures are sampled
// with `rng`; without one the most likely member is used.
std::vector<std::vector<double>> ResolveScorers(const Policy& policy,
                                                Rng* rng);

struct ConstructOptions {
  int64_t budget = 1;
  bool half_budget_filter = false;
};

// Greedy list construction with fixed scorers: at each position, score the
// items that are not yet listed and still fit the budget, append the best
// (lowest id on ties), and stop when none fits. SCP reuses scorers[0] at
// every position; CONSEQOPT uses scorers[i] at position i and stops after
// scorers.size() positions.
ItemList ConstructList(std::span<const std::vector<double>> scorers,
                       Mode mode, const ProblemInstance& instance,
                       const FeatureMap& features,
                       const ConstructOptions& options);

ItemList ConstructList(const Policy& policy, const ProblemInstance& instance,
                       const FeatureMap& features,
                       const ConstructOptions& options, Rng* rng);

}  // namespace listpred

#endif  // LISTPRED_LISTPRED_POLICY_H_
