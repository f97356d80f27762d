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

#ifndef LISTPRED_LISTPRED_EVALUATE_H_
#define LISTPRED_LISTPRED_EVALUATE_H_

#include <cstdint>
#include <span>

#include "core/item.h"
#include "features/feature_map.h"
#include "listpred/policy.h"
#include "listpred/train.h"

namespace listpred {

// FINAL: the last policy. BEST: the snapshot with the highest training list
// value. MIXTURE: uniform mixture over (up to 100 sampled) snapshots.
enum class PolicyChoice { kFinal, kBest, kMixture };

inline constexpr size_t kMaxMixtureSnapshots = 100;

struct PolicySummary {
  double mean_value = 0.0;
  double mean_length = 0.0;
  double mean_size = 0.0;
};

// Expected list statistics of one policy on one state. Ranker policies are
// deterministic. RWM policies in SCP mode are averaged exactly over the
// class; in CONSEQOPT mode over `rwm_samples` seeded draws.
PolicySummary PolicyStatistics(const Policy& policy,
                               const ProblemInstance& instance,
                               const FeatureMap& features,
                               const ConstructOptions& options,
                               uint64_t seed = 0, int rwm_samples = 32);

// Mean of PolicyStatistics over `instances`. Throws on an empty set or a
// state without reward.
PolicySummary EvaluatePolicy(const Policy& policy,
                             std::span<const ProblemInstance> instances,
                             const FeatureMap& features,
                             const ConstructOptions& options,
                             uint64_t seed = 0);

PolicySummary EvaluateBundle(const PolicyBundle& bundle,
                             std::span<const ProblemInstance> instances,
                             const FeatureMap& features,
                             const ConstructOptions& options,
                             PolicyChoice choice, uint64_t seed = 0);

}  // namespace listpred

#endif  // LISTPRED_LISTPRED_EVALUATE_H_
