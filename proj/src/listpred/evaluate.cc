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

#include "listpred/evaluate.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "core/reward.h"

namespace listpred {
namespace {

void Accumulate(PolicySummary& into, const PolicySummary& add, double scale) {
  into.mean_value += scale * add.mean_value;
  into.mean_length += scale * add.mean_length;
  into.mean_size += scale * add.mean_size;
}

PolicySummary ListStatistics(const ItemList& list,
                             const ProblemInstance& instance) {
  return {instance.reward->Evaluate(list),
          static_cast<double>(list.total_length()),
          static_cast<double>(list.size())};
}

}  // namespace

PolicySummary PolicyStatistics(const Policy& policy,
                               const ProblemInstance& instance,
                               const FeatureMap& features,
                               const ConstructOptions& options,
                               uint64_t seed, int rwm_samples) {
  if (instance.reward == nullptr) {
    throw std::invalid_argument("instance " + instance.state_id +
                                " has no reward");
  }
  if (policy.learner == LearnerKind::kRanker) {
    return ListStatistics(
        ConstructList(policy, instance, features, options, nullptr), instance);
  }
  PolicySummary summary;
  if (policy.mode == Mode::kScp) {
    const PolicyClass& members = *policy.policy_class;
    const std::vector<double>& mixture = policy.mixtures.at(0);
    for (size_t p = 0; p < members.size(); ++p) {
      if (mixture[p] == 0.0) continue;
      const std::vector<std::vector<double>> scorer = {members[p]};
      Accumulate(summary,
                 ListStatistics(ConstructList(scorer, policy.mode, instance,
                                              features, options),
                                instance),
                 mixture[p]);
    }
    return summary;
  }
  Rng rng(seed);
  for (int s = 0; s < rwm_samples; ++s) {
    Accumulate(summary,
               ListStatistics(
                   ConstructList(policy, instance, features, options, &rng),
                   instance),
               1.0 / rwm_samples);
  }
  return summary;
}

PolicySummary EvaluatePolicy(const Policy& policy,
                             std::span<const ProblemInstance> instances,
                             const FeatureMap& features,
                             const ConstructOptions& options, uint64_t seed) {
  if (instances.empty()) throw std::invalid_argument("no evaluation instances");
  PolicySummary summary;
  const double scale = 1.0 / static_cast<double>(instances.size());
  for (const ProblemInstance& x : instances) {
    Accumulate(summary, PolicyStatistics(policy, x, features, options, seed),
               scale);
  }
  return summary;
}

PolicySummary EvaluateBundle(const PolicyBundle& bundle,
                             std::span<const ProblemInstance> instances,
                             const FeatureMap& features,
                             const ConstructOptions& options,
                             PolicyChoice choice, uint64_t seed) {
  switch (choice) {
    case PolicyChoice::kFinal:
      return EvaluatePolicy(bundle.Current(), instances, features, options,
                            seed);
    case PolicyChoice::kBest:
      if (bundle.snapshots.empty()) {
        return EvaluatePolicy(bundle.Current(), instances, features, options,
                              seed);
      }
      return EvaluatePolicy(bundle.snapshots[bundle.BestSnapshot()], instances,
                            features, options, seed);
    case PolicyChoice::kMixture: {
      if (bundle.snapshots.empty()) {
        return EvaluatePolicy(bundle.Current(), instances, features, options,
                              seed);
      }
      std::vector<size_t> chosen(bundle.snapshots.size());
      std::iota(chosen.begin(), chosen.end(), size_t{0});
      if (chosen.size() > kMaxMixtureSnapshots) {
        // Partial Fisher-Yates with the run's seed.
        Rng rng(seed);
        for (size_t i = 0; i < kMaxMixtureSnapshots; ++i) {
          const size_t j = i + UniformIndex(rng, chosen.size() - i);
          std::swap(chosen[i], chosen[j]);
        }
        chosen.resize(kMaxMixtureSnapshots);
        std::sort(chosen.begin(), chosen.end());
      }
      PolicySummary summary;
      const double scale = 1.0 / static_cast<double>(chosen.size());
      for (size_t t : chosen) {
        Accumulate(summary,
                   EvaluatePolicy(bundle.snapshots[t], instances, features,
                                  options, seed),
                   scale);
      }
      return summary;
    }
  }
  throw std::logic_error("unhandled policy choice");
}

}  // namespace listpred
