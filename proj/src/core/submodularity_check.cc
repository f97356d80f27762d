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

#include "core/submodularity_check.h"

#include <algorithm>
#include <stdexcept>

namespace listpred {

ProbeSampler MakeSubsetSampler(std::vector<ItemId> ground) {
  if (ground.empty()) throw std::invalid_argument("empty ground set");
  return [ground = std::move(ground)](Rng& rng) {
    SubmodularityProbe probe;
    for (ItemId id : ground) {
      if (rng() & 1) probe.first.push_back(id);
      if (rng() & 1) probe.second.push_back(id);
    }
    probe.item = ground[UniformIndex(rng, ground.size())];
    return probe;
  };
}

SubmodularityReport CheckMonotoneSubmodular(const RewardFunction& reward,
                                            const ProbeSampler& sampler,
                                            int64_t trials, uint64_t seed,
                                            double tolerance) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  Rng rng(seed);
  SubmodularityReport report;
  for (int64_t t = 0; t < trials; ++t) {
    const SubmodularityProbe probe = sampler(rng);
    std::vector<ItemId> first = probe.first;
    std::vector<ItemId> both = probe.first;
    both.insert(both.end(), probe.second.begin(), probe.second.end());
    std::vector<ItemId> first_plus = first;
    first_plus.push_back(probe.item);
    std::vector<ItemId> both_plus = both;
    both_plus.push_back(probe.item);

    const double f_first = reward.Evaluate(first);
    const double f_both = reward.Evaluate(both);
    const double gain_small = reward.Evaluate(first_plus) - f_first;
    const double gain_large = reward.Evaluate(both_plus) - f_both;

    bool ok = true;
    const double submod_gap = gain_large - gain_small;
    if (submod_gap > tolerance) {
      ++report.submodularity_violations;
      report.worst_violation = std::max(report.worst_violation, submod_gap);
      ok = false;
    }
    const double mono_gap = f_first - f_both;
    if (mono_gap > tolerance) {
      ++report.monotonicity_violations;
      report.worst_violation = std::max(report.worst_violation, mono_gap);
      ok = false;
    }
    ++report.trials;
    if (ok) ++report.passed;
  }
  return report;
}

}  // namespace listpred
