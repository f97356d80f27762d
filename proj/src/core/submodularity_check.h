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

#ifndef LISTPRED_CORE_SUBMODULARITY_CHECK_H_
#define LISTPRED_CORE_SUBMODULARITY_CHECK_H_

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "core/item.h"
#include "core/reward.h"

namespace listpred {

// (L1, L2, s) probe for the diminishing-returns and monotonicity checks.
struct SubmodularityProbe {
  std::vector<ItemId> first;
  std::vector<ItemId> second;
  ItemId item = 0;
};

using ProbeSampler = std::function<SubmodularityProbe(Rng&)>;

struct SubmodularityReport {
  int64_t trials = 0;
  int64_t passed = 0;
  int64_t monotonicity_violations = 0;
  int64_t submodularity_violations = 0;
  // Largest amount by which either inequality failed; 0 when none did.
  double worst_violation = 0.0;

  bool ok() const { return passed == trials; }
};

// Random subsets of `ground` for L1 and L2 (each member kept with prob 1/2)
// and a uniformly drawn s.
ProbeSampler MakeSubsetSampler(std::vector<ItemId> ground);

// Checks f(L1+s)-f(L1) >= f(L1+L2+s)-f(L1+L2) and f(L1) <= f(L1+L2) on
// `trials` sampled probes, to `tolerance`.
SubmodularityReport CheckMonotoneSubmodular(const RewardFunction& reward,
                                            const ProbeSampler& sampler,
                                            int64_t trials, uint64_t seed,
                                            double tolerance = 1e-9);

}  // namespace listpred

#endif  // LISTPRED_CORE_SUBMODULARITY_CHECK_H_
