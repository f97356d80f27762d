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

#ifndef LISTPRED_THEORY_SURROGATE_GAP_H_
#define LISTPRED_THEORY_SURROGATE_GAP_H_

#include <cstdint>
#include <span>
#include <vector>

#include "learners/ranking.h"
#include "listpred/policy.h"
#include "listpred/train.h"

namespace listpred {

// Convex optimization gap
//   G = (1/T) [sum_t (l_t(pi^t) - C_t(pi^t)) + min_pi sum_t C_t(pi)
//              - min_pi' sum_t l_t(pi')],
// with `played_*` indexed by round and `class_*[member][round]`.
// Throws std::invalid_argument on length mismatches.
double SurrogateGap(std::span<const double> played_cost,
                    std::span<const double> played_convex,
                    const std::vector<std::vector<double>>& class_cost,
                    const std::vector<std::vector<double>>& class_convex);

struct SurrogateGapEstimate {
  double gap = 0.0;
  // True when the minima range over training snapshots rather than a
  // finite policy class.
  bool estimate = true;
  size_t comparators = 0;
};

// Cost-sensitive and pairwise-hinge losses of a ranker policy on one
// round's examples.
double PolicyCostLoss(const Policy& policy,
                      std::span<const CostSensitiveExample> examples);
double PolicyHingeLoss(const Policy& policy,
                       std::span<const CostSensitiveExample> examples);

// G for a ranker training run; comparators are up to 100 seeded snapshots.
// `round_examples[t]` are the examples of round t.
SurrogateGapEstimate EstimateSurrogateGap(
    const PolicyBundle& bundle,
    const std::vector<std::vector<CostSensitiveExample>>& round_examples,
    uint64_t seed);

}  // namespace listpred

#endif  // LISTPRED_THEORY_SURROGATE_GAP_H_
