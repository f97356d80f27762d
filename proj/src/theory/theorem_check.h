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

#ifndef LISTPRED_THEORY_THEOREM_CHECK_H_
#define LISTPRED_THEORY_THEOREM_CHECK_H_

#include <cstdint>
#include <span>
#include <vector>

#include "core/item.h"
#include "features/feature_map.h"
#include "listpred/policy.h"
#include "listpred/train.h"
#include "theory/bounds.h"

namespace listpred {

// A finite, uniformly weighted pool of coverage states sharing one set of
// concept weights. Item tokens are the concept ids they cover, so a
// NoveltyFeatureMap over all concepts makes the benefit linear in features.
struct CoverageDistributionSpec {
  int num_states = 40;
  int items_per_state = 8;
  int num_concepts = 12;
  int min_length = 1;
  int max_length = 4;
  int min_concepts_per_item = 1;
  int max_concepts_per_item = 3;
  uint64_t seed = 1;
};

struct CoverageDistribution {
  std::vector<ProblemInstance> states;
  std::vector<double> concept_weights;
  std::vector<TokenId> vocabulary;  // concept ids 0..num_concepts-1
};

CoverageDistribution MakeCoverageDistribution(
    const CoverageDistributionSpec& spec);

// `size` fixed policies over the novelty features: the concept weights
// (imitates clairvoyant greedy), all-ones, negated weights, then seeded
// random vectors.
PolicyClass CoveragePolicyClass(const CoverageDistribution& distribution,
                                size_t size, uint64_t seed);

inline constexpr size_t kMaxTheoremPolicies = 6;
inline constexpr size_t kMaxTheoremItems = 8;
inline constexpr int64_t kMaxTheoremBudget = 8;

struct OptimalPolicyList {
  std::vector<size_t> sequence;  // class indices, one per position
  double value = 0.0;            // F of the randomized list
};

// Exhaustive search over all |class|^budget policy sequences. Each sequence
// builds a deterministic list of `budget` items per state (no budget cut),
// valued by the exact expectation of its 1/length randomization, averaged
// over states.
OptimalPolicyList FindOptimalPolicyList(std::span<const ProblemInstance> states,
                                        const FeatureMap& features,
                                        const PolicyClass& policy_class,
                                        int64_t budget);

struct Theorem1Config {
  int64_t budget = 6;
  int iterations = 500;
  double delta = 0.1;
  int repetitions = 50;
  uint64_t seed = 1;
};

struct Theorem1Report {
  std::vector<BoundReport> runs;
  int holds_count = 0;
  double frequency = 0.0;
  bool pass = false;
  OptimalPolicyList optimal;
  // F of each class member, exact over the state pool.
  std::vector<double> member_values;
  std::vector<std::string> notes;
};

// Trains SCP with RWM over `policy_class` once per repetition and checks
//   F(mixture) >= (1 - 1/e) F(randomized optimal list) - R/T
//                 - 2 sqrt(2 ln(1/delta) / T).
// F values are exact over the uniform state pool. Passes when the
// inequality holds in at least a 1 - delta fraction of repetitions.
// Throws std::invalid_argument when the exhaustive-search guards are
// exceeded.
Theorem1Report CheckTheorem1(std::span<const ProblemInstance> states,
                             const FeatureMap& features,
                             const PolicyClass& policy_class,
                             const Theorem1Config& config);

nlohmann::json Theorem1ReportToJson(const Theorem1Report& report);

}  // namespace listpred

#endif  // LISTPRED_THEORY_THEOREM_CHECK_H_
