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

#ifndef LISTPRED_THEORY_BOUND_SUITE_H_
#define LISTPRED_THEORY_BOUND_SUITE_H_

#include <memory>
#include <string>
#include <vector>

#include "core/item.h"
#include "core/reward.h"
#include "json.hpp"
#include "theory/bounds.h"

namespace listpred {

// Randomized instances for the exact bound checks.
struct BoundTrialSpec {
  int max_items = 12;
  int num_concepts = 10;
  int max_concepts_per_item = 3;
  size_t max_a = 8;
  size_t max_b = 8;
  int min_length = 1;
  int max_length = 4;
  // Lemma 2 unrolls its recursion with factors 1 - length(a_j) / |B|, which
  // must lie in [0, 1]. When set, Lemma 2 suites redraw trials until every
  // length(a_j) <= |B|.
  bool lemma2_length_precondition = true;
};

struct BoundTrial {
  std::vector<Item> items;
  std::shared_ptr<const CoverageReward> reward;
  std::vector<Item> a;  // ordered, possibly empty
  std::vector<Item> b;  // nonempty
};

BoundTrial RandomBoundTrial(Rng& rng, const BoundTrialSpec& spec);

// Every length(a_j) <= |B|.
bool MeetsLengthPrecondition(const BoundTrial& trial);

enum class BoundCheck { kLemma1, kCorollary1, kLemma2 };

std::string BoundCheckName(BoundCheck check);
BoundReport RunBoundCheck(BoundCheck check, const BoundTrial& trial);

struct BoundSuiteReport {
  std::string check;
  int trials = 0;
  int holds_count = 0;
  // Lemma 2 trials with some length(a_j) > |B|.
  int precondition_failures = 0;
  // Trials that failed while meeting the Lemma 2 precondition.
  int failures_with_precondition = 0;
  // Trials redrawn to meet the Lemma 2 precondition.
  int redrawn = 0;
  // Trial with the smallest slack.
  BoundReport worst;

  bool all_hold() const { return trials > 0 && holds_count == trials; }
};

BoundSuiteReport RunBoundSuite(BoundCheck check, int trials, uint64_t seed,
                               const BoundTrialSpec& spec = {});

nlohmann::json BoundSuiteToJson(const BoundSuiteReport& report);

// Exact versus Monte Carlo expectation of randomized lists.
struct StochasticAgreementReport {
  int lists = 0;
  int64_t samples = 0;
  double max_abs_difference = 0.0;
  // Largest |difference| / standard error.
  double max_sigma = 0.0;
  double tolerance = 0.01;
  bool pass = false;
};

StochasticAgreementReport RunStochasticAgreement(int lists, size_t list_items,
                                                 int64_t samples,
                                                 uint64_t seed,
                                                 double tolerance = 0.01);

nlohmann::json StochasticAgreementToJson(
    const StochasticAgreementReport& report);

}  // namespace listpred

#endif  // LISTPRED_THEORY_BOUND_SUITE_H_
