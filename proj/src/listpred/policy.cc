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

#include "listpred/policy.h"

#include <algorithm>
#include <stdexcept>

#include "core/greedy.h"
#include "learners/ranking.h"

namespace listpred {
namespace {

size_t SampleIndex(std::span<const double> probabilities, Rng* rng) {
  if (rng == nullptr) {
    return static_cast<size_t>(
        std::max_element(probabilities.begin(), probabilities.end()) -
        probabilities.begin());
  }
  const double u = UniformUnit(*rng);
  double acc = 0.0;
  for (size_t i = 0; i < probabilities.size(); ++i) {
    acc += probabilities[i];
    if (u < acc) return i;
  }
  return probabilities.size() - 1;
}

}  // namespace

std::string ModeName(Mode mode) {
  return mode == Mode::kScp ? "scp" : "conseqopt";
}

Mode ParseMode(const std::string& name) {
  if (name == "scp") return Mode::kScp;
  if (name == "conseqopt") return Mode::kConseqOpt;
  throw std::invalid_argument("unknown mode '" + name +
                              "' (expected scp or conseqopt)");
}

std::string LearnerName(LearnerKind kind) {
  return kind == LearnerKind::kRanker ? "ranker" : "rwm";
}

LearnerKind ParseLearner(const std::string& name) {
  if (name == "ranker") return LearnerKind::kRanker;
  if (name == "rwm") return LearnerKind::kRwm;
  throw std::invalid_argument("unknown learner '" + name +
                              "' (expected ranker or rwm)");
}

std::vector<std::vector<double>> ResolveScorers(const Policy& policy,
                                                Rng* rng) {
  if (policy.learner == LearnerKind::kRanker) return policy.weights;
  if (policy.policy_class == nullptr) {
    throw std::invalid_argument("RWM policy without a policy class");
  }
  std::vector<std::vector<double>> scorers;
  for (const auto& mixture : policy.mixtures) {
    if (mixture.size() != policy.policy_class->size()) {
      throw std::invalid_argument("mixture size differs from policy class");
    }
    scorers.push_back((*policy.policy_class)[SampleIndex(mixture, rng)]);
  }
  return scorers;
}

ItemList ConstructList(std::span<const std::vector<double>> scorers,
                       Mode mode, const ProblemInstance& instance,
                       const FeatureMap& features,
                       const ConstructOptions& options) {
  if (options.budget < 1) throw std::invalid_argument("budget must be >= 1");
  if (scorers.empty()) throw std::invalid_argument("policy has no scorers");
  std::vector<Item> pool = HalfBudgetFilter(instance.items, options.budget,
                                            options.half_budget_filter);
  std::sort(pool.begin(), pool.end(),
            [](const Item& a, const Item& b) { return a.id < b.id; });

  ItemList list;
  std::vector<Candidate> candidates;
  for (size_t position = 0;; ++position) {
    if (mode == Mode::kConseqOpt && position >= scorers.size()) break;
    const std::vector<double>& scorer =
        mode == Mode::kScp ? scorers[0] : scorers[position];
    candidates.clear();
    for (const Item& item : pool) {
      if (list.Contains(item.id) || !FitsBudget(list, item, options.budget)) {
        continue;
      }
      candidates.push_back(
          {item.id, features.Compute(instance, list, item), 0.0, true});
    }
    if (candidates.empty()) break;
    list.Append(instance.item(PredictBest(scorer, candidates)));
  }
  if (list.total_length() > options.budget) {
    throw std::logic_error("constructed list exceeds budget");
  }
  return list;
}

ItemList ConstructList(const Policy& policy, const ProblemInstance& instance,
                       const FeatureMap& features,
                       const ConstructOptions& options, Rng* rng) {
  const std::vector<std::vector<double>> scorers = ResolveScorers(policy, rng);
  return ConstructList(scorers, policy.mode, instance, features, options);
}

}  // namespace listpred
