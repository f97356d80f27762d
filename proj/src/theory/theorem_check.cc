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

#include "theory/theorem_check.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

#include "core/reward.h"
#include "theory/stochastic_list.h"

namespace listpred {
namespace {

int UniformInt(Rng& rng, int lo, int hi) {
  return lo + static_cast<int>(UniformIndex(rng, static_cast<uint64_t>(hi - lo + 1)));
}

void CheckGuards(std::span<const ProblemInstance> states,
                 const PolicyClass& policy_class, int64_t budget) {
  if (states.empty()) throw std::invalid_argument("no states");
  if (policy_class.empty() || policy_class.size() > kMaxTheoremPolicies) {
    throw std::invalid_argument("policy class size must be in [1, " +
                                std::to_string(kMaxTheoremPolicies) + "]");
  }
  if (budget < 1 || budget > kMaxTheoremBudget) {
    throw std::invalid_argument("budget must be in [1, " +
                                std::to_string(kMaxTheoremBudget) + "]");
  }
  for (const ProblemInstance& x : states) {
    if (x.items.size() > kMaxTheoremItems) {
      throw std::invalid_argument("state " + x.state_id + " has more than " +
                                  std::to_string(kMaxTheoremItems) + " items");
    }
    if (x.reward == nullptr) {
      throw std::invalid_argument("state " + x.state_id + " has no reward");
    }
  }
}

}  // namespace

CoverageDistribution MakeCoverageDistribution(
    const CoverageDistributionSpec& spec) {
  if (spec.num_states < 1 || spec.items_per_state < 1 ||
      spec.num_concepts < 1 || spec.min_length < 1 ||
      spec.max_length < spec.min_length || spec.min_concepts_per_item < 1 ||
      spec.max_concepts_per_item < spec.min_concepts_per_item ||
      spec.max_concepts_per_item > spec.num_concepts) {
    throw std::invalid_argument("invalid coverage distribution spec");
  }
  Rng rng(spec.seed);
  CoverageDistribution out;
  std::map<int, double> universe;
  for (int c = 0; c < spec.num_concepts; ++c) {
    const double w = 0.5 + 1.5 * UniformUnit(rng);
    out.concept_weights.push_back(w);
    out.vocabulary.push_back(c);
    universe.emplace(c, w);
  }
  std::vector<int> concepts(static_cast<size_t>(spec.num_concepts));
  std::iota(concepts.begin(), concepts.end(), 0);
  for (int s = 0; s < spec.num_states; ++s) {
    ProblemInstance x;
    x.state_id = "coverage-" + std::to_string(s);
    std::map<ItemId, std::vector<int>> covers;
    for (int i = 0; i < spec.items_per_state; ++i) {
      Item item;
      item.id = i;
      item.length = UniformInt(rng, spec.min_length, spec.max_length);
      const int count = UniformInt(rng, spec.min_concepts_per_item,
                                   spec.max_concepts_per_item);
      for (int k = 0; k < count; ++k) {
        const size_t j = static_cast<size_t>(k) +
                         UniformIndex(rng, concepts.size() - k);
        std::swap(concepts[k], concepts[j]);
      }
      std::vector<int> chosen(concepts.begin(), concepts.begin() + count);
      std::sort(chosen.begin(), chosen.end());
      item.tokens.assign(chosen.begin(), chosen.end());
      covers.emplace(item.id, std::move(chosen));
      x.items.push_back(std::move(item));
    }
    x.reward = std::make_shared<CoverageReward>(universe, covers);
    x.Reindex();
    out.states.push_back(std::move(x));
  }
  return out;
}

PolicyClass CoveragePolicyClass(const CoverageDistribution& distribution,
                                size_t size, uint64_t seed) {
  const std::vector<double>& w = distribution.concept_weights;
  PolicyClass members;
  members.push_back(w);
  members.push_back(std::vector<double>(w.size(), 1.0));
  std::vector<double> negated = w;
  for (double& v : negated) v = -v;
  members.push_back(std::move(negated));
  Rng rng(seed);
  while (members.size() < size) {
    std::vector<double> random(w.size());
    for (double& v : random) v = 2.0 * UniformUnit(rng) - 1.0;
    members.push_back(std::move(random));
  }
  members.resize(size);
  return members;
}

OptimalPolicyList FindOptimalPolicyList(std::span<const ProblemInstance> states,
                                        const FeatureMap& features,
                                        const PolicyClass& policy_class,
                                        int64_t budget) {
  CheckGuards(states, policy_class, budget);
  const size_t positions = static_cast<size_t>(budget);
  const size_t members = policy_class.size();
  OptimalPolicyList best;
  best.value = -std::numeric_limits<double>::infinity();

  std::vector<size_t> sequence(positions, 0);
  std::vector<std::vector<double>> scorers(positions);
  while (true) {
    for (size_t i = 0; i < positions; ++i) scorers[i] = policy_class[sequence[i]];
    double total = 0.0;
    for (const ProblemInstance& x : states) {
      int64_t unlimited = 0;
      for (const Item& item : x.items) unlimited += item.length;
      const ItemList list = ConstructList(scorers, Mode::kConseqOpt, x,
                                          features, {unlimited, false});
      std::vector<Item> members_of_list;
      for (ItemId id : list.ids()) members_of_list.push_back(x.item(id));
      total += StochasticListValue(StochasticListSpec::FromItems(members_of_list),
                                   *x.reward, ExpectationMode::Exact())
                   .value;
    }
    const double value = total / static_cast<double>(states.size());
    if (value > best.value) {
      best.value = value;
      best.sequence = sequence;
    }
    // Odometer increment over class indices.
    size_t pos = 0;
    while (pos < positions && ++sequence[pos] == members) {
      sequence[pos] = 0;
      ++pos;
    }
    if (pos == positions) break;
  }
  return best;
}

Theorem1Report CheckTheorem1(std::span<const ProblemInstance> states,
                             const FeatureMap& features,
                             const PolicyClass& policy_class,
                             const Theorem1Config& config) {
  CheckGuards(states, policy_class, config.budget);
  if (!(config.delta > 0.0 && config.delta < 1.0)) {
    throw std::invalid_argument("delta must lie in (0, 1)");
  }
  if (config.repetitions < 1 || config.iterations < 1) {
    throw std::invalid_argument("repetitions and iterations must be >= 1");
  }
  Theorem1Report report;
  report.optimal =
      FindOptimalPolicyList(states, features, policy_class, config.budget);
  report.notes.push_back(
      "example weights divide by the budget W; the optimal list has W "
      "members, so the per-position weights in the regret analysis coincide");

  const ConstructOptions construct{config.budget, false};
  for (const auto& member : policy_class) {
    double total = 0.0;
    for (const ProblemInstance& x : states) {
      const std::vector<std::vector<double>> scorer = {member};
      total += x.reward->Evaluate(
          ConstructList(scorer, Mode::kScp, x, features, construct));
    }
    report.member_values.push_back(total / static_cast<double>(states.size()));
  }

  const double t = static_cast<double>(config.iterations);
  const double deviation = 2.0 * std::sqrt(2.0 * std::log(1.0 / config.delta) / t);
  const double one_minus_inv_e = 1.0 - std::exp(-1.0);
  for (int rep = 0; rep < config.repetitions; ++rep) {
    TrainConfig train;
    train.mode = Mode::kScp;
    train.learner = LearnerKind::kRwm;
    train.budget = config.budget;
    train.iterations = config.iterations;
    train.seed = config.seed + static_cast<uint64_t>(rep);
    train.policy_class = policy_class;
    const PolicyBundle bundle = Train(states, features, train);

    double mixture_value = 0.0;
    for (const Policy& snapshot : bundle.snapshots) {
      const std::vector<double>& p = snapshot.mixtures.at(0);
      for (size_t m = 0; m < p.size(); ++m) {
        mixture_value += p[m] * report.member_values[m];
      }
    }
    mixture_value /= t;
    const double regret = bundle.Regret();

    BoundReport run;
    run.check = "theorem1";
    run.tolerance = 0.0;
    run.components = {{"f_mixture", mixture_value},
                      {"f_random_optimal", report.optimal.value},
                      {"one_minus_inv_e", one_minus_inv_e},
                      {"regret_over_t", regret / t},
                      {"deviation", deviation}};
    run.lhs = mixture_value;
    run.rhs = one_minus_inv_e * report.optimal.value - regret / t - deviation;
    run.Finish();
    if (run.holds) ++report.holds_count;
    report.runs.push_back(std::move(run));
  }
  report.frequency =
      static_cast<double>(report.holds_count) / config.repetitions;
  report.pass = report.frequency >= 1.0 - config.delta;
  return report;
}

nlohmann::json Theorem1ReportToJson(const Theorem1Report& report) {
  nlohmann::json j;
  j["check"] = "theorem1";
  j["frequency"] = report.frequency;
  j["holds"] = report.pass;
  j["repetitions"] = report.runs.size();
  j["holds_count"] = report.holds_count;
  j["f_random_optimal"] = report.optimal.value;
  j["optimal_sequence"] = report.optimal.sequence;
  j["member_values"] = report.member_values;
  double worst = std::numeric_limits<double>::infinity();
  for (const BoundReport& run : report.runs) worst = std::min(worst, run.slack);
  j["min_slack"] = report.runs.empty() ? 0.0 : worst;
  j["notes"] = report.notes;
  return j;
}

}  // namespace listpred
