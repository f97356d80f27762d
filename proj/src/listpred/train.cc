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

#include "listpred/train.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "core/reward.h"
#include "listpred/examples.h"

namespace listpred {

void TrainConfig::Validate() const {
  if (budget < 1) throw std::invalid_argument("budget must be >= 1");
  if (iterations < 1) throw std::invalid_argument("iterations must be >= 1");
  if (mode == Mode::kConseqOpt && max_positions < 1) {
    throw std::invalid_argument("conseqopt needs max_positions >= 1");
  }
  if (learner == LearnerKind::kRanker && !(eta0 > 0.0)) {
    throw std::invalid_argument("eta0 must be positive");
  }
  if (learner == LearnerKind::kRwm && policy_class.empty()) {
    throw std::invalid_argument("rwm learner needs a policy class");
  }
}

double TrainingTrace::CumulativeLoss() const {
  double total = 0.0;
  for (const TraceRound& r : rounds) total += r.loss;
  return total;
}

Policy PolicyBundle::Current() const {
  Policy policy;
  policy.mode = config.mode;
  policy.learner = config.learner;
  policy.policy_class = policy_class;
  for (const LinearRanker& r : rankers) policy.weights.push_back(r.weights());
  for (const auto& learner : rwm) {
    policy.mixtures.push_back(learner.Distribution());
  }
  return policy;
}

size_t PolicyBundle::BestSnapshot() const {
  size_t best = 0;
  for (size_t t = 1; t < trace.rounds.size(); ++t) {
    if (trace.rounds[t].list_value > trace.rounds[best].list_value) best = t;
  }
  return best;
}

double PolicyBundle::Regret() const {
  double comparator = 0.0;
  for (const auto& learner : rwm) {
    const auto& losses = learner.cumulative_policy_loss();
    comparator += *std::min_element(losses.begin(), losses.end());
  }
  return trace.CumulativeLoss() - comparator;
}

PolicyClass CoordinatePolicyClass(int dimension) {
  PolicyClass policies;
  for (int k = 0; k < dimension; ++k) {
    for (double sign : {1.0, -1.0}) {
      std::vector<double> w(static_cast<size_t>(dimension), 0.0);
      w[static_cast<size_t>(k)] = sign;
      policies.push_back(std::move(w));
    }
  }
  return policies;
}

PolicyBundle InitBundle(int dimension, const TrainConfig& config) {
  config.Validate();
  PolicyBundle bundle;
  bundle.config = config;
  bundle.dimension = dimension;
  const int learners =
      config.mode == Mode::kScp ? 1 : config.max_positions;
  if (config.learner == LearnerKind::kRanker) {
    for (int i = 0; i < learners; ++i) {
      bundle.rankers.emplace_back(dimension, config.eta0);
    }
  } else {
    for (const auto& member : config.policy_class) {
      if (static_cast<int>(member.size()) != dimension) {
        throw std::invalid_argument("policy class member has dimension " +
                                    std::to_string(member.size()) +
                                    ", expected " + std::to_string(dimension));
      }
    }
    bundle.policy_class =
        std::make_shared<const PolicyClass>(config.policy_class);
    const double n = static_cast<double>(config.policy_class.size());
    double eta = config.rwm_eta;
    if (eta <= 0.0) {
      eta = std::sqrt(8.0 * std::log(std::max(n, 2.0)) / config.iterations);
    }
    for (int i = 0; i < learners; ++i) {
      bundle.rwm.emplace_back(config.policy_class.size(), eta);
    }
  }
  return bundle;
}

PolicyBundle Train(std::span<const ProblemInstance> instances,
                   const FeatureMap& features, const TrainConfig& config,
                   const ExampleObserver& observer) {
  if (instances.empty()) throw std::invalid_argument("no training instances");
  PolicyBundle bundle = InitBundle(features.dimension(), config);
  Rng rng(config.seed);
  const ConstructOptions construct{config.budget, config.half_budget_filter};
  const ExampleOptions example_options{config.budget,
                                       config.half_budget_filter};

  for (int t = 0; t < config.iterations; ++t) {
    TraceRound round;
    round.instance_index = static_cast<int>(UniformIndex(rng, instances.size()));
    const ProblemInstance& x = instances[round.instance_index];
    if (x.reward == nullptr) {
      throw std::invalid_argument("training instance " + x.state_id +
                                  " has no reward");
    }

    Policy policy = bundle.Current();
    const ItemList list = ConstructList(policy, x, features, construct, &rng);
    bundle.snapshots.push_back(std::move(policy));

    const std::vector<CostSensitiveExample> examples =
        MakeExamples(x, list, features, example_options);
    for (const auto& example : examples) ValidateExample(example);
    if (observer) observer(t, x, list, examples);

    round.list_value = x.reward->Evaluate(list);
    round.list_length = list.total_length();
    round.list_size = static_cast<int>(list.size());
    round.loss = ListLoss(examples, list);

    if (config.learner == LearnerKind::kRanker) {
      if (config.mode == Mode::kScp) {
        std::vector<RankingPair> pairs;
        for (const auto& example : examples) {
          auto more = ReduceToRanking(example);
          pairs.insert(pairs.end(), std::make_move_iterator(more.begin()),
                       std::make_move_iterator(more.end()));
        }
        round.surrogate_loss = HingeLoss(bundle.rankers[0].weights(), pairs);
        bundle.rankers[0].Update(pairs);
      } else {
        for (size_t i = 0; i < examples.size() && i < bundle.rankers.size();
             ++i) {
          const auto pairs = ReduceToRanking(examples[i]);
          round.surrogate_loss += HingeLoss(bundle.rankers[i].weights(), pairs);
          bundle.rankers[i].Update(pairs);
        }
      }
    } else {
      const PolicyClass& members = *bundle.policy_class;
      round.policy_losses.assign(members.size(), 0.0);
      std::vector<double> losses(members.size());
      const size_t learners = bundle.rwm.size();
      for (size_t i = 0; i < examples.size(); ++i) {
        for (size_t p = 0; p < members.size(); ++p) {
          losses[p] = PolicyLoss(members[p], examples[i]);
          round.policy_losses[p] += losses[p];
        }
        if (config.mode == Mode::kConseqOpt && i < learners) {
          bundle.rwm[i].Update(losses);
        }
      }
      if (config.mode == Mode::kScp) {
        // The single learner sees the whole list's loss per member.
        bundle.rwm[0].Update(round.policy_losses);
      }
    }

    if (!std::isfinite(round.loss) || !std::isfinite(round.surrogate_loss)) {
      throw std::runtime_error("non-finite loss at round " +
                               std::to_string(t) + " on instance " +
                               x.state_id);
    }
    bundle.trace.rounds.push_back(std::move(round));
  }
  return bundle;
}

}  // namespace listpred
