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

#include "learners/rwm.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace listpred {

double PolicyLoss(std::span<const double> policy_weights,
                  const CostSensitiveExample& example) {
  const ItemId pick = PredictBest(policy_weights, example.candidates);
  for (const Candidate& c : example.candidates) {
    if (c.id == pick) return example.weight * c.cost;
  }
  throw std::logic_error("policy picked unknown item " + std::to_string(pick));
}

RandomizedWeightedMajority::RandomizedWeightedMajority(size_t num_policies,
                                                       double eta,
                                                       Scaling scaling,
                                                       double fixed_scale)
    : log_weights_(num_policies, 0.0),
      policy_loss_(num_policies, 0.0),
      eta_(eta),
      scaling_(scaling),
      scale_(scaling == Scaling::kFixed ? fixed_scale : 0.0) {
  if (num_policies == 0) throw std::invalid_argument("empty policy class");
  if (!(eta >= 0.0)) throw std::invalid_argument("eta must be >= 0");
  if (scaling == Scaling::kFixed && !(fixed_scale > 0.0)) {
    throw std::invalid_argument("fixed loss scale must be positive");
  }
}

std::vector<double> RandomizedWeightedMajority::Distribution() const {
  const double top =
      *std::max_element(log_weights_.begin(), log_weights_.end());
  std::vector<double> p(log_weights_.size());
  double total = 0.0;
  for (size_t i = 0; i < p.size(); ++i) {
    p[i] = std::exp(log_weights_[i] - top);
    total += p[i];
  }
  for (double& v : p) v /= total;
  return p;
}

size_t RandomizedWeightedMajority::Sample(Rng& rng) const {
  const std::vector<double> p = Distribution();
  const double u = UniformUnit(rng);
  double acc = 0.0;
  for (size_t i = 0; i < p.size(); ++i) {
    acc += p[i];
    if (u < acc) return i;
  }
  return p.size() - 1;
}

size_t RandomizedWeightedMajority::MostLikely() const {
  return static_cast<size_t>(
      std::max_element(log_weights_.begin(), log_weights_.end()) -
      log_weights_.begin());
}

void RandomizedWeightedMajority::Update(std::span<const double> losses) {
  if (losses.size() != log_weights_.size()) {
    throw std::invalid_argument("expected " +
                                std::to_string(log_weights_.size()) +
                                " losses, got " +
                                std::to_string(losses.size()));
  }
  for (double loss : losses) {
    if (!std::isfinite(loss) || loss < 0.0) {
      throw std::invalid_argument("losses must be finite and nonnegative");
    }
  }
  const std::vector<double> p = Distribution();
  for (size_t i = 0; i < losses.size(); ++i) {
    algorithm_loss_ += p[i] * losses[i];
    policy_loss_[i] += losses[i];
  }
  ++rounds_;
  if (scaling_ == Scaling::kRunningMax) {
    scale_ = std::max(scale_, *std::max_element(losses.begin(), losses.end()));
  }
  if (scale_ <= 0.0) return;  // every loss so far was zero
  for (size_t i = 0; i < losses.size(); ++i) {
    log_weights_[i] -= eta_ * losses[i] / scale_;
  }
  // Keep log-weights near zero; the distribution is shift invariant.
  const double top =
      *std::max_element(log_weights_.begin(), log_weights_.end());
  for (double& w : log_weights_) w -= top;
}

double RandomizedWeightedMajority::Regret() const {
  return algorithm_loss_ -
         *std::min_element(policy_loss_.begin(), policy_loss_.end());
}

void RandomizedWeightedMajority::Restore(std::vector<double> log_weights,
                                         double loss_scale) {
  if (log_weights.size() != log_weights_.size()) {
    throw std::invalid_argument("restored state has wrong policy count");
  }
  log_weights_ = std::move(log_weights);
  scale_ = loss_scale;
}

}  // namespace listpred
