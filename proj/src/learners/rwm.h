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

#ifndef LISTPRED_LEARNERS_RWM_H_
#define LISTPRED_LEARNERS_RWM_H_

#include <cstdint>
#include <span>
#include <vector>

#include "core/item.h"
#include "learners/ranking.h"

namespace listpred {

// Loss of a fixed linear policy on one example: weight times the cost of the
// feasible candidate the policy ranks first.
double PolicyLoss(std::span<const double> policy_weights,
                  const CostSensitiveExample& example);

// Randomized Weighted Majority (exponential weights) over a finite class.
//
// Losses are divided by a scale M before the exponential update. With
// kRunningMax, M is the largest single loss seen so far, which keeps the
// update meaningful when losses are not bounded by 1 a priori. Cumulative
// counters are kept in raw (unscaled) units.
class RandomizedWeightedMajority {
 public:
  enum class Scaling { kFixed, kRunningMax };

  RandomizedWeightedMajority(size_t num_policies, double eta,
                             Scaling scaling = Scaling::kRunningMax,
                             double fixed_scale = 1.0);

  // Throws std::invalid_argument on a size mismatch or a negative loss.
  void Update(std::span<const double> losses);

  std::vector<double> Distribution() const;
  size_t Sample(Rng& rng) const;
  // Highest-probability policy, lowest index on ties.
  size_t MostLikely() const;

  size_t num_policies() const { return log_weights_.size(); }
  double eta() const { return eta_; }
  Scaling scaling() const { return scaling_; }
  double loss_scale() const { return scale_; }
  int64_t rounds() const { return rounds_; }
  const std::vector<double>& log_weights() const { return log_weights_; }
  const std::vector<double>& cumulative_policy_loss() const {
    return policy_loss_;
  }
  // Sum over rounds of the expected loss under the pre-update distribution.
  double cumulative_algorithm_loss() const { return algorithm_loss_; }
  double Regret() const;

  // Restores a persisted state.
  void Restore(std::vector<double> log_weights, double loss_scale);

 private:
  std::vector<double> log_weights_;
  std::vector<double> policy_loss_;
  double eta_;
  Scaling scaling_;
  double scale_;
  double algorithm_loss_ = 0.0;
  int64_t rounds_ = 0;
};

}  // namespace listpred

#endif  // LISTPRED_LEARNERS_RWM_H_
