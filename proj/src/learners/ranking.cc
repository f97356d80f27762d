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

#include "learners/ranking.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace listpred {
namespace {

void CheckDimension(size_t expected, size_t actual) {
  if (expected != actual) {
    throw std::invalid_argument("dimension mismatch: " +
                                std::to_string(expected) + " vs " +
                                std::to_string(actual));
  }
}

double Margin(std::span<const double> weights, const RankingPair& pair) {
  CheckDimension(weights.size(), pair.better.size());
  CheckDimension(weights.size(), pair.worse.size());
  double margin = 0.0;
  for (size_t k = 0; k < weights.size(); ++k) {
    margin += weights[k] * (pair.better[k] - pair.worse[k]);
  }
  return margin;
}

}  // namespace

void ValidateExample(const CostSensitiveExample& example) {
  if (!std::isfinite(example.weight) || example.weight < 0.0) {
    throw std::logic_error("example weight must be finite and >= 0");
  }
  if (example.candidates.empty()) return;
  double min_cost = example.candidates.front().cost;
  for (const Candidate& c : example.candidates) {
    if (!std::isfinite(c.cost) || c.cost < 0.0) {
      throw std::logic_error("cost of item " + std::to_string(c.id) +
                             " is negative or non-finite");
    }
    min_cost = std::min(min_cost, c.cost);
  }
  if (min_cost != 0.0) {
    throw std::logic_error("cost vector minimum is not zero");
  }
}

std::vector<RankingPair> ReduceToRanking(const CostSensitiveExample& example) {
  std::vector<RankingPair> pairs;
  const auto& cands = example.candidates;
  if (cands.size() < 2) return pairs;
  for (size_t i = 0; i < cands.size(); ++i) {
    for (size_t j = i + 1; j < cands.size(); ++j) {
      const double gap = cands[i].cost - cands[j].cost;
      const double weight = example.weight * std::abs(gap);
      if (gap == 0.0 || weight <= 0.0) continue;
      const Candidate& better = gap < 0.0 ? cands[i] : cands[j];
      const Candidate& worse = gap < 0.0 ? cands[j] : cands[i];
      pairs.push_back({better.features, worse.features, weight});
    }
  }
  return pairs;
}

double HingeLoss(std::span<const double> weights, const RankingPair& pair) {
  return pair.weight * std::max(0.0, 1.0 - Margin(weights, pair));
}

double HingeLoss(std::span<const double> weights,
                 std::span<const RankingPair> pairs) {
  double total = 0.0;
  for (const RankingPair& pair : pairs) total += HingeLoss(weights, pair);
  return total;
}

std::vector<double> HingeSubgradient(std::span<const double> weights,
                                     std::span<const RankingPair> pairs) {
  std::vector<double> gradient(weights.size(), 0.0);
  for (const RankingPair& pair : pairs) {
    if (1.0 - Margin(weights, pair) <= 0.0) continue;
    for (size_t k = 0; k < weights.size(); ++k) {
      gradient[k] -= pair.weight * (pair.better[k] - pair.worse[k]);
    }
  }
  return gradient;
}

double Score(std::span<const double> weights,
             std::span<const double> features) {
  CheckDimension(weights.size(), features.size());
  double score = 0.0;
  for (size_t k = 0; k < weights.size(); ++k) score += weights[k] * features[k];
  return score;
}

ItemId PredictBest(std::span<const double> weights,
                   std::span<const Candidate> candidates) {
  const Candidate* best = nullptr;
  double best_score = 0.0;
  for (const Candidate& c : candidates) {
    if (!c.feasible) continue;
    const double score = Score(weights, c.features);
    if (best == nullptr || score > best_score ||
        (score == best_score && c.id < best->id)) {
      best = &c;
      best_score = score;
    }
  }
  if (best == nullptr) {
    throw std::invalid_argument("no feasible candidate to predict");
  }
  return best->id;
}

LinearRanker::LinearRanker(int dimension, double eta0)
    : weights_(static_cast<size_t>(dimension), 0.0), eta0_(eta0) {
  if (dimension < 1) throw std::invalid_argument("ranker dimension must be >= 1");
  if (!(eta0 > 0.0)) throw std::invalid_argument("eta0 must be positive");
}

LinearRanker::LinearRanker(std::vector<double> weights, double eta0,
                           int64_t update_count)
    : weights_(std::move(weights)), eta0_(eta0), update_count_(update_count) {
  if (weights_.empty()) throw std::invalid_argument("empty ranker weights");
}

void LinearRanker::Update(std::span<const RankingPair> pairs) {
  ++update_count_;
  if (pairs.empty()) return;
  const std::vector<double> gradient = HingeSubgradient(weights_, pairs);
  for (double g : gradient) {
    if (!std::isfinite(g)) {
      throw std::runtime_error("non-finite ranker gradient at update " +
                               std::to_string(update_count_));
    }
  }
  const double step =
      eta0_ / std::sqrt(static_cast<double>(update_count_));
  for (size_t k = 0; k < weights_.size(); ++k) {
    weights_[k] -= step * gradient[k];
  }
}

}  // namespace listpred
