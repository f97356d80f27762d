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

#ifndef LISTPRED_LISTPRED_MODEL_IO_H_
#define LISTPRED_LISTPRED_MODEL_IO_H_

#include <memory>
#include <string>

#include "core/vocabulary.h"
#include "features/feature_map.h"
#include "json.hpp"
#include "listpred/policy.h"
#include "listpred/train.h"

namespace listpred {

inline constexpr int kModelFormatVersion = 1;

// Feature maps are persisted with token strings so that a model can be
// applied to data interned into a different vocabulary.
nlohmann::json FeatureMapToJson(const FeatureMap& features,
                                const Vocabulary& vocabulary);
std::unique_ptr<FeatureMap> FeatureMapFromJson(const nlohmann::json& j,
                                               Vocabulary& vocabulary);

// Versioned model document:
//   {"format": "listpred-model", "version": 1, "mode", "learner",
//    "budget", "half_budget_filter", "dimension", "feature_map",
//    "positions": [{"weights": [...]}]                      (ranker)
//    "policy_class": [[...]], "positions": [{"log_weights", "loss_scale"}]
//                                                         (rwm)
//    "trace": {"iterations", "mean_list_value", "cumulative_loss",
//              "cumulative_surrogate_loss", "regret", "best_iteration"}}
nlohmann::json ModelToJson(const PolicyBundle& bundle,
                           const FeatureMap& features,
                           const Vocabulary& vocabulary);

struct LoadedModel {
  Policy policy;
  std::unique_ptr<FeatureMap> features;
  int64_t budget = 0;
  bool half_budget_filter = false;
  int dimension = 0;
};

// Throws std::invalid_argument on a malformed or unsupported document.
LoadedModel ModelFromJson(const nlohmann::json& j, Vocabulary& vocabulary);

}  // namespace listpred

#endif  // LISTPRED_LISTPRED_MODEL_IO_H_
