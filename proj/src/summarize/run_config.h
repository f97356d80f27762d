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

#ifndef LISTPRED_SUMMARIZE_RUN_CONFIG_H_
#define LISTPRED_SUMMARIZE_RUN_CONFIG_H_

#include <filesystem>
#include <string>

#include "json.hpp"
#include "listpred/train.h"

namespace listpred {

// Training run settings. Loaded from a JSON object whose keys are exactly
// the field names below; unknown keys are rejected. Command-line flags
// override file values.
struct RunConfig {
  TrainConfig train;  // policy_class is derived, not configured
  std::string train_dir;
  std::string test_dir;
  std::string model_out;
  std::string report_out;
  std::string reward = "rouge1";
  // "summary" or "novelty".
  std::string features = "summary";
  double empty_list_distance = 1.0;

  // Throws std::invalid_argument.
  void Validate() const;
};

// Overlays the keys of `j` onto `base`.
RunConfig RunConfigFromJson(const nlohmann::json& j, RunConfig base = {});
RunConfig LoadRunConfig(const std::filesystem::path& path, RunConfig base = {});
nlohmann::json RunConfigToJson(const RunConfig& config);

}  // namespace listpred

#endif  // LISTPRED_SUMMARIZE_RUN_CONFIG_H_
