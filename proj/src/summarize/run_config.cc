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

#include "summarize/run_config.h"

#include <fstream>
#include <set>
#include <stdexcept>

namespace listpred {

using nlohmann::json;

void RunConfig::Validate() const {
  if (reward != "rouge1") {
    throw std::invalid_argument("unsupported reward '" + reward + "'");
  }
  if (features != "summary" && features != "novelty") {
    throw std::invalid_argument("features must be summary or novelty");
  }
  if (!(empty_list_distance >= 0.0)) {
    throw std::invalid_argument("empty_list_distance must be >= 0");
  }
  if (train.budget < 1) throw std::invalid_argument("budget must be >= 1");
  if (train.iterations < 1) {
    throw std::invalid_argument("iterations must be >= 1");
  }
  if (train.max_positions < 0) {
    throw std::invalid_argument("max_positions must be >= 0");
  }
}

RunConfig RunConfigFromJson(const json& j, RunConfig base) {
  if (!j.is_object()) throw std::invalid_argument("config must be an object");
  static const std::set<std::string> kKeys = {
      "mode",        "learner",          "budget",     "iterations",
      "seed",        "eta0",             "rwm_eta",    "half_budget_filter",
      "max_positions", "train_dir",      "test_dir",   "model_out",
      "report_out",  "reward",           "features",   "empty_list_distance"};
  for (const auto& [key, value] : j.items()) {
    if (kKeys.count(key) == 0) {
      throw std::invalid_argument("unknown config key '" + key + "'");
    }
  }
  RunConfig c = std::move(base);
  try {
    if (j.contains("mode")) c.train.mode = ParseMode(j["mode"].get<std::string>());
    if (j.contains("learner")) {
      c.train.learner = ParseLearner(j["learner"].get<std::string>());
    }
    if (j.contains("budget")) c.train.budget = j["budget"].get<int64_t>();
    if (j.contains("iterations")) {
      c.train.iterations = j["iterations"].get<int>();
    }
    if (j.contains("seed")) c.train.seed = j["seed"].get<uint64_t>();
    if (j.contains("eta0")) c.train.eta0 = j["eta0"].get<double>();
    if (j.contains("rwm_eta")) c.train.rwm_eta = j["rwm_eta"].get<double>();
    if (j.contains("half_budget_filter")) {
      c.train.half_budget_filter = j["half_budget_filter"].get<bool>();
    }
    if (j.contains("max_positions")) {
      c.train.max_positions = j["max_positions"].get<int>();
    }
    if (j.contains("train_dir")) c.train_dir = j["train_dir"].get<std::string>();
    if (j.contains("test_dir")) c.test_dir = j["test_dir"].get<std::string>();
    if (j.contains("model_out")) c.model_out = j["model_out"].get<std::string>();
    if (j.contains("report_out")) {
      c.report_out = j["report_out"].get<std::string>();
    }
    if (j.contains("reward")) c.reward = j["reward"].get<std::string>();
    if (j.contains("features")) c.features = j["features"].get<std::string>();
    if (j.contains("empty_list_distance")) {
      c.empty_list_distance = j["empty_list_distance"].get<double>();
    }
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("bad config value: ") + e.what());
  }
  return c;
}

RunConfig LoadRunConfig(const std::filesystem::path& path, RunConfig base) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw std::invalid_argument("malformed config: " + std::string(e.what()));
  }
  return RunConfigFromJson(j, std::move(base));
}

json RunConfigToJson(const RunConfig& c) {
  return {{"mode", ModeName(c.train.mode)},
          {"learner", LearnerName(c.train.learner)},
          {"budget", c.train.budget},
          {"iterations", c.train.iterations},
          {"seed", c.train.seed},
          {"eta0", c.train.eta0},
          {"rwm_eta", c.train.rwm_eta},
          {"half_budget_filter", c.train.half_budget_filter},
          {"max_positions", c.train.max_positions},
          {"train_dir", c.train_dir},
          {"test_dir", c.test_dir},
          {"model_out", c.model_out},
          {"report_out", c.report_out},
          {"reward", c.reward},
          {"features", c.features},
          {"empty_list_distance", c.empty_list_distance}};
}

}  // namespace listpred
