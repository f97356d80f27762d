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

#include "listpred/model_io.h"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "learners/rwm.h"

namespace listpred {

using nlohmann::json;

json FeatureMapToJson(const FeatureMap& features,
                      const Vocabulary& vocabulary) {
  if (const auto* summary = dynamic_cast<const SummaryFeatureMap*>(&features)) {
    return {{"kind", "summary"},
            {"budget", summary->budget()},
            {"empty_list_distance", summary->empty_list_distance()}};
  }
  if (const auto* novelty = dynamic_cast<const NoveltyFeatureMap*>(&features)) {
    json tokens = json::array();
    for (TokenId t : novelty->vocabulary()) tokens.push_back(vocabulary.Name(t));
    return {{"kind", "novelty"}, {"vocabulary", tokens}};
  }
  throw std::invalid_argument("cannot serialize feature map of kind " +
                              features.kind());
}

std::unique_ptr<FeatureMap> FeatureMapFromJson(const json& j,
                                               Vocabulary& vocabulary) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "summary") {
    return std::make_unique<SummaryFeatureMap>(
        j.at("budget").get<int64_t>(),
        j.at("empty_list_distance").get<double>());
  }
  if (kind == "novelty") {
    std::vector<TokenId> tokens;
    for (const auto& name : j.at("vocabulary")) {
      tokens.push_back(vocabulary.Intern(name.get<std::string>()));
    }
    return std::make_unique<NoveltyFeatureMap>(std::move(tokens));
  }
  throw std::invalid_argument("unknown feature map kind '" + kind + "'");
}

json ModelToJson(const PolicyBundle& bundle, const FeatureMap& features,
                 const Vocabulary& vocabulary) {
  const TrainConfig& config = bundle.config;
  json j;
  j["format"] = "listpred-model";
  j["version"] = kModelFormatVersion;
  j["mode"] = ModeName(config.mode);
  j["learner"] = LearnerName(config.learner);
  j["budget"] = config.budget;
  j["half_budget_filter"] = config.half_budget_filter;
  j["dimension"] = bundle.dimension;
  j["feature_map"] = FeatureMapToJson(features, vocabulary);

  json positions = json::array();
  if (config.learner == LearnerKind::kRanker) {
    for (const LinearRanker& ranker : bundle.rankers) {
      positions.push_back({{"weights", ranker.weights()},
                           {"update_count", ranker.update_count()}});
    }
  } else {
    j["policy_class"] = *bundle.policy_class;
    for (const auto& learner : bundle.rwm) {
      positions.push_back({{"log_weights", learner.log_weights()},
                           {"loss_scale", learner.loss_scale()},
                           {"eta", learner.eta()}});
    }
  }
  j["positions"] = positions;

  const auto& rounds = bundle.trace.rounds;
  double value = 0.0;
  double surrogate = 0.0;
  for (const TraceRound& r : rounds) {
    value += r.list_value;
    surrogate += r.surrogate_loss;
  }
  json trace;
  trace["iterations"] = rounds.size();
  trace["mean_list_value"] = rounds.empty() ? 0.0 : value / rounds.size();
  trace["cumulative_loss"] = bundle.trace.CumulativeLoss();
  trace["cumulative_surrogate_loss"] = surrogate;
  trace["best_iteration"] = rounds.empty() ? 0 : bundle.BestSnapshot();
  if (config.learner == LearnerKind::kRwm) trace["regret"] = bundle.Regret();
  j["trace"] = trace;
  return j;
}

LoadedModel ModelFromJson(const json& j, Vocabulary& vocabulary) {
  try {
    if (j.at("format").get<std::string>() != "listpred-model") {
      throw std::invalid_argument("not a listpred model document");
    }
    const int version = j.at("version").get<int>();
    if (version != kModelFormatVersion) {
      throw std::invalid_argument("unsupported model version " +
                                  std::to_string(version));
    }
    LoadedModel model;
    model.policy.mode = ParseMode(j.at("mode").get<std::string>());
    model.policy.learner = ParseLearner(j.at("learner").get<std::string>());
    model.budget = j.at("budget").get<int64_t>();
    model.half_budget_filter = j.at("half_budget_filter").get<bool>();
    model.dimension = j.at("dimension").get<int>();
    model.features = FeatureMapFromJson(j.at("feature_map"), vocabulary);
    if (model.features->dimension() != model.dimension) {
      throw std::invalid_argument("feature map dimension disagrees with model");
    }
    const auto& positions = j.at("positions");
    if (positions.empty()) throw std::invalid_argument("model has no positions");
    if (model.policy.learner == LearnerKind::kRanker) {
      for (const auto& p : positions) {
        auto w = p.at("weights").get<std::vector<double>>();
        if (static_cast<int>(w.size()) != model.dimension) {
          throw std::invalid_argument("ranker weights have wrong dimension");
        }
        model.policy.weights.push_back(std::move(w));
      }
    } else {
      auto members = std::make_shared<PolicyClass>(
          j.at("policy_class").get<PolicyClass>());
      for (const auto& p : positions) {
        RandomizedWeightedMajority learner(members->size(),
                                           p.at("eta").get<double>());
        learner.Restore(p.at("log_weights").get<std::vector<double>>(),
                        p.at("loss_scale").get<double>());
        model.policy.mixtures.push_back(learner.Distribution());
      }
      model.policy.policy_class = std::move(members);
    }
    return model;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed model: ") + e.what());
  }
}

}  // namespace listpred
