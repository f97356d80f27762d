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

#include "features/feature_map.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <unordered_set>

#include "features/gram.h"

namespace listpred {
namespace {

std::vector<double> Quality(const Item& item, int64_t budget) {
  if (item.static_features.size() != kStaticQualityFeatures) {
    throw std::invalid_argument("item " + std::to_string(item.id) +
                                " lacks static quality features");
  }
  std::vector<double> quality;
  quality.reserve(kQualityFeatures);
  quality.push_back(static_cast<double>(item.length) /
                    static_cast<double>(budget));
  quality.insert(quality.end(), item.static_features.begin(),
                 item.static_features.end());
  return quality;
}

}  // namespace

std::vector<double> StaticQualityFeatures(const TfIdfModel& model,
                                          const Item& item,
                                          double relative_position,
                                          int numeral_tokens) {
  const double count = static_cast<double>(item.tokens.size());
  double idf_sum = 0.0;
  for (TokenId t : item.tokens) idf_sum += model.Idf(t);
  return {
      relative_position,
      count,
      count > 0 ? numeral_tokens / count : 0.0,
      count > 0 ? idf_sum / count : 0.0,
      Dot(model.ItemVector(item.id), model.Centroid()),
  };
}

CandidateFeatures AssembleFeatures(const ProblemInstance& instance,
                                   const ItemList& list, const Item& item,
                                   int64_t budget,
                                   double empty_list_distance) {
  if (instance.tfidf == nullptr) {
    throw std::invalid_argument("instance " + instance.state_id +
                                " has no tf-idf model");
  }
  if (budget < 1) throw std::invalid_argument("budget must be >= 1");
  CandidateFeatures out;
  out.quality = Quality(item, budget);

  const double det = GramDetSimilarity(*instance.tfidf, list, item);
  double mean_quality = 0.0;
  for (double q : out.quality) mean_quality += q;
  mean_quality /= static_cast<double>(out.quality.size());

  double min_distance = empty_list_distance;
  if (!list.empty()) {
    min_distance = std::numeric_limits<double>::infinity();
    for (ItemId id : list.ids()) {
      const std::vector<double> other = Quality(instance.item(id), budget);
      double distance = 0.0;
      for (size_t k = 0; k < other.size(); ++k) {
        distance += std::abs(out.quality[k] - other[k]);
      }
      min_distance = std::min(min_distance, distance);
    }
  }
  out.similarity = {det, det * mean_quality, min_distance};

  out.assembled = out.quality;
  out.assembled.insert(out.assembled.end(), out.similarity.begin(),
                       out.similarity.end());
  return out;
}

std::vector<double> SummaryFeatureMap::Compute(const ProblemInstance& instance,
                                               const ItemList& list,
                                               const Item& item) const {
  return AssembleFeatures(instance, list, item, budget_, empty_list_distance_)
      .assembled;
}

NoveltyFeatureMap::NoveltyFeatureMap(std::vector<TokenId> vocabulary)
    : vocabulary_(std::move(vocabulary)) {
  for (size_t i = 0; i < vocabulary_.size(); ++i) {
    if (!column_.emplace(vocabulary_[i], static_cast<int>(i)).second) {
      throw std::invalid_argument("novelty vocabulary repeats a token");
    }
  }
}

std::vector<double> NoveltyFeatureMap::Compute(const ProblemInstance& instance,
                                               const ItemList& list,
                                               const Item& item) const {
  std::unordered_set<TokenId> covered;
  for (ItemId id : list.ids()) {
    const Item& member = instance.item(id);
    covered.insert(member.tokens.begin(), member.tokens.end());
  }
  std::vector<double> features(vocabulary_.size(), 0.0);
  const double inverse_length = 1.0 / static_cast<double>(item.length);
  for (TokenId t : item.tokens) {
    if (covered.count(t) > 0) continue;
    auto it = column_.find(t);
    if (it != column_.end()) features[it->second] = inverse_length;
  }
  return features;
}

}  // namespace listpred
