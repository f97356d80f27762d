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

#ifndef LISTPRED_FEATURES_FEATURE_MAP_H_
#define LISTPRED_FEATURES_FEATURE_MAP_H_

#include <memory>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "core/item.h"
#include "features/tfidf.h"

namespace listpred {

// Number of quality features: length / budget followed by the static block
// produced by StaticQualityFeatures.
inline constexpr int kQualityFeatures = 6;
inline constexpr int kStaticQualityFeatures = kQualityFeatures - 1;
inline constexpr int kSimilarityFeatures = 3;

// Length-independent quality features of one sentence: relative position in
// its document (0..1), token count, fraction of numeral tokens, mean idf,
// cosine to the cluster centroid.
std::vector<double> StaticQualityFeatures(const TfIdfModel& model,
                                          const Item& item,
                                          double relative_position,
                                          int numeral_tokens);

struct CandidateFeatures {
  std::vector<double> quality;
  std::vector<double> similarity;
  std::vector<double> assembled;  // [quality, similarity]
};

// Quality block plus [det G, det G * mean(quality), min L1 distance of
// quality vectors to list members]. The last entry is `empty_list_distance`
// when the list is empty. Needs `instance.tfidf` and per-item static
// quality features.
CandidateFeatures AssembleFeatures(const ProblemInstance& instance,
                                   const ItemList& list, const Item& item,
                                   int64_t budget,
                                   double empty_list_distance = 1.0);

// Maps (state, partial list, candidate) to the vector v consumed by learners.
class FeatureMap {
 public:
  virtual ~FeatureMap() = default;

  virtual int dimension() const = 0;
  virtual std::string kind() const = 0;
  virtual std::vector<double> Compute(const ProblemInstance& instance,
                                      const ItemList& list,
                                      const Item& item) const = 0;
};

class SummaryFeatureMap : public FeatureMap {
 public:
  explicit SummaryFeatureMap(int64_t budget, double empty_list_distance = 1.0)
      : budget_(budget), empty_list_distance_(empty_list_distance) {}

  int dimension() const override {
    return kQualityFeatures + kSimilarityFeatures;
  }
  std::string kind() const override { return "summary"; }
  std::vector<double> Compute(const ProblemInstance& instance,
                              const ItemList& list,
                              const Item& item) const override;

  int64_t budget() const { return budget_; }
  double empty_list_distance() const { return empty_list_distance_; }

 private:
  int64_t budget_;
  double empty_list_distance_;
};

// One column per vocabulary token: 1 / length(s) if s contains the token and
// no list member does, else 0. With a coverage-style reward whose concept
// weights are shared across states, the normalized marginal benefit is an
// exact linear function of these features.
class NoveltyFeatureMap : public FeatureMap {
 public:
  explicit NoveltyFeatureMap(std::vector<TokenId> vocabulary);

  int dimension() const override {
    return static_cast<int>(vocabulary_.size());
  }
  std::string kind() const override { return "novelty"; }
  std::vector<double> Compute(const ProblemInstance& instance,
                              const ItemList& list,
                              const Item& item) const override;

  const std::vector<TokenId>& vocabulary() const { return vocabulary_; }

 private:
  std::vector<TokenId> vocabulary_;
  std::unordered_map<TokenId, int> column_;
};

}  // namespace listpred

#endif  // LISTPRED_FEATURES_FEATURE_MAP_H_
