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

#include <cmath>
#include <memory>
#include <vector>

#include "core/item.h"
#include "features/feature_map.h"
#include "features/gram.h"
#include "features/tfidf.h"
#include "gtest/gtest.h"
#include "test_fixtures.h"

namespace listpred {
namespace {

using testing::MakeItem;

// Instance over the given token bags with static quality features filled.
ProblemInstance TokenInstance(const std::vector<std::vector<TokenId>>& bags,
                              int64_t length = 10) {
  ProblemInstance x;
  std::vector<ItemId> ids;
  for (size_t i = 0; i < bags.size(); ++i) {
    x.items.push_back(MakeItem(static_cast<ItemId>(i), length, bags[i]));
    ids.push_back(static_cast<ItemId>(i));
  }
  auto model = std::make_shared<TfIdfModel>(TfIdfModel::Build(bags, ids));
  for (Item& item : x.items) {
    item.static_features = StaticQualityFeatures(*model, item, 0.0, 0);
  }
  x.tfidf = model;
  x.Reindex();
  return x;
}

ItemList ListOf(const ProblemInstance& x, std::vector<ItemId> ids) {
  return MakeItemList(ids, ItemIndex(x.items));
}

TEST(TfIdfTest, EmptyCorpusThrows) {
  EXPECT_THROW(TfIdfModel::Build({}, {}), std::invalid_argument);
}

TEST(TfIdfTest, SingleDocumentHasZeroIdf) {
  const std::vector<std::vector<TokenId>> corpus = {{1, 2, 2}};
  const std::vector<ItemId> ids = {0};
  const TfIdfModel model = TfIdfModel::Build(corpus, ids);
  EXPECT_EQ(model.Idf(1), 0.0);
  EXPECT_EQ(model.Idf(2), 0.0);
  EXPECT_EQ(model.ItemVector(0).SquaredNorm(), 0.0);
}

TEST(TfIdfTest, IdfIsLogRatio) {
  const std::vector<std::vector<TokenId>> corpus = {{1, 2}, {2, 3}, {2}};
  const std::vector<ItemId> ids = {0, 1, 2};
  const TfIdfModel model = TfIdfModel::Build(corpus, ids);
  EXPECT_DOUBLE_EQ(model.Idf(1), std::log(3.0));
  EXPECT_DOUBLE_EQ(model.Idf(2), 0.0);
  EXPECT_EQ(model.Idf(99), 0.0);
  EXPECT_NEAR(model.ItemVector(0).SquaredNorm(), 1.0, 1e-12);
}

TEST(TfIdfTest, DisjointItemsAreOrthogonal) {
  const std::vector<std::vector<TokenId>> corpus = {{1, 2}, {3, 4}};
  const std::vector<ItemId> ids = {0, 1};
  const TfIdfModel model = TfIdfModel::Build(corpus, ids);
  EXPECT_EQ(Dot(model.ItemVector(0), model.ItemVector(1)), 0.0);
}

TEST(TfIdfTest, IdenticalItemsHaveUnitInnerProduct) {
  const std::vector<std::vector<TokenId>> corpus = {{1, 2}, {1, 2}, {3}};
  const std::vector<ItemId> ids = {0, 1, 2};
  const TfIdfModel model = TfIdfModel::Build(corpus, ids);
  EXPECT_NEAR(Dot(model.ItemVector(0), model.ItemVector(1)), 1.0, 1e-12);
}

TEST(GramTest, SingleUnitVector) {
  ProblemInstance x = TokenInstance({{1, 2}, {3}});
  EXPECT_NEAR(GramDetSimilarity(*x.tfidf, ItemList{}, x.item(0)), 1.0, 1e-9);
}

TEST(GramTest, DependentVectorsHaveZeroVolume) {
  ProblemInstance x = TokenInstance({{1, 2}, {1, 2}, {3}});
  EXPECT_EQ(GramDetSimilarity(*x.tfidf, ListOf(x, {0}), x.item(1)), 0.0);
}

TEST(GramTest, OrthogonalVectorsHaveUnitVolume) {
  ProblemInstance x = TokenInstance({{1, 2}, {3}});
  EXPECT_NEAR(GramDetSimilarity(*x.tfidf, ListOf(x, {0}), x.item(1)), 1.0,
              1e-9);
}

TEST(GramTest, TwoVectorsMatchClosedForm) {
  ProblemInstance x = TokenInstance({{1, 2}, {2, 3}, {4}, {5}});
  const double c = Dot(x.tfidf->ItemVector(0), x.tfidf->ItemVector(1));
  EXPECT_NEAR(GramDetSimilarity(*x.tfidf, ListOf(x, {0}), x.item(1)),
              1.0 - c * c, 1e-9);
}

SparseVector RandomUnitVector(Rng& rng, int dimension) {
  SparseVector v;
  double norm = 0.0;
  for (int k = 0; k < dimension; ++k) {
    const double value = 2.0 * UniformUnit(rng) - 1.0;
    v.entries.emplace_back(k, value);
    norm += value * value;
  }
  for (auto& entry : v.entries) entry.second /= std::sqrt(norm);
  return v;
}

TEST(GramTest, AddingVectorsNeverIncreasesDeterminant) {
  Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<SparseVector> vectors;
    for (int i = 0; i < 5; ++i) vectors.push_back(RandomUnitVector(rng, 6));
    std::vector<const SparseVector*> pointers;
    double previous = 1.0;
    for (const SparseVector& v : vectors) {
      pointers.push_back(&v);
      const double det = GramDeterminant(pointers);
      EXPECT_LE(det, previous + 1e-9);
      EXPECT_GE(det, 0.0);
      previous = det;
    }
  }
}

TEST(GramTest, PermutationInvariant) {
  Rng rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<SparseVector> vectors;
    for (int i = 0; i < 4; ++i) vectors.push_back(RandomUnitVector(rng, 5));
    const std::vector<const SparseVector*> forward = {
        &vectors[0], &vectors[1], &vectors[2], &vectors[3]};
    const std::vector<const SparseVector*> shuffled = {
        &vectors[2], &vectors[0], &vectors[3], &vectors[1]};
    EXPECT_NEAR(GramDeterminant(forward), GramDeterminant(shuffled), 1e-9);
  }
}

TEST(AssembleFeaturesTest, EmptyListConvention) {
  ProblemInstance x = TokenInstance({{1, 2}, {3}, {4, 5}});
  const CandidateFeatures f =
      AssembleFeatures(x, ItemList{}, x.item(0), 100);
  ASSERT_EQ(f.quality.size(), static_cast<size_t>(kQualityFeatures));
  ASSERT_EQ(f.assembled.size(),
            static_cast<size_t>(kQualityFeatures + kSimilarityFeatures));
  const double norm = x.tfidf->ItemVector(0).SquaredNorm();
  double mean = 0.0;
  for (double q : f.quality) mean += q;
  mean /= kQualityFeatures;
  EXPECT_NEAR(f.similarity[0], norm, 1e-9);
  EXPECT_NEAR(f.similarity[1], norm * mean, 1e-9);
  EXPECT_EQ(f.similarity[2], 1.0);
  EXPECT_EQ(AssembleFeatures(x, ItemList{}, x.item(0), 100, 0.25).similarity[2],
            0.25);
}

TEST(AssembleFeaturesTest, QualityBlock) {
  ProblemInstance x = TokenInstance({{1, 2, 2}, {3}}, 12);
  x.items[0].static_features =
      StaticQualityFeatures(*x.tfidf, x.items[0], 0.5, 1);
  x.Reindex();
  const CandidateFeatures f =
      AssembleFeatures(x, ItemList{}, x.item(0), 24);
  EXPECT_DOUBLE_EQ(f.quality[0], 0.5);         // 12 / 24 bytes
  EXPECT_DOUBLE_EQ(f.quality[1], 0.5);         // relative position
  EXPECT_DOUBLE_EQ(f.quality[2], 3.0);         // token count
  EXPECT_DOUBLE_EQ(f.quality[3], 1.0 / 3.0);   // numeral fraction
  EXPECT_DOUBLE_EQ(f.quality[4], std::log(2.0));  // mean idf
  EXPECT_NEAR(f.quality[5],
              Dot(x.tfidf->ItemVector(0), x.tfidf->Centroid()), 1e-15);
}

TEST(AssembleFeaturesTest, DuplicateCandidateHasRedundancySignature) {
  ProblemInstance x = TokenInstance({{1, 2}, {1, 2}, {3}});
  const CandidateFeatures f =
      AssembleFeatures(x, ListOf(x, {0}), x.item(1), 100);
  EXPECT_EQ(f.similarity, (std::vector<double>{0.0, 0.0, 0.0}));
}

TEST(AssembleFeaturesTest, OrthogonalCandidate) {
  ProblemInstance x = TokenInstance({{1, 2}, {3, 4}});
  const CandidateFeatures f =
      AssembleFeatures(x, ListOf(x, {0}), x.item(1), 100);
  EXPECT_NEAR(f.similarity[0], 1.0, 1e-9);
}

TEST(AssembleFeaturesTest, IndependentOfListOrder) {
  ProblemInstance x = TokenInstance({{1, 2}, {2, 3}, {3, 4}, {4, 1, 5}});
  const auto forward = AssembleFeatures(x, ListOf(x, {0, 1, 2}), x.item(3), 50);
  const auto backward =
      AssembleFeatures(x, ListOf(x, {2, 1, 0}), x.item(3), 50);
  for (size_t k = 0; k < forward.assembled.size(); ++k) {
    EXPECT_NEAR(forward.assembled[k], backward.assembled[k], 1e-9);
    EXPECT_TRUE(std::isfinite(forward.assembled[k]));
  }
}

TEST(NoveltyFeatureMapTest, MarksUncoveredTokens) {
  ProblemInstance x = TokenInstance({{1, 2}, {2, 3}}, 8);
  NoveltyFeatureMap map({1, 2, 3});
  EXPECT_EQ(map.dimension(), 3);
  EXPECT_EQ(map.Compute(x, ItemList{}, x.item(1)),
            (std::vector<double>{0.0, 0.125, 0.125}));
  EXPECT_EQ(map.Compute(x, ListOf(x, {0}), x.item(1)),
            (std::vector<double>{0.0, 0.0, 0.125}));
  EXPECT_THROW(NoveltyFeatureMap({1, 1}), std::invalid_argument);
}

}  // namespace
}  // namespace listpred
