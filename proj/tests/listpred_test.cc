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

#include <algorithm>
#include <cmath>
#include <vector>

#include "core/reward.h"
#include "features/feature_map.h"
#include "gtest/gtest.h"
#include "listpred/evaluate.h"
#include "listpred/examples.h"
#include "listpred/model_io.h"
#include "listpred/policy.h"
#include "listpred/train.h"
#include "test_fixtures.h"
#include "theory/theorem_check.h"

namespace listpred {
namespace {

using testing::CoverageInstance;
using testing::UnitWeights;

std::vector<TokenId> Concepts(int first, int last) {
  std::vector<TokenId> v;
  for (int c = first; c <= last; ++c) v.push_back(c);
  return v;
}

std::vector<ProblemInstance> RandomInstances(int count, uint64_t seed) {
  Rng rng(seed);
  std::vector<ProblemInstance> out;
  for (int i = 0; i < count; ++i) {
    out.push_back(testing::RandomCoverageInstance(rng, 8, 10, 4));
    out.back().state_id = "s" + std::to_string(i);
  }
  return out;
}

Policy ZeroRanker(int dimension, Mode mode = Mode::kScp, int positions = 1) {
  Policy p;
  p.mode = mode;
  p.weights.assign(static_cast<size_t>(positions),
                   std::vector<double>(static_cast<size_t>(dimension), 0.0));
  return p;
}

TEST(ConstructListTest, ZeroRankerPicksLowestIdsWithinBudget) {
  ProblemInstance x = CoverageInstance(
      {{0, 3, {1}}, {1, 3, {2}}, {2, 3, {3}}, {3, 3, {4}}}, UnitWeights(1, 4));
  NoveltyFeatureMap features(Concepts(1, 4));
  const ItemList list =
      ConstructList(ZeroRanker(4), x, features, {7, false}, nullptr);
  EXPECT_EQ(list.ids(), (std::vector<ItemId>{0, 1}));
}

TEST(ConstructListTest, BudgetBelowEveryLength) {
  ProblemInstance x = CoverageInstance({{0, 3, {1}}, {1, 4, {2}}},
                                       UnitWeights(1, 2));
  NoveltyFeatureMap features(Concepts(1, 2));
  EXPECT_TRUE(
      ConstructList(ZeroRanker(2), x, features, {2, false}, nullptr).empty());
}

TEST(ConstructListTest, ConseqOptStopsAfterK) {
  ProblemInstance x = CoverageInstance({{0, 1, {1}}, {1, 1, {2}}, {2, 1, {3}}},
                                       UnitWeights(1, 3));
  NoveltyFeatureMap features(Concepts(1, 3));
  const ItemList list = ConstructList(ZeroRanker(3, Mode::kConseqOpt, 1), x,
                                      features, {10, false}, nullptr);
  EXPECT_EQ(list.size(), 1u);
}

TEST(ConstructListTest, FollowsScores) {
  ProblemInstance x = CoverageInstance({{0, 1, {1}}, {1, 1, {2}}, {2, 1, {3}}},
                                       UnitWeights(1, 3));
  NoveltyFeatureMap features(Concepts(1, 3));
  Policy p = ZeroRanker(3);
  p.weights[0] = {1.0, 3.0, 2.0};
  EXPECT_EQ(ConstructList(p, x, features, {2, false}, nullptr).ids(),
            (std::vector<ItemId>{1, 2}));
}

TEST(PositionWeightsTest, AlgorithmBoxProduct) {
  const std::vector<int64_t> lengths = {2, 3};
  const auto w = PositionWeights(lengths, 10);
  ASSERT_EQ(w.size(), 2u);
  EXPECT_DOUBLE_EQ(w[0], 1.4);
  EXPECT_DOUBLE_EQ(w[1], 3.0);
  EXPECT_TRUE(PositionWeights({}, 10).empty());
}

TEST(MakeExamplesTest, EmptyListGivesNoExamples) {
  ProblemInstance x = testing::ThreeItemInstance();
  NoveltyFeatureMap features(Concepts(1, 4));
  EXPECT_TRUE(MakeExamples(x, ItemList{}, features, {4, false}).empty());
}

TEST(MakeExamplesTest, CostsAndWeightsOnThreeItemInstance) {
  ProblemInstance x = testing::ThreeItemInstance();
  NoveltyFeatureMap features(Concepts(1, 4));
  const ItemList list = MakeItemList(std::vector<ItemId>{0, 1},
                                     ItemIndex(x.items));
  const auto examples = MakeExamples(x, list, features, {4, false});
  ASSERT_EQ(examples.size(), 2u);
  EXPECT_DOUBLE_EQ(examples[0].weight, (1.0 - 1.0 / 4.0) * 2.0);
  EXPECT_DOUBLE_EQ(examples[1].weight, 1.0);
  // Position 0: b = {0.25, 0.25, 0.2}; item 2 is infeasible but costed.
  ASSERT_EQ(examples[0].candidates.size(), 3u);
  EXPECT_DOUBLE_EQ(examples[0].candidates[0].cost, 0.0);
  EXPECT_DOUBLE_EQ(examples[0].candidates[1].cost, 0.0);
  EXPECT_NEAR(examples[0].candidates[2].cost, 0.05, 1e-15);
  EXPECT_FALSE(examples[0].candidates[2].feasible);
  // Position 1: prefix {0}; b = {0.25, 0.1}.
  ASSERT_EQ(examples[1].candidates.size(), 2u);
  EXPECT_EQ(examples[1].candidates[0].id, 1);
  EXPECT_DOUBLE_EQ(examples[1].candidates[0].cost, 0.0);
  EXPECT_NEAR(examples[1].candidates[1].cost, 0.15, 1e-15);
  EXPECT_DOUBLE_EQ(ListLoss(examples, list), 0.0);
}

TEST(MakeExamplesTest, RequiresReward) {
  ProblemInstance x = testing::ThreeItemInstance();
  x.reward = nullptr;
  NoveltyFeatureMap features(Concepts(1, 4));
  EXPECT_THROW(MakeExamples(x, ItemList{}, features, {4, false}),
               std::invalid_argument);
}

TEST(TrainTest, SingleIteration) {
  const auto instances = RandomInstances(5, 1);
  NoveltyFeatureMap features(Concepts(0, 9));
  TrainConfig config;
  config.budget = 8;
  config.iterations = 1;
  const PolicyBundle bundle = Train(instances, features, config);
  EXPECT_EQ(bundle.trace.rounds.size(), 1u);
  EXPECT_EQ(bundle.snapshots.size(), 1u);
  EXPECT_EQ(bundle.rankers[0].update_count(), 1);
}

TEST(TrainTest, ConfigValidation) {
  TrainConfig config;
  config.budget = 0;
  EXPECT_THROW(config.Validate(), std::invalid_argument);
  config = {};
  config.mode = Mode::kConseqOpt;
  EXPECT_THROW(config.Validate(), std::invalid_argument);
  config = {};
  config.learner = LearnerKind::kRwm;
  EXPECT_THROW(config.Validate(), std::invalid_argument);
}

// Runs training and checks the per-example invariants along the way.
void CheckTrainingInvariants(const TrainConfig& config) {
  const auto instances = RandomInstances(20, 2);
  NoveltyFeatureMap features(Concepts(0, 9));
  int examples_seen = 0;
  const PolicyBundle bundle = Train(
      instances, features, config,
      [&](int, const ProblemInstance& x, const ItemList& list,
          const std::vector<CostSensitiveExample>& examples) {
        ASSERT_LE(list.total_length(), config.budget);
        ASSERT_EQ(examples.size(), list.size());
        ItemList prefix;
        for (size_t i = 0; i < examples.size(); ++i) {
          const CostSensitiveExample& ex = examples[i];
          const Item& picked = x.item(list.ids()[i]);
          EXPECT_GE(ex.weight, 0.0);
          EXPECT_LE(ex.weight, static_cast<double>(picked.length));
          if (i + 1 == examples.size()) {
            EXPECT_EQ(ex.weight, static_cast<double>(picked.length));
          }
          double max_benefit = 0.0;
          for (const Item& s : x.items) {
            if (!prefix.Contains(s.id)) {
              max_benefit = std::max(max_benefit,
                                     NormalizedBenefit(*x.reward, prefix, s));
            }
          }
          double min_cost = INFINITY;
          for (const Candidate& c : ex.candidates) {
            EXPECT_GE(c.cost, 0.0);
            EXPECT_LE(c.cost, max_benefit + 1e-15);
            min_cost = std::min(min_cost, c.cost);
          }
          EXPECT_EQ(min_cost, 0.0);
          prefix.Append(picked);
          ++examples_seen;
        }
      });
  EXPECT_EQ(bundle.trace.rounds.size(),
            static_cast<size_t>(config.iterations));
  EXPECT_GT(examples_seen, 0);
}

TEST(TrainTest, InvariantsScpRanker) {
  TrainConfig config;
  config.budget = 8;
  config.iterations = 60;
  CheckTrainingInvariants(config);
}

TEST(TrainTest, InvariantsConseqOptRanker) {
  TrainConfig config;
  config.mode = Mode::kConseqOpt;
  config.max_positions = 3;
  config.budget = 8;
  config.iterations = 60;
  CheckTrainingInvariants(config);
}

TEST(TrainTest, InvariantsRwm) {
  TrainConfig config;
  config.learner = LearnerKind::kRwm;
  config.policy_class = CoordinatePolicyClass(10);
  config.budget = 8;
  config.iterations = 60;
  CheckTrainingInvariants(config);
  config.mode = Mode::kConseqOpt;
  config.max_positions = 3;
  CheckTrainingInvariants(config);
}

TEST(TrainTest, DeterministicGivenSeed) {
  const auto instances = RandomInstances(10, 3);
  NoveltyFeatureMap features(Concepts(0, 9));
  TrainConfig config;
  config.budget = 8;
  config.iterations = 40;
  config.seed = 17;
  const PolicyBundle a = Train(instances, features, config);
  const PolicyBundle b = Train(instances, features, config);
  ASSERT_EQ(a.trace.rounds.size(), b.trace.rounds.size());
  for (size_t t = 0; t < a.trace.rounds.size(); ++t) {
    EXPECT_EQ(a.trace.rounds[t].instance_index,
              b.trace.rounds[t].instance_index);
    EXPECT_EQ(a.trace.rounds[t].list_value, b.trace.rounds[t].list_value);
    EXPECT_EQ(a.trace.rounds[t].loss, b.trace.rounds[t].loss);
  }
  EXPECT_EQ(a.rankers[0].weights(), b.rankers[0].weights());
}

TEST(TrainTest, ScpAndConseqOptShareColdStart) {
  const auto instances = RandomInstances(10, 4);
  NoveltyFeatureMap features(Concepts(0, 9));
  TrainConfig scp;
  scp.budget = 8;
  scp.iterations = 1;
  TrainConfig conseqopt = scp;
  conseqopt.mode = Mode::kConseqOpt;
  conseqopt.max_positions = 8;
  std::vector<CostSensitiveExample> first[2];
  int which = 0;
  const auto observer = [&](int, const ProblemInstance&, const ItemList&,
                            const std::vector<CostSensitiveExample>& e) {
    first[which] = e;
  };
  Train(instances, features, scp, observer);
  which = 1;
  Train(instances, features, conseqopt, observer);
  ASSERT_FALSE(first[0].empty());
  ASSERT_FALSE(first[1].empty());
  const CostSensitiveExample& a = first[0][0];
  const CostSensitiveExample& b = first[1][0];
  EXPECT_EQ(a.weight, b.weight);
  ASSERT_EQ(a.candidates.size(), b.candidates.size());
  for (size_t c = 0; c < a.candidates.size(); ++c) {
    EXPECT_EQ(a.candidates[c].id, b.candidates[c].id);
    EXPECT_EQ(a.candidates[c].cost, b.candidates[c].cost);
    EXPECT_EQ(a.candidates[c].features, b.candidates[c].features);
  }
}

// Realized regret includes the sampling noise of the executed policy, so
// the per-round averages are compared across several seeds.
TEST(TrainTest, RwmAverageRegretShrinks) {
  CoverageDistributionSpec spec;
  spec.num_states = 30;
  const CoverageDistribution dist = MakeCoverageDistribution(spec);
  NoveltyFeatureMap features(dist.vocabulary);
  TrainConfig config;
  config.learner = LearnerKind::kRwm;
  config.policy_class = CoveragePolicyClass(dist, 4, 1);
  config.budget = 6;
  const auto mean_regret = [&](int rounds) {
    config.iterations = rounds;
    double total = 0.0;
    for (uint64_t seed = 1; seed <= 8; ++seed) {
      config.seed = seed;
      total += Train(dist.states, features, config).Regret() / rounds;
    }
    return total / 8.0;
  };
  EXPECT_LE(mean_regret(2000), mean_regret(200));
}

TEST(EvaluateTest, SingleSnapshotChoicesAgree) {
  const auto instances = RandomInstances(6, 5);
  NoveltyFeatureMap features(Concepts(0, 9));
  TrainConfig config;
  config.budget = 8;
  PolicyBundle bundle = InitBundle(features.dimension(), config);
  bundle.rankers[0] = LinearRanker({1, -1, 2, 0, 0, 1, 0, 3, 0, 1}, 0.5, 1);
  bundle.snapshots = {bundle.Current()};
  bundle.trace.rounds.resize(1);
  const ConstructOptions options{8, false};
  const auto f = EvaluateBundle(bundle, instances, features, options,
                                PolicyChoice::kFinal);
  const auto b = EvaluateBundle(bundle, instances, features, options,
                                PolicyChoice::kBest);
  const auto m = EvaluateBundle(bundle, instances, features, options,
                                PolicyChoice::kMixture);
  EXPECT_EQ(f.mean_value, b.mean_value);
  EXPECT_EQ(f.mean_value, m.mean_value);
  EXPECT_EQ(f.mean_length, m.mean_length);
}

TEST(EvaluateTest, MixtureIsSnapshotMean) {
  const auto instances = RandomInstances(6, 6);
  NoveltyFeatureMap features(Concepts(0, 9));
  TrainConfig config;
  config.budget = 8;
  PolicyBundle bundle = InitBundle(features.dimension(), config);
  Policy p1 = ZeroRanker(10);
  Policy p2 = ZeroRanker(10);
  p2.weights[0] = {0, 0, 0, 0, 0, 0, 0, 0, 1, 2};
  bundle.snapshots = {p1, p2};
  bundle.trace.rounds.resize(2);
  const ConstructOptions options{8, false};
  const double v1 = EvaluatePolicy(p1, instances, features, options).mean_value;
  const double v2 = EvaluatePolicy(p2, instances, features, options).mean_value;
  EXPECT_NEAR(EvaluateBundle(bundle, instances, features, options,
                             PolicyChoice::kMixture)
                  .mean_value,
              0.5 * (v1 + v2), 1e-15);
  EXPECT_THROW(EvaluatePolicy(p1, {}, features, options),
               std::invalid_argument);
}

TEST(EvaluateTest, BestAtLeastMixtureOnTrainingState) {
  const auto instances = RandomInstances(1, 7);
  NoveltyFeatureMap features(Concepts(0, 9));
  TrainConfig config;
  config.budget = 8;
  config.iterations = 30;
  const PolicyBundle bundle = Train(instances, features, config);
  const ConstructOptions options{8, false};
  EXPECT_GE(EvaluateBundle(bundle, instances, features, options,
                           PolicyChoice::kBest)
                .mean_value,
            EvaluateBundle(bundle, instances, features, options,
                           PolicyChoice::kMixture)
                    .mean_value -
                1e-12);
}

TEST(ModelIoTest, RoundTripPreservesPredictions) {
  const auto instances = RandomInstances(10, 8);
  Vocabulary vocabulary;
  std::vector<TokenId> tokens;
  for (int c = 0; c < 10; ++c) {
    tokens.push_back(vocabulary.Intern("c" + std::to_string(c)));
  }
  NoveltyFeatureMap features(tokens);
  for (Mode mode : {Mode::kScp, Mode::kConseqOpt}) {
    for (LearnerKind learner : {LearnerKind::kRanker, LearnerKind::kRwm}) {
      TrainConfig config;
      config.mode = mode;
      config.learner = learner;
      config.max_positions = 3;
      config.budget = 8;
      config.iterations = 25;
      if (learner == LearnerKind::kRwm) {
        config.policy_class = CoordinatePolicyClass(10);
      }
      const PolicyBundle bundle = Train(instances, features, config);
      const nlohmann::json j = ModelToJson(bundle, features, vocabulary);
      EXPECT_EQ(j["format"], "listpred-model");
      Vocabulary fresh;
      const LoadedModel loaded = ModelFromJson(j, fresh);
      EXPECT_EQ(loaded.budget, 8);
      EXPECT_EQ(loaded.dimension, 10);
      const Policy original = bundle.Current();
      EXPECT_EQ(loaded.policy.weights, original.weights);
      ASSERT_EQ(loaded.policy.mixtures.size(), original.mixtures.size());
      for (size_t i = 0; i < original.mixtures.size(); ++i) {
        for (size_t k = 0; k < original.mixtures[i].size(); ++k) {
          EXPECT_NEAR(loaded.policy.mixtures[i][k], original.mixtures[i][k],
                      1e-15);
        }
      }
      EXPECT_EQ(ModelToJson(bundle, features, vocabulary).dump(), j.dump());
    }
  }
}

TEST(ModelIoTest, RejectsUnknownFormat) {
  Vocabulary vocabulary;
  EXPECT_THROW(ModelFromJson({{"format", "other"}}, vocabulary),
               std::invalid_argument);
  EXPECT_THROW(ModelFromJson(nlohmann::json::array(), vocabulary),
               std::invalid_argument);
}

}  // namespace
}  // namespace listpred
