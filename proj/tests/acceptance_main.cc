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

// Acceptance checks. Prints one PASS or FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "core/greedy.h"
#include "features/feature_map.h"
#include "learners/ranking.h"
#include "learners/rwm.h"
#include "listpred/evaluate.h"
#include "listpred/examples.h"
#include "listpred/train.h"
#include "summarize/cluster.h"
#include "summarize/rouge.h"
#include "summarize/synthetic.h"
#include "summarize/tokenizer.h"
#include "theory/bound_suite.h"
#include "theory/theorem_check.h"

namespace listpred {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string Format(const char* fmt, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), fmt, a, b, c);
  return buf;
}

// 1. Lemma and corollary suites on randomized coverage rewards.
Outcome BoundSuites() {
  Outcome out{true, ""};
  for (BoundCheck check :
       {BoundCheck::kLemma1, BoundCheck::kCorollary1, BoundCheck::kLemma2}) {
    const BoundSuiteReport r = RunBoundSuite(check, 1000, 1);
    const bool ok = r.trials >= 1000 && r.holds_count == r.trials &&
                    r.worst.slack >= -1e-9;
    out.pass = out.pass && ok;
    out.detail += r.check + " " + std::to_string(r.holds_count) + "/" +
                  std::to_string(r.trials) +
                  Format(" (worst slack %.3g) ", r.worst.slack);
  }
  return out;
}

// 2. Exact versus Monte Carlo expectation of the stochastic list.
Outcome StochasticOracle() {
  const StochasticAgreementReport r = RunStochasticAgreement(20, 5, 100000, 1);
  return {r.lists == 20 && r.max_abs_difference <= 0.01,
          Format("20 lists, max |exact - mc| = %.5f", r.max_abs_difference)};
}

// 3. Frequency of the mixture-policy guarantee.
Outcome TheoremFrequency() {
  CoverageDistributionSpec spec;
  const CoverageDistribution dist = MakeCoverageDistribution(spec);
  const NoveltyFeatureMap features(dist.vocabulary);
  Theorem1Config config;  // |class| 4, W 6, delta 0.1, T 500, 50 reps
  const Theorem1Report r = CheckTheorem1(
      dist.states, features, CoveragePolicyClass(dist, 4, 1), config);
  return {r.holds_count >= 45,
          std::to_string(r.holds_count) + "/" + std::to_string(r.runs.size()) +
              " runs hold"};
}

double HedgeRegret(int rounds, size_t policies, bool adversarial,
                   uint64_t seed) {
  const double eta =
      std::sqrt(8.0 * std::log(static_cast<double>(policies)) / rounds);
  RandomizedWeightedMajority rwm(
      policies, eta, RandomizedWeightedMajority::Scaling::kFixed, 1.0);
  Rng rng(seed);
  std::vector<double> losses(policies);
  for (int t = 0; t < rounds; ++t) {
    for (size_t i = 0; i < policies; ++i) {
      if (adversarial) {
        losses[i] = i == rwm.MostLikely() ? 1.0 : 0.0;
      } else {
        losses[i] = UniformUnit(rng) * (i == 0 ? 0.8 : 1.0);
      }
    }
    rwm.Update(losses);
  }
  return rwm.Regret();
}

std::vector<double> RandomVector(Rng& rng, int n) {
  std::vector<double> v(n);
  for (double& x : v) x = 2.0 * UniformUnit(rng) - 1.0;
  return v;
}

// 4. RWM regret bound and hinge subgradients.
Outcome RegretAndGradients() {
  bool ok = true;
  double worst_ratio = 0.0;
  for (int rounds : {100, 1000, 10000}) {
    for (size_t policies : {2u, 4u, 8u}) {
      const double bound =
          std::sqrt(rounds * std::log(static_cast<double>(policies)) / 2.0) +
          2.0;
      for (bool adversarial : {true, false}) {
        const double regret = HedgeRegret(rounds, policies, adversarial, 3);
        ok = ok && regret <= bound;
        worst_ratio = std::max(worst_ratio, regret / bound);
      }
    }
  }
  Rng rng(4);
  constexpr double kStep = 1e-6;
  double worst_error = 0.0;
  int checked = 0;
  while (checked < 100) {
    std::vector<RankingPair> pairs;
    for (int i = 0; i < 4; ++i) {
      pairs.push_back({RandomVector(rng, 3), RandomVector(rng, 3),
                       UniformUnit(rng) + 0.1});
    }
    const auto h = RandomVector(rng, 3);
    bool near_kink = false;
    for (const RankingPair& p : pairs) {
      const double margin = Score(h, p.better) - Score(h, p.worse);
      near_kink = near_kink || std::abs(1.0 - margin) < 1e-3;
    }
    if (near_kink) continue;
    const auto direction = RandomVector(rng, 3);
    const auto gradient = HingeSubgradient(h, pairs);
    double analytic = 0.0;
    std::vector<double> plus = h, minus = h;
    for (int k = 0; k < 3; ++k) {
      analytic += gradient[k] * direction[k];
      plus[k] += kStep * direction[k];
      minus[k] -= kStep * direction[k];
    }
    const double numeric =
        (HingeLoss(plus, pairs) - HingeLoss(minus, pairs)) / (2.0 * kStep);
    const double error =
        std::abs(numeric - analytic) / std::max(1.0, std::abs(analytic));
    worst_error = std::max(worst_error, error);
    ++checked;
  }
  ok = ok && worst_error <= 1e-5;
  return {ok, Format("max regret/bound %.3f, max gradient rel error %.2g",
                     worst_ratio, worst_error)};
}

struct SyntheticStates {
  Vocabulary vocabulary;
  std::vector<TokenId> tokens;
  std::vector<ProblemInstance> train;
  std::vector<ProblemInstance> test;
  int64_t budget = 0;
};

// 5. Imitation of clairvoyant greedy on realizable synthetic data.
Outcome RealizableImitation() {
  SyntheticSpec spec;
  spec.realizable = true;
  spec.num_clusters = 90;
  spec.seed = 1;
  const SyntheticCorpus corpus = GenerateSynthetic(spec);
  SyntheticStates s;
  for (const std::string& name : corpus.vocabulary) {
    s.tokens.push_back(s.vocabulary.Intern(name));
  }
  for (size_t i = 0; i < corpus.clusters.size(); ++i) {
    ProblemInstance x = BuildCluster(corpus.clusters[i], s.vocabulary, {})
                            .instance;
    (i < 40 ? s.train : s.test).push_back(std::move(x));
  }
  s.budget = 3 * spec.max_sentence_bytes();
  const NoveltyFeatureMap features(s.tokens);
  const ConstructOptions options{s.budget, false};

  double greedy = 0.0;
  int positions = 0;
  for (const ProblemInstance& x : s.test) {
    const ItemList list = GreedyClairvoyant(*x.reward, x.items, s.budget);
    greedy += x.reward->Evaluate(list.ids());
  }
  for (const ProblemInstance& x : s.train) {
    positions = std::max(
        positions, static_cast<int>(
                       GreedyClairvoyant(*x.reward, x.items, s.budget).size()));
  }
  greedy /= s.test.size();

  Outcome out{true, Format("greedy %.4f", greedy)};
  for (Mode mode : {Mode::kScp, Mode::kConseqOpt}) {
    TrainConfig config;
    config.mode = mode;
    config.budget = s.budget;
    config.iterations = 500;
    config.seed = 1;
    // Novelty features and benefit gaps are both of order 1/length, so the
    // unit hinge margin needs weights of order 2 * max_bytes^2 (the planted
    // scale per reference count). The step size is matched to that scale.
    config.eta0 = 2.0 * static_cast<double>(spec.max_sentence_bytes() *
                                            spec.max_sentence_bytes());
    config.max_positions = positions;
    const PolicyBundle bundle = Train(s.train, features, config);
    const double value = EvaluateBundle(bundle, s.test, features, options,
                                        PolicyChoice::kFinal)
                             .mean_value;
    out.pass = out.pass && value >= 0.95 * greedy;
    out.detail += ", " + ModeName(mode) + Format(" %.4f (ratio %.4f)", value,
                                                 value / greedy);
  }
  out.detail += ", " + std::to_string(s.test.size()) + " held-out states";
  return out;
}

// 6. Position weights and cost vectors over a full training run.
Outcome AlgorithmArithmetic() {
  const std::vector<int64_t> lengths = {2, 3};
  const std::vector<double> w = PositionWeights(lengths, 10);
  bool ok = w.size() == 2 && std::abs(w[0] - 1.4) <= 1e-12 &&
            std::abs(w[1] - 3.0) <= 1e-12;

  SyntheticSpec spec;
  spec.num_clusters = 10;
  const SyntheticCorpus corpus = GenerateSynthetic(spec);
  Vocabulary vocabulary;
  std::vector<ProblemInstance> instances;
  for (const ClusterDocument& c : corpus.clusters) {
    instances.push_back(BuildCluster(c, vocabulary, {}).instance);
  }
  const SummaryFeatureMap features(24, 1.0);
  long examples = 0;
  long bad = 0;
  for (Mode mode : {Mode::kScp, Mode::kConseqOpt}) {
    TrainConfig config;
    config.mode = mode;
    config.budget = 24;
    config.iterations = 200;
    config.max_positions = 6;
    Train(instances, features, config,
          [&](int, const ProblemInstance&, const ItemList&,
              const std::vector<CostSensitiveExample>& batch) {
            for (const CostSensitiveExample& e : batch) {
              ++examples;
              double lowest = INFINITY;
              bool negative = false;
              for (const Candidate& c : e.candidates) {
                lowest = std::min(lowest, c.cost);
                negative = negative || c.cost < 0.0;
              }
              if (negative || lowest != 0.0) ++bad;
            }
          });
  }
  ok = ok && examples > 0 && bad == 0;
  return {ok, Format("weights (%.4f, %.4f)", w.size() > 0 ? w[0] : NAN,
                     w.size() > 1 ? w[1] : NAN) +
                  ", " + std::to_string(examples) + " examples, " +
                  std::to_string(bad) + " with bad costs"};
}

// 7. ROUGE-1 fixtures.
Outcome RougeFixtures() {
  Vocabulary v;
  auto ids = [&v](const std::string& text) {
    std::vector<TokenId> out;
    for (const std::string& t : Tokenize(text)) out.push_back(v.Intern(t));
    return out;
  };
  const auto reference = ids("the cat sat on the mat");
  const RougeScores partial = Rouge1(ids("the cat"), {reference});
  const RougeScores same = Rouge1(reference, {reference});
  // Clipped counts against two references: "the" matches twice in the
  // first, "dog" once in the second, "ran" nowhere.
  const RougeScores multi =
      Rouge1(ids("the the dog ran"), {ids("the cat and the dog"), ids("dog")});
  const bool ok = partial.recall == 2.0 / 6.0 && partial.precision == 1.0 &&
                  partial.f1 == 0.5 && same.recall == 1.0 &&
                  same.precision == 1.0 && same.f1 == 1.0 &&
                  multi.recall == 4.0 / 6.0 && multi.precision == 4.0 / 8.0;
  return {ok, Format("partial R %.4f P %.4f F %.4f", partial.recall,
                     partial.precision, partial.f1) +
                  Format(", identical R %.1f P %.1f F %.1f", same.recall,
                         same.precision, same.f1)};
}

std::string ReadAll(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int RunCli(const std::string& args) {
  const std::string cmd =
      std::string(LISTPRED_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

// 8. Byte-identical outputs from two pipeline runs with the same seed.
Outcome Determinism() {
  const fs::path root = fs::temp_directory_path() / "listpred-acceptance";
  fs::remove_all(root);
  const std::vector<std::string> outputs = {"model.json", "predict.json",
                                            "eval.tsv", "eval.json"};
  std::vector<std::vector<std::string>> runs;
  for (const std::string& run : {std::string("a"), std::string("b")}) {
    const fs::path dir = root / run;
    fs::create_directories(dir);
    const std::string d = dir.string();
    const bool ok =
        RunCli("gen --out " + d + "/data --clusters 20 --test-clusters 6 "
               "--seed 11") == 0 &&
        RunCli("train --train " + d + "/data/train --model " + d +
               "/model.json --budget 40 --iters 150 --seed 11") == 0 &&
        RunCli("predict --model " + d + "/model.json --input " + d +
               "/data/test --out " + d + "/predict.json") == 0 &&
        RunCli("eval --model " + d + "/model.json --test " + d +
               "/data/test --tsv " + d + "/eval.tsv --json " + d +
               "/eval.json") == 0;
    if (!ok) {
      fs::remove_all(root);
      return {false, "pipeline command failed in run " + run};
    }
    std::vector<std::string> contents;
    for (const std::string& name : outputs) {
      contents.push_back(ReadAll(dir / name));
    }
    runs.push_back(std::move(contents));
  }
  fs::remove_all(root);
  bool same = true;
  std::string detail;
  for (size_t i = 0; i < outputs.size(); ++i) {
    const bool equal = !runs[0][i].empty() && runs[0][i] == runs[1][i];
    same = same && equal;
    detail += (i ? ", " : "") + outputs[i] + (equal ? " identical" : " DIFFER");
  }
  return {same, detail};
}

struct Criterion {
  int number;
  const char* name;
  double limit_seconds;  // <= 0 means no limit
  std::function<Outcome()> run;
};

}  // namespace
}  // namespace listpred

int main() {
  using listpred::Criterion;
  const std::vector<Criterion> criteria = {
      {1, "bound suites", 120, listpred::BoundSuites},
      {2, "stochastic list oracle", 60, listpred::StochasticOracle},
      {3, "mixture guarantee frequency", 600, listpred::TheoremFrequency},
      {4, "regret and subgradients", 0, listpred::RegretAndGradients},
      {5, "realizable imitation", 300, listpred::RealizableImitation},
      {6, "list arithmetic", 0, listpred::AlgorithmArithmetic},
      {7, "rouge-1 fixtures", 0, listpred::RougeFixtures},
      {8, "pipeline determinism", 0, listpred::Determinism},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    listpred::Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(
                               std::chrono::steady_clock::now() - start)
                               .count();
    const bool in_time = c.limit_seconds <= 0 || seconds <= c.limit_seconds;
    const bool pass = outcome.pass && in_time;
    if (!pass) ++failures;
    std::printf("CRITERION %d %s: %s; %s (%.1fs%s)\n", c.number,
                pass ? "PASS" : "FAIL", c.name, outcome.detail.c_str(), seconds,
                in_time ? "" : ", over time limit");
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
