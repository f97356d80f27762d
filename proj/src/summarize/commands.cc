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

#include "summarize/commands.h"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "core/brute_force.h"
#include "core/greedy.h"
#include "core/vocabulary.h"
#include "features/feature_map.h"
#include "json.hpp"
#include "listpred/evaluate.h"
#include "listpred/examples.h"
#include "listpred/model_io.h"
#include "listpred/train.h"
#include "summarize/cluster.h"
#include "summarize/rouge.h"
#include "summarize/run_config.h"
#include "summarize/synthetic.h"
#include "theory/bound_suite.h"
#include "theory/surrogate_gap.h"
#include "theory/theorem_check.h"

namespace listpred {
namespace {

using nlohmann::json;

// Largest instance size for which eval adds the brute-force oracle row.
constexpr size_t kEvalBruteForceItems = 16;

void WriteText(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  const std::filesystem::path p(path);
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream out(p, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

json ReadJson(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    json j;
    in >> j;
    return j;
  } catch (const json::exception& e) {
    throw InputError(path + ": malformed JSON: " + e.what());
  }
}

std::vector<IngestedCluster> IngestPath(const std::string& path,
                                        Vocabulary& vocabulary,
                                        bool require_references) {
  if (path.empty()) throw InputError("missing input path");
  IngestOptions options;
  options.require_references = require_references;
  if (std::filesystem::is_regular_file(path)) {
    std::vector<IngestedCluster> one;
    one.push_back(IngestFile(path, vocabulary, options));
    return one;
  }
  return IngestDirectory(path, vocabulary, options);
}

std::vector<ProblemInstance> Instances(
    const std::vector<IngestedCluster>& clusters) {
  std::vector<ProblemInstance> out;
  out.reserve(clusters.size());
  for (const IngestedCluster& c : clusters) out.push_back(c.instance);
  return out;
}

// Tokens of the training corpus, ordered by their text.
std::vector<TokenId> CorpusVocabulary(
    const std::vector<IngestedCluster>& clusters,
    const Vocabulary& vocabulary) {
  std::vector<TokenId> ids;
  for (const IngestedCluster& c : clusters) {
    for (const Item& item : c.instance.items) {
      ids.insert(ids.end(), item.tokens.begin(), item.tokens.end());
    }
  }
  std::sort(ids.begin(), ids.end(), [&](TokenId a, TokenId b) {
    return vocabulary.Name(a) < vocabulary.Name(b);
  });
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

// Reading order: document, then sentence position.
std::vector<ItemId> DocumentOrder(const ItemList& list,
                                  const ProblemInstance& instance) {
  std::vector<ItemId> ids = list.ids();
  std::sort(ids.begin(), ids.end(), [&](ItemId a, ItemId b) {
    const Item& x = instance.item(a);
    const Item& y = instance.item(b);
    if (x.doc_index != y.doc_index) return x.doc_index < y.doc_index;
    return x.position < y.position;
  });
  return ids;
}

std::string Fixed(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.6f", value);
  return buffer;
}

// ---------------------------------------------------------------- gen

struct GenArgs {
  std::string out;
  SyntheticSpec spec;
  int test_clusters = 0;
};

int RunGen(const GenArgs& args) {
  if (args.out.empty()) throw InputError("gen needs --out");
  if (args.test_clusters < 0) throw InputError("--test-clusters must be >= 0");
  SyntheticSpec spec = args.spec;
  const int train = spec.num_clusters;
  spec.num_clusters = train + args.test_clusters;
  SyntheticCorpus corpus;
  try {
    corpus = GenerateSynthetic(spec);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  const std::filesystem::path out(args.out);
  if (args.test_clusters > 0) {
    std::vector<ClusterDocument> head(corpus.clusters.begin(),
                                      corpus.clusters.begin() + train);
    std::vector<ClusterDocument> tail(corpus.clusters.begin() + train,
                                      corpus.clusters.end());
    WriteClusters(head, out / "train");
    WriteClusters(tail, out / "test");
  } else {
    WriteClusters(corpus.clusters, out);
  }
  if (spec.realizable) {
    WriteText((out / "planted.weights").string(),
              PlantedWeightsToJson(corpus, spec).dump(2) + "\n");
  }
  std::cerr << "wrote " << corpus.clusters.size() << " clusters to "
            << args.out << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------- train

struct TrainArgs {
  std::string config_path;
  RunConfig flags;
  CLI::App* command = nullptr;
};

bool Given(const CLI::App* app, const std::string& name) {
  return app->count(name) > 0;
}

RunConfig ResolveTrainConfig(const TrainArgs& args) {
  RunConfig config;
  if (!args.config_path.empty()) {
    try {
      config = LoadRunConfig(args.config_path);
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
  }
  const CLI::App* app = args.command;
  const RunConfig& f = args.flags;
  if (Given(app, "--mode")) config.train.mode = f.train.mode;
  if (Given(app, "--learner")) config.train.learner = f.train.learner;
  if (Given(app, "--budget")) config.train.budget = f.train.budget;
  if (Given(app, "--iters")) config.train.iterations = f.train.iterations;
  if (Given(app, "--seed")) config.train.seed = f.train.seed;
  if (Given(app, "--eta")) config.train.eta0 = f.train.eta0;
  if (Given(app, "--rwm-eta")) config.train.rwm_eta = f.train.rwm_eta;
  if (Given(app, "--half-budget-filter")) {
    config.train.half_budget_filter = f.train.half_budget_filter;
  }
  if (Given(app, "--positions")) {
    config.train.max_positions = f.train.max_positions;
  }
  if (Given(app, "--train")) config.train_dir = f.train_dir;
  if (Given(app, "--model")) config.model_out = f.model_out;
  if (Given(app, "--features")) config.features = f.features;
  if (Given(app, "--empty-distance")) {
    config.empty_list_distance = f.empty_list_distance;
  }
  try {
    config.Validate();
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  if (config.train_dir.empty()) throw InputError("train needs --train");
  if (config.model_out.empty()) throw InputError("train needs --model");
  return config;
}

int RunTrain(const TrainArgs& args) {
  RunConfig config = ResolveTrainConfig(args);
  Vocabulary vocabulary;
  const auto clusters = IngestPath(config.train_dir, vocabulary, true);
  const std::vector<ProblemInstance> instances = Instances(clusters);

  std::unique_ptr<FeatureMap> features;
  if (config.features == "novelty") {
    features = std::make_unique<NoveltyFeatureMap>(
        CorpusVocabulary(clusters, vocabulary));
  } else {
    features = std::make_unique<SummaryFeatureMap>(config.train.budget,
                                                   config.empty_list_distance);
  }

  TrainConfig train = config.train;
  if (train.mode == Mode::kConseqOpt && train.max_positions == 0) {
    // One position per item of the longest clairvoyant list.
    GreedyOptions greedy;
    greedy.half_budget_filter = train.half_budget_filter;
    for (const ProblemInstance& x : instances) {
      const ItemList list =
          GreedyClairvoyant(*x.reward, x.items, train.budget, greedy);
      train.max_positions =
          std::max(train.max_positions, static_cast<int>(list.size()));
    }
    train.max_positions = std::max(train.max_positions, 1);
    config.train.max_positions = train.max_positions;
  }
  if (train.learner == LearnerKind::kRwm) {
    train.policy_class = CoordinatePolicyClass(features->dimension());
  }
  std::cerr << "config " << RunConfigToJson(config).dump() << "\n";

  PolicyBundle bundle;
  try {
    bundle = Train(instances, *features, train);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  WriteText(config.model_out,
            ModelToJson(bundle, *features, vocabulary).dump(2) + "\n");
  const auto& rounds = bundle.trace.rounds;
  double mean_value = 0.0;
  for (const TraceRound& r : rounds) mean_value += r.list_value;
  mean_value /= static_cast<double>(rounds.size());
  std::cerr << "trained " << rounds.size() << " rounds, mean list value "
            << Fixed(mean_value) << ", model " << config.model_out << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------- predict

struct PredictArgs {
  std::string model;
  std::string input;
  std::string out;
};

struct LoadedRun {
  Vocabulary vocabulary;
  LoadedModel model;
};

std::unique_ptr<LoadedRun> LoadModel(const std::string& path) {
  auto run = std::make_unique<LoadedRun>();
  const json j = ReadJson(path);
  try {
    run->model = ModelFromJson(j, run->vocabulary);
  } catch (const std::invalid_argument& e) {
    throw InputError(path + ": " + e.what());
  }
  return run;
}

ItemList Predict(const LoadedModel& model, const ProblemInstance& instance) {
  ConstructOptions options;
  options.budget = model.budget;
  options.half_budget_filter = model.half_budget_filter;
  return ConstructList(model.policy, instance, *model.features, options,
                       nullptr);
}

int RunPredict(const PredictArgs& args) {
  if (args.model.empty()) throw InputError("predict needs --model");
  auto run = LoadModel(args.model);
  const auto clusters = IngestPath(args.input, run->vocabulary, false);
  json out = json::object();
  out["budget"] = run->model.budget;
  json list = json::array();
  for (const IngestedCluster& c : clusters) {
    const ItemList selected = Predict(run->model, c.instance);
    if (selected.total_length() > run->model.budget) {
      throw std::logic_error("prediction exceeds the budget");
    }
    std::vector<std::string> sentence_ids;
    std::string summary;
    for (ItemId id : DocumentOrder(selected, c.instance)) {
      const Item& item = c.instance.item(id);
      const SentenceRecord& s =
          c.source.documents[item.doc_index].sentences[item.position];
      sentence_ids.push_back(s.sentence_id);
      if (!summary.empty()) summary += ' ';
      summary += s.text;
    }
    list.push_back({{"cluster_id", c.source.cluster_id},
                    {"sentence_ids", sentence_ids},
                    {"bytes", selected.total_length()},
                    {"summary", summary}});
  }
  out["clusters"] = list;
  WriteText(args.out, out.dump(2) + "\n");
  return kExitOk;
}

// ---------------------------------------------------------------- eval

struct EvalArgs {
  std::string model;
  std::string test;
  std::string tsv;
  std::string json_out;
};

struct SystemScores {
  std::string system;
  RougeScores mean;
  double mean_bytes = 0.0;
  int clusters = 0;

  void Add(const RougeScores& s, int64_t bytes) {
    mean.recall += s.recall;
    mean.precision += s.precision;
    mean.f1 += s.f1;
    mean_bytes += static_cast<double>(bytes);
    ++clusters;
  }
  void Finish() {
    if (clusters == 0) return;
    const double n = clusters;
    mean.recall /= n;
    mean.precision /= n;
    mean.f1 /= n;
    mean_bytes /= n;
  }
};

int RunEval(const EvalArgs& args) {
  if (args.model.empty()) throw InputError("eval needs --model");
  auto run = LoadModel(args.model);
  const auto clusters = IngestPath(args.test, run->vocabulary, true);
  const int64_t budget = run->model.budget;

  bool brute_force = true;
  for (const IngestedCluster& c : clusters) {
    if (c.instance.items.size() > kEvalBruteForceItems) brute_force = false;
  }
  std::vector<SystemScores> systems(brute_force ? 3 : 2);
  systems[0].system = "model";
  systems[1].system = "greedy_oracle";
  if (brute_force) systems[2].system = "brute_force_oracle";

  GreedyOptions greedy;
  greedy.half_budget_filter = run->model.half_budget_filter;
  for (const IngestedCluster& c : clusters) {
    const ProblemInstance& x = c.instance;
    const ItemList model_list = Predict(run->model, x);
    systems[0].Add(Rouge1(model_list, x, c.references),
                   model_list.total_length());
    const ItemList oracle = GreedyClairvoyant(*x.reward, x.items, budget, greedy);
    systems[1].Add(Rouge1(oracle, x, c.references), oracle.total_length());
    if (brute_force) {
      const OptimalSubset best = BruteForceOptimal(*x.reward, x.items, budget);
      systems[2].Add(Rouge1(best.list, x, c.references),
                     best.list.total_length());
    }
  }

  std::string tsv = "system\trouge1f\trouge1p\trouge1r\tmean_bytes\n";
  json rows = json::array();
  for (SystemScores& s : systems) {
    s.Finish();
    tsv += s.system + "\t" + Fixed(s.mean.f1) + "\t" + Fixed(s.mean.precision) +
           "\t" + Fixed(s.mean.recall) + "\t" + Fixed(s.mean_bytes) + "\n";
    rows.push_back({{"system", s.system},
                    {"rouge1f", s.mean.f1},
                    {"rouge1p", s.mean.precision},
                    {"rouge1r", s.mean.recall},
                    {"mean_bytes", s.mean_bytes}});
  }
  WriteText(args.tsv, tsv);
  if (!args.json_out.empty()) {
    json report = {{"budget", budget},
                   {"clusters", clusters.size()},
                   {"systems", rows}};
    WriteText(args.json_out, report.dump(2) + "\n");
  }
  return kExitOk;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  std::string check = "all";
  int trials = 1000;
  uint64_t seed = 1;
  bool lemma2_any_length = false;
  int repetitions = 50;
  int iterations = 500;
  double delta = 0.1;
  std::string out;
};

json VerifyTheorem1(const VerifyArgs& args) {
  CoverageDistributionSpec spec;
  spec.seed = args.seed;
  const CoverageDistribution dist = MakeCoverageDistribution(spec);
  const NoveltyFeatureMap features(dist.vocabulary);
  const PolicyClass policies = CoveragePolicyClass(dist, 4, args.seed);
  Theorem1Config config;
  config.iterations = args.iterations;
  config.repetitions = args.repetitions;
  config.delta = args.delta;
  config.seed = args.seed;
  return Theorem1ReportToJson(
      CheckTheorem1(dist.states, features, policies, config));
}

// Gap between the hinge surrogate and the cost-sensitive loss for an SCP
// ranker trained on a realizable synthetic corpus.
json VerifySurrogate(const VerifyArgs& args) {
  constexpr double kThreshold = 0.05;
  SyntheticSpec spec;
  spec.realizable = true;
  spec.num_clusters = 40;
  spec.seed = args.seed;
  const SyntheticCorpus corpus = GenerateSynthetic(spec);
  Vocabulary vocabulary;
  std::vector<ProblemInstance> instances;
  for (const ClusterDocument& c : corpus.clusters) {
    instances.push_back(BuildCluster(c, vocabulary, {}).instance);
  }
  std::vector<TokenId> tokens;
  for (const std::string& name : corpus.vocabulary) {
    tokens.push_back(vocabulary.Intern(name));
  }
  const NoveltyFeatureMap features(tokens);
  TrainConfig config;
  config.budget = 3 * spec.max_sentence_bytes();
  config.iterations = args.iterations;
  config.seed = args.seed;
  std::vector<std::vector<CostSensitiveExample>> examples;
  const PolicyBundle bundle =
      Train(instances, features, config,
            [&](int, const ProblemInstance&, const ItemList&,
                const std::vector<CostSensitiveExample>& e) {
              examples.push_back(e);
            });
  const SurrogateGapEstimate gap =
      EstimateSurrogateGap(bundle, examples, args.seed);
  return {{"check", "surrogate_gap"},
          {"lhs", kThreshold},
          {"rhs", gap.gap},
          {"slack", kThreshold - gap.gap},
          {"holds", gap.gap <= kThreshold},
          {"estimate", gap.estimate},
          {"comparators", gap.comparators}};
}

int RunVerify(const VerifyArgs& args) {
  static const std::vector<std::string> kChecks = {
      "lemma1", "corollary1", "lemma2", "stochastic", "theorem1", "surrogate"};
  if (args.check != "all" &&
      std::find(kChecks.begin(), kChecks.end(), args.check) == kChecks.end()) {
    throw InputError("unknown check '" + args.check + "'");
  }
  if (args.trials < 1 || args.repetitions < 1 || args.iterations < 1 ||
      !(args.delta > 0.0 && args.delta < 1.0)) {
    throw InputError("verify needs positive trials, reps, iters and delta in (0, 1)");
  }
  json reports = json::array();
  bool ok = true;
  const auto wanted = [&](const std::string& name) {
    return args.check == "all" || args.check == name;
  };
  const std::vector<std::pair<std::string, BoundCheck>> exact = {
      {"lemma1", BoundCheck::kLemma1},
      {"corollary1", BoundCheck::kCorollary1},
      {"lemma2", BoundCheck::kLemma2}};
  for (const auto& [name, check] : exact) {
    if (!wanted(name)) continue;
    BoundTrialSpec spec;
    spec.lemma2_length_precondition = !args.lemma2_any_length;
    const BoundSuiteReport r =
        RunBoundSuite(check, args.trials, args.seed, spec);
    ok = ok && r.all_hold();
    reports.push_back(BoundSuiteToJson(r));
  }
  if (wanted("stochastic")) {
    const StochasticAgreementReport r =
        RunStochasticAgreement(20, 5, 100000, args.seed);
    ok = ok && r.pass;
    reports.push_back(StochasticAgreementToJson(r));
  }
  if (wanted("theorem1")) {
    json r = VerifyTheorem1(args);
    ok = ok && r["holds"].get<bool>();
    reports.push_back(std::move(r));
  }
  if (wanted("surrogate")) {
    json r = VerifySurrogate(args);
    ok = ok && r["holds"].get<bool>();
    reports.push_back(std::move(r));
  }
  WriteText(args.out, json{{"reports", reports}, {"all_hold", ok}}.dump(2) +
                          "\n");
  return ok ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int RunCli(int argc, char** argv) {
  CLI::App app{"Budgeted submodular list prediction"};
  app.name("listpred");
  app.require_subcommand(1);

  GenArgs gen;
  CLI::App* gen_cmd = app.add_subcommand("gen", "Write a synthetic corpus");
  gen_cmd->add_option("--out", gen.out, "Output directory")->required();
  gen_cmd->add_option("--clusters", gen.spec.num_clusters, "Training clusters");
  gen_cmd->add_option("--test-clusters", gen.test_clusters,
                      "Held-out clusters (splits output into train/ and test/)");
  gen_cmd->add_option("--docs", gen.spec.docs_per_cluster, "Documents per cluster");
  gen_cmd->add_option("--sentences", gen.spec.sentences_per_doc,
                      "Sentences per document");
  gen_cmd->add_option("--vocab", gen.spec.vocabulary_size, "Vocabulary size");
  gen_cmd->add_option("--min-tokens", gen.spec.min_tokens, "Min tokens per sentence");
  gen_cmd->add_option("--max-tokens", gen.spec.max_tokens, "Max tokens per sentence");
  gen_cmd->add_option("--references", gen.spec.num_references,
                      "Reference summaries per cluster");
  gen_cmd->add_flag("--realizable", gen.spec.realizable,
                    "Plant a linearly realizable reward");
  gen_cmd->add_option("--seed", gen.spec.seed, "Random seed");

  TrainArgs train;
  std::string mode_name = "scp";
  std::string learner_name = "ranker";
  CLI::App* train_cmd = app.add_subcommand("train", "Train a list policy");
  train.command = train_cmd;
  train_cmd->add_option("--config", train.config_path, "JSON run config");
  train_cmd->add_option("--train", train.flags.train_dir, "Training clusters");
  train_cmd->add_option("--model", train.flags.model_out, "Model output path");
  train_cmd->add_option("--mode", mode_name, "scp or conseqopt")
      ->check(CLI::IsMember({"scp", "conseqopt"}));
  train_cmd->add_option("--learner", learner_name, "ranker or rwm")
      ->check(CLI::IsMember({"ranker", "rwm"}));
  train_cmd->add_option("--budget", train.flags.train.budget, "Budget in bytes");
  train_cmd->add_option("--iters", train.flags.train.iterations, "Rounds T");
  train_cmd->add_option("--seed", train.flags.train.seed, "Random seed");
  train_cmd->add_option("--eta", train.flags.train.eta0, "Ranker step size");
  train_cmd->add_option("--rwm-eta", train.flags.train.rwm_eta,
                        "RWM learning rate (0 = default)");
  train_cmd->add_option("--positions", train.flags.train.max_positions,
                        "CONSEQOPT list length (0 = from data)");
  train_cmd->add_flag("--half-budget-filter",
                      train.flags.train.half_budget_filter,
                      "Drop items longer than half the budget");
  train_cmd->add_option("--features", train.flags.features, "summary or novelty")
      ->check(CLI::IsMember({"summary", "novelty"}));
  train_cmd->add_option("--empty-distance", train.flags.empty_list_distance,
                        "Diversity feature value for an empty list");

  PredictArgs predict;
  CLI::App* predict_cmd =
      app.add_subcommand("predict", "Select sentences for clusters");
  predict_cmd->add_option("--model", predict.model, "Model file")->required();
  predict_cmd->add_option("--input", predict.input, "Cluster file or directory")
      ->required();
  predict_cmd->add_option("--out", predict.out, "Output JSON (default stdout)");

  EvalArgs eval;
  CLI::App* eval_cmd = app.add_subcommand("eval", "ROUGE-1 report");
  eval_cmd->add_option("--model", eval.model, "Model file")->required();
  eval_cmd->add_option("--test", eval.test, "Cluster file or directory")
      ->required();
  eval_cmd->add_option("--tsv", eval.tsv, "TSV output (default stdout)");
  eval_cmd->add_option("--json", eval.json_out, "JSON output");

  VerifyArgs verify;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "Numerical bound certification");
  verify_cmd->add_option("--check", verify.check,
                         "all, lemma1, corollary1, lemma2, stochastic, "
                         "theorem1 or surrogate");
  verify_cmd->add_option("--trials", verify.trials, "Randomized trials per lemma");
  verify_cmd->add_option("--seed", verify.seed, "Random seed");
  verify_cmd->add_flag("--lemma2-any-length", verify.lemma2_any_length,
                       "Also draw Lemma 2 trials with length(a_j) > |B|");
  verify_cmd->add_option("--reps", verify.repetitions, "Theorem repetitions");
  verify_cmd->add_option("--iters", verify.iterations, "Training rounds T");
  verify_cmd->add_option("--delta", verify.delta, "Failure probability");
  verify_cmd->add_option("--out", verify.out, "Output JSON (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kExitInputError;
  }

  try {
    if (*gen_cmd) return RunGen(gen);
    if (*train_cmd) {
      train.flags.train.mode = ParseMode(mode_name);
      train.flags.train.learner = ParseLearner(learner_name);
      return RunTrain(train);
    }
    if (*predict_cmd) return RunPredict(predict);
    if (*eval_cmd) return RunEval(eval);
    if (*verify_cmd) return RunVerify(verify);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  std::cerr << app.help();
  return kExitInputError;
}

}  // namespace listpred
