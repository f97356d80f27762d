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

#include "theory/bound_suite.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

#include "theory/stochastic_list.h"

namespace listpred {
namespace {

int UniformBetween(Rng& rng, int lo, int hi) {
  return lo + static_cast<int>(UniformIndex(rng, static_cast<uint64_t>(hi - lo + 1)));
}

std::vector<size_t> Shuffled(Rng& rng, size_t n) {
  std::vector<size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  for (size_t i = n; i > 1; --i) {
    std::swap(order[i - 1], order[UniformIndex(rng, i)]);
  }
  return order;
}

}  // namespace

bool MeetsLengthPrecondition(const BoundTrial& trial) {
  for (const Item& item : trial.a) {
    if (item.length > static_cast<int64_t>(trial.b.size())) return false;
  }
  return true;
}

BoundTrial RandomBoundTrial(Rng& rng, const BoundTrialSpec& spec) {
  if (spec.max_items < 1 || spec.num_concepts < 1 || spec.max_b < 1 ||
      spec.min_length < 1 || spec.max_length < spec.min_length ||
      spec.max_concepts_per_item < 1) {
    throw std::invalid_argument("invalid bound trial spec");
  }
  BoundTrial trial;
  std::map<int, double> universe;
  for (int c = 0; c < spec.num_concepts; ++c) {
    universe.emplace(c, 0.1 + UniformUnit(rng));
  }
  const int n = UniformBetween(rng, 1, spec.max_items);
  std::map<ItemId, std::vector<int>> covers;
  for (int i = 0; i < n; ++i) {
    Item item;
    item.id = i;
    item.length = UniformBetween(rng, spec.min_length, spec.max_length);
    const int count = UniformBetween(
        rng, 1, std::min(spec.max_concepts_per_item, spec.num_concepts));
    std::vector<size_t> order = Shuffled(rng, spec.num_concepts);
    std::vector<int> chosen;
    for (int k = 0; k < count; ++k) chosen.push_back(static_cast<int>(order[k]));
    std::sort(chosen.begin(), chosen.end());
    item.tokens.assign(chosen.begin(), chosen.end());
    covers.emplace(item.id, std::move(chosen));
    trial.items.push_back(std::move(item));
  }
  trial.reward = std::make_shared<CoverageReward>(universe, covers);

  // A and B are drawn independently, so they may share items.
  const size_t items = trial.items.size();
  const size_t a_size = UniformIndex(rng, std::min(spec.max_a, items) + 1);
  for (size_t i : Shuffled(rng, items)) {
    if (trial.a.size() == a_size) break;
    trial.a.push_back(trial.items[i]);
  }
  const size_t b_size = 1 + UniformIndex(rng, std::min(spec.max_b, items));
  for (size_t i : Shuffled(rng, items)) {
    if (trial.b.size() == b_size) break;
    trial.b.push_back(trial.items[i]);
  }
  return trial;
}

std::string BoundCheckName(BoundCheck check) {
  switch (check) {
    case BoundCheck::kLemma1:
      return "lemma1";
    case BoundCheck::kCorollary1:
      return "corollary1";
    case BoundCheck::kLemma2:
      return "lemma2";
  }
  return "unknown";
}

BoundReport RunBoundCheck(BoundCheck check, const BoundTrial& trial) {
  switch (check) {
    case BoundCheck::kLemma1:
      return Lemma1Gap(*trial.reward, trial.a, trial.b);
    case BoundCheck::kCorollary1:
      return Corollary1Gap(*trial.reward, trial.a, trial.b);
    case BoundCheck::kLemma2:
      return Lemma2Bound(*trial.reward, trial.a, trial.b);
  }
  throw std::invalid_argument("unknown bound check");
}

BoundSuiteReport RunBoundSuite(BoundCheck check, int trials, uint64_t seed,
                               const BoundTrialSpec& spec) {
  if (trials < 1) throw std::invalid_argument("trials must be positive");
  Rng rng(seed);
  BoundSuiteReport report;
  report.check = BoundCheckName(check);
  for (int t = 0; t < trials; ++t) {
    BoundTrial trial = RandomBoundTrial(rng, spec);
    if (check == BoundCheck::kLemma2 && spec.lemma2_length_precondition) {
      while (!MeetsLengthPrecondition(trial)) {
        ++report.redrawn;
        trial = RandomBoundTrial(rng, spec);
      }
    }
    BoundReport result = RunBoundCheck(check, trial);
    ++report.trials;
    if (result.holds) ++report.holds_count;
    if (check == BoundCheck::kLemma2) {
      if (result.component("length_precondition") == 0.0) {
        ++report.precondition_failures;
      } else if (!result.holds) {
        ++report.failures_with_precondition;
      }
    }
    if (t == 0 || result.slack < report.worst.slack) {
      report.worst = std::move(result);
    }
  }
  return report;
}

nlohmann::json BoundSuiteToJson(const BoundSuiteReport& report) {
  nlohmann::json j;
  j["check"] = report.check;
  j["lhs"] = report.worst.lhs;
  j["rhs"] = report.worst.rhs;
  j["slack"] = report.worst.slack;
  j["holds"] = report.all_hold();
  j["trials"] = report.trials;
  j["holds_count"] = report.holds_count;
  j["frequency"] = report.trials > 0 ? static_cast<double>(report.holds_count) /
                                           report.trials
                                     : 0.0;
  if (report.check == "lemma2") {
    j["length_precondition_failures"] = report.precondition_failures;
    j["failures_with_precondition"] = report.failures_with_precondition;
    j["redrawn"] = report.redrawn;
  }
  return j;
}

StochasticAgreementReport RunStochasticAgreement(int lists, size_t list_items,
                                                 int64_t samples,
                                                 uint64_t seed,
                                                 double tolerance) {
  if (lists < 1 || list_items < 1) {
    throw std::invalid_argument("need at least one nonempty list");
  }
  Rng rng(seed);
  BoundTrialSpec spec;
  spec.max_items = static_cast<int>(list_items);
  StochasticAgreementReport report;
  report.samples = samples;
  report.tolerance = tolerance;
  for (int i = 0; i < lists; ++i) {
    // Redraw until the pool has exactly list_items items.
    BoundTrial trial;
    do {
      trial = RandomBoundTrial(rng, spec);
    } while (trial.items.size() != list_items);
    const auto list = StochasticListSpec::FromItems(trial.items);
    const double exact =
        StochasticListValue(list, *trial.reward, ExpectationMode::Exact())
            .value;
    const StochasticEstimate mc = StochasticListValue(
        list, *trial.reward, ExpectationMode::MonteCarlo(samples, rng()));
    const double diff = std::abs(exact - mc.value);
    report.max_abs_difference = std::max(report.max_abs_difference, diff);
    if (mc.standard_error > 0.0) {
      report.max_sigma = std::max(report.max_sigma, diff / mc.standard_error);
    }
    ++report.lists;
  }
  report.pass = report.max_abs_difference <= tolerance;
  return report;
}

nlohmann::json StochasticAgreementToJson(
    const StochasticAgreementReport& report) {
  return {{"check", "stochastic_list"},
          {"lhs", report.tolerance},
          {"rhs", report.max_abs_difference},
          {"slack", report.tolerance - report.max_abs_difference},
          {"holds", report.pass},
          {"lists", report.lists},
          {"samples", report.samples},
          {"max_sigma", report.max_sigma}};
}

}  // namespace listpred
