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

#include "theory/bounds.h"

#include <cmath>
#include <stdexcept>

#include "theory/stochastic_list.h"

namespace listpred {
namespace {

std::vector<ItemId> Ids(std::span<const Item> items) {
  std::vector<ItemId> ids;
  ids.reserve(items.size());
  for (const Item& item : items) ids.push_back(item.id);
  return ids;
}

double WithItem(const RewardFunction& reward, std::vector<ItemId> base,
                ItemId extra) {
  base.push_back(extra);
  return reward.Evaluate(base);
}

void CheckB(std::span<const Item> b, bool exact) {
  if (b.empty()) throw std::invalid_argument("B must be nonempty");
  if (exact && b.size() > kMaxBoundListItems) {
    throw std::invalid_argument("B limited to " +
                                std::to_string(kMaxBoundListItems) +
                                " items for exact enumeration");
  }
}

// E_{s~U(B)}[(f(A + s) - f(A)) / length(s)].
double MeanNormalizedGain(const RewardFunction& reward,
                          const std::vector<ItemId>& a, double f_a,
                          std::span<const Item> b) {
  double total = 0.0;
  for (const Item& s : b) {
    total += (WithItem(reward, a, s.id) - f_a) / static_cast<double>(s.length);
  }
  return total / static_cast<double>(b.size());
}

}  // namespace

double BoundReport::component(const std::string& name) const {
  for (const auto& [key, value] : components) {
    if (key == name) return value;
  }
  throw std::out_of_range("no component '" + name + "' in " + check);
}

void BoundReport::Finish() {
  slack = lhs - rhs;
  holds = slack >= -tolerance;
}

nlohmann::json BoundReportToJson(const BoundReport& report) {
  nlohmann::json j;
  j["check"] = report.check;
  j["lhs"] = report.lhs;
  j["rhs"] = report.rhs;
  j["slack"] = report.slack;
  j["holds"] = report.holds;
  nlohmann::json components = nlohmann::json::object();
  for (const auto& [key, value] : report.components) components[key] = value;
  j["components"] = components;
  if (!report.notes.empty()) j["notes"] = report.notes;
  return j;
}

BoundReport Lemma1Gap(const RewardFunction& reward, std::span<const Item> a,
                      std::span<const Item> b) {
  CheckB(b, false);
  const std::vector<ItemId> a_ids = Ids(a);
  const double f_a = reward.Evaluate(a_ids);
  double mean = 0.0;
  for (const Item& s : b) mean += WithItem(reward, a_ids, s.id);
  mean /= static_cast<double>(b.size());
  std::vector<ItemId> ab = a_ids;
  for (const Item& s : b) ab.push_back(s.id);
  const double f_ab = reward.Evaluate(ab);
  const double size = static_cast<double>(b.size());

  BoundReport report;
  report.check = "lemma1";
  report.components = {{"b_size", size},
                       {"mean_f_a_plus_s", mean},
                       {"f_a", f_a},
                       {"f_a_plus_b", f_ab}};
  report.lhs = size * (mean - f_a);
  report.rhs = f_ab - f_a;
  report.Finish();
  return report;
}

BoundReport Corollary1Gap(const RewardFunction& reward,
                          std::span<const Item> a, std::span<const Item> b) {
  CheckB(b, true);
  const std::vector<ItemId> a_ids = Ids(a);
  const double f_a = reward.Evaluate(a_ids);
  const double mean_gain = MeanNormalizedGain(reward, a_ids, f_a, b);
  const double expected =
      StochasticListValue(StochasticListSpec::FromItems(b), reward,
                          ExpectationMode::Exact(), a_ids)
          .value;
  const double size = static_cast<double>(b.size());

  BoundReport report;
  report.check = "corollary1";
  report.components = {{"b_size", size},
                       {"mean_normalized_gain", mean_gain},
                       {"expected_f_a_plus_random_b", expected},
                       {"f_a", f_a}};
  report.lhs = size * mean_gain;
  report.rhs = expected - f_a;
  report.Finish();
  return report;
}

BoundReport Lemma2Bound(const RewardFunction& reward, std::span<const Item> a,
                        std::span<const Item> b) {
  CheckB(b, true);
  const double size = static_cast<double>(b.size());
  int64_t total_length = 0;
  bool precondition = true;
  for (const Item& item : a) {
    total_length += item.length;
    if (static_cast<double>(item.length) > size) precondition = false;
  }

  // eps_j for j = 1..|A| along the prefixes of A.
  std::vector<double> eps(a.size());
  std::vector<ItemId> prefix;
  double f_prefix = reward.Evaluate(prefix);
  for (size_t j = 0; j < a.size(); ++j) {
    const double mean_gain = MeanNormalizedGain(reward, prefix, f_prefix, b);
    prefix.push_back(a[j].id);
    const double f_next = reward.Evaluate(prefix);
    eps[j] = mean_gain -
             (f_next - f_prefix) / static_cast<double>(a[j].length);
    f_prefix = f_next;
  }
  const double f_a = f_prefix;

  double error_sum = 0.0;
  for (size_t i = 0; i < a.size(); ++i) {
    double product = 1.0;
    for (size_t j = i + 1; j < a.size(); ++j) {
      product *= 1.0 - static_cast<double>(a[j].length) / size;
    }
    error_sum += product * static_cast<double>(a[i].length) * eps[i];
  }
  const double alpha = std::exp(-static_cast<double>(total_length) / size);
  const double expected_b =
      StochasticListValue(StochasticListSpec::FromItems(b), reward,
                          ExpectationMode::Exact())
          .value;

  BoundReport report;
  report.check = "lemma2";
  report.components = {{"f_a", f_a},
                       {"one_minus_alpha", 1.0 - alpha},
                       {"expected_f_random_b", expected_b},
                       {"weighted_error_sum", error_sum},
                       {"length_precondition", precondition ? 1.0 : 0.0}};
  if (!precondition) {
    report.notes.push_back(
        "some length(a_j) exceeds |B|; product factors leave [0, 1]");
  }
  report.lhs = f_a;
  report.rhs = (1.0 - alpha) * expected_b - error_sum;
  report.Finish();
  return report;
}

}  // namespace listpred
