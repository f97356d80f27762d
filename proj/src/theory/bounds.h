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

#ifndef LISTPRED_THEORY_BOUNDS_H_
#define LISTPRED_THEORY_BOUNDS_H_

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "core/item.h"
#include "core/reward.h"
#include "json.hpp"

namespace listpred {

inline constexpr double kExactTolerance = 1e-9;
inline constexpr size_t kMaxBoundListItems = 12;

// One numerically evaluated inequality lhs >= rhs. `components` are the
// named terms lhs and rhs are assembled from.
struct BoundReport {
  std::string check;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  double tolerance = kExactTolerance;
  bool holds = false;
  std::vector<std::pair<std::string, double>> components;
  std::vector<std::string> notes;

  // Throws std::out_of_range for an unknown name.
  double component(const std::string& name) const;
  void Finish();
};

nlohmann::json BoundReportToJson(const BoundReport& report);

// f(A + B) - f(A) <= |B| (E_{s~U(B)} f(A + s) - f(A)).
// lhs = |B| (mean f(A + s) - f(A)), rhs = f(A + B) - f(A).
BoundReport Lemma1Gap(const RewardFunction& reward, std::span<const Item> a,
                      std::span<const Item> b);

// Randomized B (member kept w.p. 1/length):
// lhs = |B| E_{s~U(B)}[(f(A + s) - f(A)) / length(s)],
// rhs = E[f(A + B~)] - f(A).
BoundReport Corollary1Gap(const RewardFunction& reward,
                          std::span<const Item> a, std::span<const Item> b);

// lhs = f(A), rhs = (1 - alpha) E[f(B~)]
//   - sum_i [prod_{j>i} (1 - length(a_j)/|B|)] length(a_i) eps_i,
// alpha = exp(-length(A) / |B|). A note is attached when some
// length(a_j) > |B|, the regime the product bound does not cover.
BoundReport Lemma2Bound(const RewardFunction& reward, std::span<const Item> a,
                        std::span<const Item> b);

}  // namespace listpred

#endif  // LISTPRED_THEORY_BOUNDS_H_
