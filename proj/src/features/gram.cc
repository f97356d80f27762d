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

#include "features/gram.h"

#include <algorithm>
#include <vector>

#include <Eigen/Cholesky>
#include <Eigen/Core>

namespace listpred {
namespace {

constexpr double kJitter = 1e-12;
// Squared Cholesky pivots below this are treated as exact linear dependence.
constexpr double kSingularPivot = 1e-10;

}  // namespace

double GramDeterminant(std::span<const SparseVector* const> vectors) {
  const Eigen::Index n = static_cast<Eigen::Index>(vectors.size());
  if (n == 0) return 1.0;
  Eigen::MatrixXd gram(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j <= i; ++j) {
      const double value = Dot(*vectors[i], *vectors[j]);
      gram(i, j) = value;
      gram(j, i) = value;
    }
    gram(i, i) += kJitter;
  }
  Eigen::LLT<Eigen::MatrixXd> llt(gram);
  if (llt.info() != Eigen::Success) return 0.0;
  const Eigen::MatrixXd factor = llt.matrixL();
  double det = 1.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    const double pivot = factor(i, i) * factor(i, i);
    if (pivot <= kSingularPivot) return 0.0;
    det *= pivot;
  }
  return std::clamp(det, 0.0, 1.0);
}

double GramDetSimilarity(const TfIdfModel& model, const ItemList& list,
                         const Item& item) {
  std::vector<const SparseVector*> vectors;
  vectors.reserve(list.size() + 1);
  for (ItemId id : list.ids()) vectors.push_back(&model.ItemVector(id));
  vectors.push_back(&model.ItemVector(item.id));
  return GramDeterminant(vectors);
}

}  // namespace listpred
