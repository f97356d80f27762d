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

#ifndef LISTPRED_FEATURES_TFIDF_H_
#define LISTPRED_FEATURES_TFIDF_H_

#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "core/item.h"

namespace listpred {

// Sparse vector with entries sorted by column.
struct SparseVector {
  std::vector<std::pair<int, double>> entries;

  double SquaredNorm() const;
};

double Dot(const SparseVector& a, const SparseVector& b);

// tf-idf over one corpus of items (typically one document cluster).
// idf(t) = ln(N / df(t)); item vectors are raw counts times idf, scaled to
// unit L2 norm, or left zero when every weight vanishes.
class TfIdfModel {
 public:
  // `corpus[i]` holds the tokens of item `ids[i]`. Throws on an empty corpus
  // or mismatched sizes.
  static TfIdfModel Build(std::span<const std::vector<TokenId>> corpus,
                          std::span<const ItemId> ids);

  // Vector of a corpus item; throws std::out_of_range for unknown ids.
  const SparseVector& ItemVector(ItemId id) const;
  // Unit-normalized tf-idf vector of an arbitrary token bag.
  SparseVector Vectorize(std::span<const TokenId> tokens) const;

  // 0 for tokens outside the vocabulary.
  double Idf(TokenId token) const;
  // Normalized mean of all item vectors.
  const SparseVector& Centroid() const { return centroid_; }

  size_t vocabulary_size() const { return idf_.size(); }
  size_t num_items() const { return vectors_.size(); }

 private:
  std::unordered_map<TokenId, int> column_;
  std::vector<double> idf_;
  std::unordered_map<ItemId, SparseVector> vectors_;
  SparseVector centroid_;
};

}  // namespace listpred

#endif  // LISTPRED_FEATURES_TFIDF_H_
