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

#include "features/tfidf.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace listpred {
namespace {

void Normalize(SparseVector& v) {
  const double norm = std::sqrt(v.SquaredNorm());
  if (norm > 0.0) {
    for (auto& [column, value] : v.entries) value /= norm;
  } else {
    v.entries.clear();
  }
}

}  // namespace

double SparseVector::SquaredNorm() const {
  double total = 0.0;
  for (const auto& [column, value] : entries) total += value * value;
  return total;
}

double Dot(const SparseVector& a, const SparseVector& b) {
  double total = 0.0;
  auto i = a.entries.begin();
  auto j = b.entries.begin();
  while (i != a.entries.end() && j != b.entries.end()) {
    if (i->first < j->first) {
      ++i;
    } else if (j->first < i->first) {
      ++j;
    } else {
      total += i->second * j->second;
      ++i;
      ++j;
    }
  }
  return total;
}

TfIdfModel TfIdfModel::Build(std::span<const std::vector<TokenId>> corpus,
                             std::span<const ItemId> ids) {
  if (corpus.empty()) throw std::invalid_argument("tf-idf: empty corpus");
  if (corpus.size() != ids.size()) {
    throw std::invalid_argument("tf-idf: corpus and id counts differ");
  }
  TfIdfModel model;
  // Columns are assigned in ascending token order for reproducibility.
  std::map<TokenId, int> document_frequency;
  for (const auto& tokens : corpus) {
    const std::set<TokenId> unique(tokens.begin(), tokens.end());
    for (TokenId t : unique) ++document_frequency[t];
  }
  const double n = static_cast<double>(corpus.size());
  for (const auto& [token, df] : document_frequency) {
    model.column_.emplace(token, static_cast<int>(model.idf_.size()));
    model.idf_.push_back(std::log(n / static_cast<double>(df)));
  }

  std::vector<double> centroid(model.idf_.size(), 0.0);
  for (size_t i = 0; i < corpus.size(); ++i) {
    SparseVector v = model.Vectorize(corpus[i]);
    for (const auto& [column, value] : v.entries) centroid[column] += value;
    if (!model.vectors_.emplace(ids[i], std::move(v)).second) {
      throw std::invalid_argument("tf-idf: duplicate item id " +
                                  std::to_string(ids[i]));
    }
  }
  for (size_t c = 0; c < centroid.size(); ++c) {
    if (centroid[c] != 0.0) {
      model.centroid_.entries.emplace_back(static_cast<int>(c), centroid[c]);
    }
  }
  Normalize(model.centroid_);
  return model;
}

SparseVector TfIdfModel::Vectorize(std::span<const TokenId> tokens) const {
  std::map<int, double> counts;
  for (TokenId t : tokens) {
    auto it = column_.find(t);
    if (it != column_.end()) counts[it->second] += 1.0;
  }
  SparseVector v;
  for (const auto& [column, count] : counts) {
    const double weight = count * idf_[column];
    if (weight != 0.0) v.entries.emplace_back(column, weight);
  }
  Normalize(v);
  return v;
}

const SparseVector& TfIdfModel::ItemVector(ItemId id) const {
  auto it = vectors_.find(id);
  if (it == vectors_.end()) {
    throw std::out_of_range("tf-idf: unknown item " + std::to_string(id));
  }
  return it->second;
}

double TfIdfModel::Idf(TokenId token) const {
  auto it = column_.find(token);
  return it == column_.end() ? 0.0 : idf_[it->second];
}

}  // namespace listpred
