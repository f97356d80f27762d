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

#ifndef LISTPRED_FEATURES_GRAM_H_
#define LISTPRED_FEATURES_GRAM_H_

#include <span>

#include "core/item.h"
#include "features/tfidf.h"

namespace listpred {

// det of the Gram matrix of `vectors`, via Cholesky with 1e-12 diagonal
// jitter. A failed or numerically singular factorization yields 0. The
// result is clamped to [0, 1], the range for vectors of norm <= 1.
double GramDeterminant(std::span<const SparseVector* const> vectors);

// det(G) of the tf-idf vectors of list + item (squared spanned volume).
double GramDetSimilarity(const TfIdfModel& model, const ItemList& list,
                         const Item& item);

}  // namespace listpred

#endif  // LISTPRED_FEATURES_GRAM_H_
