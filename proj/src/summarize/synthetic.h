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

#ifndef LISTPRED_SUMMARIZE_SYNTHETIC_H_
#define LISTPRED_SUMMARIZE_SYNTHETIC_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"
#include "summarize/cluster.h"

namespace listpred {

// Sentences are distinct 3-byte tokens "w00".."w99" joined by single spaces
// and closed by a period, so a sentence of n tokens is exactly 4n bytes.
struct SyntheticSpec {
  int num_clusters = 20;
  int docs_per_cluster = 2;
  int sentences_per_doc = 4;
  int vocabulary_size = 24;
  int min_tokens = 1;
  int max_tokens = 4;
  int num_references = 4;
  // Realizable corpora share one integer count u_k per token; reference r
  // contains token k iff u_k > r. The ROUGE-1 recall reward is then a
  // weighted coverage whose normalized benefit is linear in the novelty
  // features.
  bool realizable = false;
  uint64_t seed = 1;

  // Throws std::invalid_argument.
  void Validate() const;
  int64_t max_sentence_bytes() const { return 4 * int64_t{max_tokens}; }
};

struct SyntheticCorpus {
  std::vector<ClusterDocument> clusters;
  std::vector<std::string> vocabulary;
  // Realizable only: per-token reference counts u_k.
  std::vector<int> planted_counts;
};

std::string SyntheticToken(int index);

SyntheticCorpus GenerateSynthetic(const SyntheticSpec& spec);

// Planted ranker weights over the novelty features, 2 * lmax^2 * u_k. Any two
// candidates with different normalized benefit are separated by a score
// margin of at least 2.
std::vector<double> PlantedWeights(const SyntheticCorpus& corpus,
                                   const SyntheticSpec& spec);

nlohmann::json PlantedWeightsToJson(const SyntheticCorpus& corpus,
                                    const SyntheticSpec& spec);

// Writes each cluster to <dir>/<cluster_id>.json.
void WriteClusters(const std::vector<ClusterDocument>& clusters,
                   const std::filesystem::path& dir);

}  // namespace listpred

#endif  // LISTPRED_SUMMARIZE_SYNTHETIC_H_
