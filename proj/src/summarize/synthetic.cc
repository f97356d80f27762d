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

#include "summarize/synthetic.h"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <stdexcept>

#include "core/item.h"

namespace listpred {
namespace {

// Partial Fisher-Yates: `count` distinct values from [0, n).
std::vector<int> SampleDistinct(Rng& rng, int n, int count) {
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 0);
  for (int i = 0; i < count; ++i) {
    const auto j = i + static_cast<int>(UniformIndex(rng, n - i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(count);
  return pool;
}

std::string JoinTokens(const std::vector<int>& tokens, bool period) {
  std::string text;
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0) text += ' ';
    text += SyntheticToken(tokens[i]);
  }
  if (period) text += '.';
  return text;
}

std::string Numbered(const char* prefix, int index) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%s%04d", prefix, index);
  return buffer;
}

}  // namespace

void SyntheticSpec::Validate() const {
  if (num_clusters < 1 || docs_per_cluster < 1 || sentences_per_doc < 1) {
    throw std::invalid_argument("synthetic sizes must be positive");
  }
  if (min_tokens < 1 || max_tokens < min_tokens) {
    throw std::invalid_argument("need 1 <= min_tokens <= max_tokens");
  }
  if (vocabulary_size < max_tokens || vocabulary_size > 100) {
    throw std::invalid_argument("vocabulary_size must be in [max_tokens, 100]");
  }
  if (num_references < 1) {
    throw std::invalid_argument("num_references must be positive");
  }
}

std::string SyntheticToken(int index) {
  char buffer[8];
  std::snprintf(buffer, sizeof(buffer), "w%02d", index);
  return buffer;
}

SyntheticCorpus GenerateSynthetic(const SyntheticSpec& spec) {
  spec.Validate();
  Rng rng(spec.seed);
  SyntheticCorpus corpus;
  for (int k = 0; k < spec.vocabulary_size; ++k) {
    corpus.vocabulary.push_back(SyntheticToken(k));
  }
  const int vocab = spec.vocabulary_size;
  const int refs = spec.num_references;

  if (spec.realizable) {
    corpus.planted_counts.resize(vocab);
    for (int k = 0; k < vocab; ++k) {
      corpus.planted_counts[k] = static_cast<int>(UniformIndex(rng, refs + 1));
    }
    // Every reference must be nonempty.
    auto top = std::max_element(corpus.planted_counts.begin(),
                                corpus.planted_counts.end());
    *top = refs;
  }

  for (int c = 0; c < spec.num_clusters; ++c) {
    ClusterDocument cluster;
    cluster.cluster_id = Numbered("c", c);
    // Non-realizable clusters draw sentences and references around a topic.
    std::vector<int> topic = SampleDistinct(rng, vocab, (vocab + 1) / 2);
    for (int d = 0; d < spec.docs_per_cluster; ++d) {
      DocumentRecord doc;
      doc.doc_id = cluster.cluster_id + Numbered("-d", d);
      for (int s = 0; s < spec.sentences_per_doc; ++s) {
        const int n = spec.min_tokens +
                      static_cast<int>(UniformIndex(
                          rng, spec.max_tokens - spec.min_tokens + 1));
        std::vector<int> tokens = SampleDistinct(rng, vocab, n);
        if (!spec.realizable) {
          for (int& t : tokens) {
            if (UniformUnit(rng) < 0.7) {
              t = topic[UniformIndex(rng, topic.size())];
            }
          }
          std::sort(tokens.begin(), tokens.end());
          tokens.erase(std::unique(tokens.begin(), tokens.end()),
                       tokens.end());
        }
        SentenceRecord sentence;
        sentence.sentence_id = doc.doc_id + Numbered("-s", s);
        sentence.text = JoinTokens(tokens, true);
        sentence.byte_length = static_cast<int64_t>(sentence.text.size());
        doc.sentences.push_back(std::move(sentence));
      }
      cluster.documents.push_back(std::move(doc));
    }
    for (int r = 0; r < refs; ++r) {
      std::vector<int> tokens;
      if (spec.realizable) {
        for (int k = 0; k < vocab; ++k) {
          if (corpus.planted_counts[k] > r) tokens.push_back(k);
        }
      } else {
        const int n = std::min<int>(topic.size(),
                                    3 + static_cast<int>(UniformIndex(rng, 4)));
        tokens = SampleDistinct(rng, static_cast<int>(topic.size()), n);
        for (int& t : tokens) t = topic[t];
      }
      cluster.references.push_back(JoinTokens(tokens, true));
    }
    corpus.clusters.push_back(std::move(cluster));
  }
  return corpus;
}

std::vector<double> PlantedWeights(const SyntheticCorpus& corpus,
                                   const SyntheticSpec& spec) {
  if (corpus.planted_counts.empty()) {
    throw std::invalid_argument("corpus was not generated as realizable");
  }
  const double lmax = static_cast<double>(spec.max_sentence_bytes());
  std::vector<double> weights;
  for (int u : corpus.planted_counts) weights.push_back(2.0 * lmax * lmax * u);
  return weights;
}

nlohmann::json PlantedWeightsToJson(const SyntheticCorpus& corpus,
                                    const SyntheticSpec& spec) {
  return {{"vocabulary", corpus.vocabulary},
          {"counts", corpus.planted_counts},
          {"weights", PlantedWeights(corpus, spec)}};
}

void WriteClusters(const std::vector<ClusterDocument>& clusters,
                   const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  for (const ClusterDocument& cluster : clusters) {
    const auto path = dir / (cluster.cluster_id + ".json");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << ClusterToJson(cluster).dump(2) << '\n';
  }
}

}  // namespace listpred
