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

#ifndef LISTPRED_SUMMARIZE_CLUSTER_H_
#define LISTPRED_SUMMARIZE_CLUSTER_H_

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "core/item.h"
#include "core/vocabulary.h"
#include "json.hpp"

namespace listpred {

// Cluster file schema (UTF-8 JSON, one cluster per file):
//   {"cluster_id": str,
//    "documents": [{"doc_id": str,
//                   "sentences": [{"sentence_id": str, "text": str,
//                                  "byte_length": int (optional)}]}],
//    "references": [str, ...]}
// byte_length, when present, must equal the UTF-8 byte count of text.
struct SentenceRecord {
  std::string sentence_id;
  std::string text;
  int64_t byte_length = 0;
};

struct DocumentRecord {
  std::string doc_id;
  std::vector<SentenceRecord> sentences;
};

struct ClusterDocument {
  std::string cluster_id;
  std::vector<DocumentRecord> documents;
  std::vector<std::string> references;
};

// Input problems, possibly gathered over several files.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

ClusterDocument ClusterFromJson(const nlohmann::json& j);
nlohmann::json ClusterToJson(const ClusterDocument& cluster);

// One ingested cluster: the problem instance (items numbered in reading
// order, so ascending id is document order) plus tokenized references.
struct IngestedCluster {
  ClusterDocument source;
  ProblemInstance instance;
  std::vector<std::vector<TokenId>> references;
};

struct IngestOptions {
  bool require_references = true;
};

// Tokenizes, builds the cluster tf-idf model and static quality features,
// and attaches a ROUGE-1 recall reward when references exist. Throws
// InputError on schema violations.
IngestedCluster BuildCluster(const ClusterDocument& cluster,
                             Vocabulary& vocabulary,
                             const IngestOptions& options);

IngestedCluster IngestFile(const std::filesystem::path& path,
                           Vocabulary& vocabulary,
                           const IngestOptions& options);

// Every *.json file of `dir` in filename order. Errors from all files are
// collected into one InputError; an empty directory is an error too.
std::vector<IngestedCluster> IngestDirectory(const std::filesystem::path& dir,
                                             Vocabulary& vocabulary,
                                             const IngestOptions& options);

}  // namespace listpred

#endif  // LISTPRED_SUMMARIZE_CLUSTER_H_
