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

#include "summarize/cluster.h"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "core/reward.h"
#include "features/feature_map.h"
#include "features/tfidf.h"
#include "summarize/tokenizer.h"

namespace listpred {

using nlohmann::json;

ClusterDocument ClusterFromJson(const json& j) {
  try {
    ClusterDocument cluster;
    cluster.cluster_id = j.at("cluster_id").get<std::string>();
    for (const auto& d : j.at("documents")) {
      DocumentRecord doc;
      doc.doc_id = d.at("doc_id").get<std::string>();
      for (const auto& s : d.at("sentences")) {
        SentenceRecord sentence;
        sentence.sentence_id = s.at("sentence_id").get<std::string>();
        sentence.text = s.at("text").get<std::string>();
        const auto actual = static_cast<int64_t>(sentence.text.size());
        sentence.byte_length =
            s.contains("byte_length") ? s.at("byte_length").get<int64_t>()
                                      : actual;
        if (sentence.byte_length != actual) {
          throw InputError("sentence " + sentence.sentence_id +
                           " declares byte_length " +
                           std::to_string(sentence.byte_length) +
                           " but its text has " + std::to_string(actual) +
                           " bytes");
        }
        if (sentence.byte_length == 0) {
          throw InputError("sentence " + sentence.sentence_id +
                           " has zero length");
        }
        doc.sentences.push_back(std::move(sentence));
      }
      cluster.documents.push_back(std::move(doc));
    }
    if (j.contains("references")) {
      cluster.references = j.at("references").get<std::vector<std::string>>();
    }
    return cluster;
  } catch (const json::exception& e) {
    throw InputError(std::string("schema violation: ") + e.what());
  }
}

json ClusterToJson(const ClusterDocument& cluster) {
  json docs = json::array();
  for (const DocumentRecord& doc : cluster.documents) {
    json sentences = json::array();
    for (const SentenceRecord& s : doc.sentences) {
      sentences.push_back({{"sentence_id", s.sentence_id},
                           {"text", s.text},
                           {"byte_length", s.byte_length}});
    }
    docs.push_back({{"doc_id", doc.doc_id}, {"sentences", sentences}});
  }
  return {{"cluster_id", cluster.cluster_id},
          {"documents", docs},
          {"references", cluster.references}};
}

IngestedCluster BuildCluster(const ClusterDocument& cluster,
                             Vocabulary& vocabulary,
                             const IngestOptions& options) {
  if (options.require_references && cluster.references.empty()) {
    throw InputError("cluster " + cluster.cluster_id + " has no references");
  }
  IngestedCluster out;
  out.source = cluster;
  ProblemInstance& x = out.instance;
  x.state_id = cluster.cluster_id;

  std::vector<int> numerals;
  std::vector<double> relative_positions;
  ItemId next_id = 0;
  for (size_t d = 0; d < cluster.documents.size(); ++d) {
    const auto& sentences = cluster.documents[d].sentences;
    for (size_t s = 0; s < sentences.size(); ++s) {
      Item item;
      item.id = next_id++;
      item.length = sentences[s].byte_length;
      item.doc_index = static_cast<int32_t>(d);
      item.position = static_cast<int32_t>(s);
      int numeral_count = 0;
      for (const std::string& token : Tokenize(sentences[s].text)) {
        item.tokens.push_back(vocabulary.Intern(token));
        if (IsNumeral(token)) ++numeral_count;
      }
      numerals.push_back(numeral_count);
      relative_positions.push_back(
          sentences.size() > 1
              ? static_cast<double>(s) / static_cast<double>(sentences.size() - 1)
              : 0.0);
      x.items.push_back(std::move(item));
    }
  }
  if (x.items.empty()) {
    throw InputError("cluster " + cluster.cluster_id + " has no sentences");
  }

  std::vector<std::vector<TokenId>> corpus;
  std::vector<ItemId> ids;
  for (const Item& item : x.items) {
    corpus.push_back(item.tokens);
    ids.push_back(item.id);
  }
  auto tfidf = std::make_shared<TfIdfModel>(TfIdfModel::Build(corpus, ids));
  for (size_t i = 0; i < x.items.size(); ++i) {
    x.items[i].static_features = StaticQualityFeatures(
        *tfidf, x.items[i], relative_positions[i], numerals[i]);
  }
  x.tfidf = std::move(tfidf);
  x.Reindex();

  for (const std::string& text : cluster.references) {
    auto& tokens = out.references.emplace_back();
    for (const std::string& token : Tokenize(text)) {
      tokens.push_back(vocabulary.Intern(token));
    }
  }
  if (!out.references.empty()) {
    std::map<ItemId, std::vector<TokenId>> item_tokens;
    for (const Item& item : x.items) item_tokens.emplace(item.id, item.tokens);
    try {
      x.reward = std::make_shared<RougeRecallReward>(out.references, item_tokens);
    } catch (const std::invalid_argument& e) {
      throw InputError("cluster " + cluster.cluster_id + ": " + e.what());
    }
  }
  return out;
}

IngestedCluster IngestFile(const std::filesystem::path& path,
                           Vocabulary& vocabulary,
                           const IngestOptions& options) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw InputError("malformed JSON: " + std::string(e.what()));
  }
  return BuildCluster(ClusterFromJson(j), vocabulary, options);
}

std::vector<IngestedCluster> IngestDirectory(const std::filesystem::path& dir,
                                             Vocabulary& vocabulary,
                                             const IngestOptions& options) {
  std::error_code ec;
  if (!std::filesystem::is_directory(dir, ec)) {
    throw InputError("not a directory: " + dir.string());
  }
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  if (files.empty()) throw InputError("no clusters in " + dir.string());

  std::vector<IngestedCluster> clusters;
  std::ostringstream errors;
  int failures = 0;
  for (const auto& file : files) {
    try {
      clusters.push_back(IngestFile(file, vocabulary, options));
    } catch (const InputError& e) {
      errors << "\n  " << file.filename().string() << ": " << e.what();
      ++failures;
    }
  }
  if (failures > 0) {
    throw InputError(std::to_string(failures) + " cluster file(s) rejected:" +
                     errors.str());
  }
  return clusters;
}

}  // namespace listpred
