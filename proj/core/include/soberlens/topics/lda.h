// Copyright 2026 The SoberLens Authors.
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

#ifndef SOBERLENS_TOPICS_LDA_H_
#define SOBERLENS_TOPICS_LDA_H_

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <nlohmann/json_fwd.hpp>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "soberlens/common/label.h"
#include "soberlens/common/random.h"
#include "soberlens/corpus/records.h"
#include "soberlens/text/lexicon.h"

namespace soberlens::topics {

struct TopicModelParams {
  int n_topics = 20;
  // Defaults to 50 / n_topics when unset.
  std::optional<double> alpha;
  double beta = 0.01;
  int iterations = 500;
  std::uint64_t seed = 0;

  double ResolvedAlpha() const { return alpha.value_or(50.0 / n_topics); }
  void Validate() const;

  bool operator==(const TopicModelParams &) const = default;
};

// Collapsed Gibbs sampler state for LDA. Word ids index `vocab`, which is
// sorted. Count tables are stored row-major.
class TopicModel {
 public:
  using SweepObserver = std::function<void(int sweep, const TopicModel &)>;

  // Fits by collapsed Gibbs sampling. Empty documents are dropped. Each
  // sweep resamples every token in document order from
  //   p(k) ∝ (n_dk + alpha) (n_kw + beta) / (n_k + V beta)
  // with the token's own assignment removed from the counts. The observer,
  // if set, runs after initialization (sweep 0) and after every sweep.
  // Throws DataError when the vocabulary is empty.
  static TopicModel Fit(const std::vector<std::vector<std::string>> &docs,
                        const TopicModelParams &params,
                        const SweepObserver &observer = {});

  const TopicModelParams &params() const { return params_; }
  int n_topics() const { return params_.n_topics; }
  std::size_t n_docs() const { return docs_.size(); }
  std::size_t vocab_size() const { return vocab_.size(); }
  std::size_t n_tokens() const { return n_tokens_; }

  const std::vector<std::string> &vocab() const { return vocab_; }
  const std::vector<std::vector<int>> &docs() const { return docs_; }
  const std::vector<std::vector<int>> &assignments() const {
    return assignments_;
  }

  long TopicWord(int topic, int word) const {
    return topic_word_[static_cast<std::size_t>(topic) * vocab_.size() + word];
  }
  long DocTopic(std::size_t doc, int topic) const {
    return doc_topic_[doc * params_.n_topics + topic];
  }
  long TopicTotal(int topic) const { return topic_total_[topic]; }

  // Unnormalized conditional for token `pos` of `doc`, excluding the
  // token's current assignment.
  std::vector<double> ConditionalWeights(std::size_t doc,
                                         std::size_t pos) const;

  // Recounts the tables from the assignments and compares. Throws
  // std::logic_error on any mismatch or out-of-range topic.
  void CheckInvariants() const;

  // Versioned JSON dump with params, vocab, documents, assignments and
  // count tables. Reading recounts the tables from the assignments and
  // throws ModelError if the stored tables disagree.
  nlohmann::json ToJson() const;
  static TopicModel FromJson(const nlohmann::json &doc);
  void WriteJson(std::ostream &out) const;
  static TopicModel ReadJson(std::istream &in);

  bool operator==(const TopicModel &) const = default;

 private:
  void Sweep(Rng &rng, std::vector<double> &weights);
  void Move(std::size_t doc, std::size_t pos, int topic, int delta);

  TopicModelParams params_;
  std::vector<std::string> vocab_;
  std::vector<std::vector<int>> docs_;
  std::vector<std::vector<int>> assignments_;
  std::vector<long> topic_word_;
  std::vector<long> doc_topic_;
  std::vector<long> topic_total_;
  std::size_t n_tokens_ = 0;
};

// Per topic, words by count descending, ties alphabetical. Words with zero
// count in a topic are not part of it; a topic with fewer than `n` such
// words returns all of them.
std::vector<std::vector<std::string>> TopWords(const TopicModel &model,
                                               std::size_t n);

// Union of the top `per_topic` words of every topic of both models.
std::set<std::string> SelectLdaUnigrams(const TopicModel &drunk_model,
                                        const TopicModel &sober_model,
                                        std::size_t per_topic);

// Lowercased word tokens of each tweet with the given label, stopwords
// removed. Tweets left with no words produce empty documents.
std::vector<std::vector<std::string>> ClassDocuments(
    const corpus::Corpus &corpus, Label label, const text::LexiconSet &lex);

}  // namespace soberlens::topics

#endif  // SOBERLENS_TOPICS_LDA_H_
