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

#include "soberlens/topics/lda.h"

#include <algorithm>
#include <cmath>
#include <istream>
#include <nlohmann/json.hpp>
#include <ostream>
#include <stdexcept>

#include "soberlens/common/error.h"
#include "soberlens/common/random.h"
#include "soberlens/text/tokenizer.h"

namespace soberlens::topics {

namespace {

constexpr int kFormatVersion = 1;
constexpr const char *kFormatName = "soberlens.lda";

}  // namespace

void TopicModelParams::Validate() const {
  if (n_topics < 1) throw ConfigError("n_topics must be at least 1");
  if (!(ResolvedAlpha() > 0.0) || !std::isfinite(ResolvedAlpha())) {
    throw ConfigError("alpha must be positive");
  }
  if (!(beta > 0.0) || !std::isfinite(beta)) {
    throw ConfigError("beta must be positive");
  }
  if (iterations < 1) throw ConfigError("iterations must be at least 1");
}

void TopicModel::Move(std::size_t doc, std::size_t pos, int topic, int delta) {
  const int word = docs_[doc][pos];
  topic_word_[static_cast<std::size_t>(topic) * vocab_.size() + word] += delta;
  doc_topic_[doc * params_.n_topics + topic] += delta;
  topic_total_[topic] += delta;
}

std::vector<double> TopicModel::ConditionalWeights(std::size_t doc,
                                                   std::size_t pos) const {
  const int word = docs_[doc][pos];
  const int current = assignments_[doc][pos];
  const double alpha = params_.ResolvedAlpha();
  const double beta = params_.beta;
  const double vocab_beta = beta * static_cast<double>(vocab_.size());
  std::vector<double> weights(params_.n_topics);
  for (int k = 0; k < params_.n_topics; ++k) {
    const long self = k == current ? 1 : 0;
    weights[k] = (static_cast<double>(DocTopic(doc, k) - self) + alpha) *
                 (static_cast<double>(TopicWord(k, word) - self) + beta) /
                 (static_cast<double>(TopicTotal(k) - self) + vocab_beta);
  }
  return weights;
}

void TopicModel::Sweep(Rng &rng, std::vector<double> &weights) {
  const int n_topics = params_.n_topics;
  const double alpha = params_.ResolvedAlpha();
  const double beta = params_.beta;
  const double vocab_beta = beta * static_cast<double>(vocab_.size());
  for (std::size_t d = 0; d < docs_.size(); ++d) {
    for (std::size_t i = 0; i < docs_[d].size(); ++i) {
      const int word = docs_[d][i];
      Move(d, i, assignments_[d][i], -1);
      double total = 0.0;
      for (int k = 0; k < n_topics; ++k) {
        total += (static_cast<double>(DocTopic(d, k)) + alpha) *
                 (static_cast<double>(TopicWord(k, word)) + beta) /
                 (static_cast<double>(TopicTotal(k)) + vocab_beta);
        weights[k] = total;
      }
      const double u = rng.Uniform() * total;
      int topic = static_cast<int>(
          std::upper_bound(weights.begin(), weights.begin() + n_topics, u) -
          weights.begin());
      topic = std::min(topic, n_topics - 1);
      assignments_[d][i] = topic;
      Move(d, i, topic, +1);
    }
  }
}

TopicModel TopicModel::Fit(const std::vector<std::vector<std::string>> &docs,
                           const TopicModelParams &params,
                           const SweepObserver &observer) {
  params.Validate();
  TopicModel model;
  model.params_ = params;

  std::set<std::string> words;
  for (const auto &doc : docs) words.insert(doc.begin(), doc.end());
  if (words.empty()) throw DataError("LDA vocabulary is empty");
  model.vocab_.assign(words.begin(), words.end());

  for (const auto &doc : docs) {
    if (doc.empty()) continue;
    std::vector<int> ids;
    ids.reserve(doc.size());
    for (const std::string &w : doc) {
      ids.push_back(static_cast<int>(
          std::lower_bound(model.vocab_.begin(), model.vocab_.end(), w) -
          model.vocab_.begin()));
    }
    model.n_tokens_ += ids.size();
    model.docs_.push_back(std::move(ids));
  }

  const int n_topics = params.n_topics;
  model.topic_word_.assign(static_cast<std::size_t>(n_topics) *
                               model.vocab_.size(), 0);
  model.doc_topic_.assign(model.docs_.size() * n_topics, 0);
  model.topic_total_.assign(n_topics, 0);
  model.assignments_.resize(model.docs_.size());

  Rng rng(params.seed);
  for (std::size_t d = 0; d < model.docs_.size(); ++d) {
    model.assignments_[d].resize(model.docs_[d].size());
    for (std::size_t i = 0; i < model.docs_[d].size(); ++i) {
      int topic = static_cast<int>(rng.Below(n_topics));
      model.assignments_[d][i] = topic;
      model.Move(d, i, topic, +1);
    }
  }
  if (observer) observer(0, model);

  std::vector<double> weights(n_topics);
  for (int sweep = 1; sweep <= params.iterations; ++sweep) {
    model.Sweep(rng, weights);
#ifndef NDEBUG
    model.CheckInvariants();
#endif
    if (observer) observer(sweep, model);
  }
  return model;
}

void TopicModel::CheckInvariants() const {
  const int n_topics = params_.n_topics;
  std::vector<long> topic_word(topic_word_.size(), 0);
  std::vector<long> doc_topic(doc_topic_.size(), 0);
  std::vector<long> topic_total(n_topics, 0);
  std::size_t tokens = 0;
  for (std::size_t d = 0; d < docs_.size(); ++d) {
    if (assignments_[d].size() != docs_[d].size()) {
      throw std::logic_error("assignment length mismatch");
    }
    for (std::size_t i = 0; i < docs_[d].size(); ++i) {
      const int k = assignments_[d][i];
      if (k < 0 || k >= n_topics) {
        throw std::logic_error("topic assignment out of range");
      }
      ++topic_word[static_cast<std::size_t>(k) * vocab_.size() + docs_[d][i]];
      ++doc_topic[d * n_topics + k];
      ++topic_total[k];
      ++tokens;
    }
  }
  if (tokens != n_tokens_ || topic_word != topic_word_ ||
      doc_topic != doc_topic_ || topic_total != topic_total_) {
    throw std::logic_error("LDA count tables out of sync with assignments");
  }
  long sum_tw = 0, sum_dt = 0;
  for (long c : topic_word_) sum_tw += c;
  for (long c : doc_topic_) sum_dt += c;
  if (sum_tw != static_cast<long>(n_tokens_) ||
      sum_dt != static_cast<long>(n_tokens_)) {
    throw std::logic_error("LDA count sums differ from token count");
  }
}

nlohmann::json TopicModel::ToJson() const {
  nlohmann::json params = {{"n_topics", params_.n_topics},
                           {"alpha", params_.ResolvedAlpha()},
                           {"beta", params_.beta},
                           {"iterations", params_.iterations},
                           {"seed", params_.seed}};
  nlohmann::json topic_word = nlohmann::json::array();
  for (int k = 0; k < params_.n_topics; ++k) {
    auto begin = topic_word_.begin() +
                 static_cast<std::ptrdiff_t>(k * vocab_.size());
    topic_word.push_back(
        std::vector<long>(begin, begin + static_cast<std::ptrdiff_t>(vocab_.size())));
  }
  nlohmann::json doc_topic = nlohmann::json::array();
  for (std::size_t d = 0; d < docs_.size(); ++d) {
    auto begin = doc_topic_.begin() +
                 static_cast<std::ptrdiff_t>(d * params_.n_topics);
    doc_topic.push_back(std::vector<long>(begin, begin + params_.n_topics));
  }
  nlohmann::json doc = {{"format", kFormatName},
                        {"version", kFormatVersion},
                        {"params", params},
                        {"vocab", vocab_},
                        {"docs", docs_},
                        {"assignments", assignments_},
                        {"topic_word_counts", topic_word},
                        {"doc_topic_counts", doc_topic}};
  return doc;
}

void TopicModel::WriteJson(std::ostream &out) const {
  out << ToJson().dump(-1, ' ', false,
                       nlohmann::json::error_handler_t::replace)
      << '\n';
}

TopicModel TopicModel::ReadJson(std::istream &in) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception &e) {
    throw ModelError(std::string("malformed LDA model: ") + e.what());
  }
  return FromJson(doc);
}

TopicModel TopicModel::FromJson(const nlohmann::json &doc) {
  try {
    if (doc.at("format") != kFormatName) {
      throw ModelError("not an LDA model file");
    }
    if (doc.at("version") != kFormatVersion) {
      throw ModelError("unsupported LDA model version");
    }
    TopicModel model;
    const auto &p = doc.at("params");
    model.params_.n_topics = p.at("n_topics").get<int>();
    model.params_.alpha = p.at("alpha").get<double>();
    model.params_.beta = p.at("beta").get<double>();
    model.params_.iterations = p.at("iterations").get<int>();
    model.params_.seed = p.at("seed").get<std::uint64_t>();
    model.params_.Validate();
    model.vocab_ = doc.at("vocab").get<std::vector<std::string>>();
    model.docs_ = doc.at("docs").get<std::vector<std::vector<int>>>();
    model.assignments_ =
        doc.at("assignments").get<std::vector<std::vector<int>>>();
    const int n_topics = model.params_.n_topics;
    model.topic_word_.assign(
        static_cast<std::size_t>(n_topics) * model.vocab_.size(), 0);
    model.doc_topic_.assign(model.docs_.size() * n_topics, 0);
    model.topic_total_.assign(n_topics, 0);
    if (model.assignments_.size() != model.docs_.size()) {
      throw ModelError("LDA model: assignments do not match documents");
    }
    for (std::size_t d = 0; d < model.docs_.size(); ++d) {
      if (model.assignments_[d].size() != model.docs_[d].size()) {
        throw ModelError("LDA model: assignments do not match documents");
      }
      for (std::size_t i = 0; i < model.docs_[d].size(); ++i) {
        const int w = model.docs_[d][i];
        const int k = model.assignments_[d][i];
        if (w < 0 || static_cast<std::size_t>(w) >= model.vocab_.size() ||
            k < 0 || k >= n_topics) {
          throw ModelError("LDA model: word or topic id out of range");
        }
        model.Move(d, i, k, +1);
        ++model.n_tokens_;
      }
    }
    // The stored tables must agree with the recount.
    const auto topic_word = doc.at("topic_word_counts");
    for (int k = 0; k < n_topics; ++k) {
      const auto row = topic_word.at(k).get<std::vector<long>>();
      for (std::size_t w = 0; w < model.vocab_.size(); ++w) {
        if (row.at(w) != model.TopicWord(k, static_cast<int>(w))) {
          throw ModelError("LDA model: topic-word table is inconsistent");
        }
      }
    }
    return model;
  } catch (const nlohmann::json::exception &e) {
    throw ModelError(std::string("malformed LDA model: ") + e.what());
  } catch (const ConfigError &e) {
    throw ModelError(std::string("malformed LDA model: ") + e.what());
  }
}

std::vector<std::vector<std::string>> TopWords(const TopicModel &model,
                                               std::size_t n) {
  std::vector<std::vector<std::string>> result;
  for (int k = 0; k < model.n_topics(); ++k) {
    std::vector<int> ids;
    for (std::size_t w = 0; w < model.vocab_size(); ++w) {
      if (model.TopicWord(k, static_cast<int>(w)) > 0) {
        ids.push_back(static_cast<int>(w));
      }
    }
    // Vocab ids are alphabetical, so a stable sort keeps ties alphabetical.
    std::stable_sort(ids.begin(), ids.end(), [&](int a, int b) {
      return model.TopicWord(k, a) > model.TopicWord(k, b);
    });
    if (ids.size() > n) ids.resize(n);
    std::vector<std::string> words;
    for (int id : ids) words.push_back(model.vocab()[id]);
    result.push_back(std::move(words));
  }
  return result;
}

std::set<std::string> SelectLdaUnigrams(const TopicModel &drunk_model,
                                        const TopicModel &sober_model,
                                        std::size_t per_topic) {
  std::set<std::string> selected;
  for (const TopicModel *model : {&drunk_model, &sober_model}) {
    for (const auto &topic : TopWords(*model, per_topic)) {
      selected.insert(topic.begin(), topic.end());
    }
  }
  return selected;
}

std::vector<std::vector<std::string>> ClassDocuments(
    const corpus::Corpus &corpus, Label label, const text::LexiconSet &lex) {
  text::Tokenizer tokenizer(lex.emoticon_patterns);
  std::vector<std::vector<std::string>> docs;
  for (const corpus::LabeledTweet &tweet : corpus.tweets) {
    if (tweet.label != label) continue;
    std::vector<std::string> words;
    for (const text::Token &t : tokenizer.Tokenize(tweet.text)) {
      if (t.kind == text::TokenKind::kWord && !lex.stopwords.count(t.normalized)) {
        words.push_back(t.normalized);
      }
    }
    docs.push_back(std::move(words));
  }
  return docs;
}

}  // namespace soberlens::topics
