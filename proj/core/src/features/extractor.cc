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

#include "soberlens/features/extractor.h"

#include <map>
#include <ostream>

#include "soberlens/common/error.h"
#include "soberlens/common/format.h"
#include "soberlens/text/pos_tagger.h"
#include "soberlens/text/signals.h"

namespace soberlens::features {

namespace {

using text::Token;
using text::TokenKind;

bool IsNgramToken(const Token &t) {
  return t.kind == TokenKind::kWord || t.kind == TokenKind::kEmoticon;
}

// Accumulates named values, registering names on first use.
class Accumulator {
 public:
  explicit Accumulator(FeatureRegistry &registry) : registry_(registry) {}

  void Add(const std::string &name, double value) {
    if (auto index = registry_.Intern(name)) entries_[*index] += value;
  }

  void Set(const std::string &name, double value) {
    auto index = registry_.Intern(name);
    if (!index) return;
    if (value == 0.0) {
      entries_.erase(*index);
    } else {
      entries_[*index] = value;
    }
  }

  FeatureVector Build() const {
    std::vector<FeatureEntry> entries;
    entries.reserve(entries_.size());
    for (const auto &[index, value] : entries_) entries.push_back({index, value});
    return FeatureVector::FromEntries(std::move(entries));
  }

 private:
  FeatureRegistry &registry_;
  std::map<std::size_t, double> entries_;
};

FeatureVector StylisticFromTokens(std::string_view raw_text,
                                  std::span<const Token> tokens,
                                  const text::LexiconSet &lex,
                                  const std::set<std::string> &lda_unigrams,
                                  FeatureRegistry &registry) {
  Accumulator acc(registry);
  // Registers every fixed name up front, in a fixed order.
  for (std::string_view name : kStylisticNames) acc.Set(std::string(name), 0.0);

  std::vector<text::TaggedToken> tagged = text::TagPartsOfSpeech(tokens, lex);
  int words = 0, nouns = 0, adjectives = 0, adverbs = 0;
  for (const text::TaggedToken &t : tagged) {
    if (t.token.kind != TokenKind::kWord) continue;
    ++words;
    nouns += t.tag == text::PosTag::kNoun;
    adjectives += t.tag == text::PosTag::kAdjective;
    adverbs += t.tag == text::PosTag::kAdverb;
  }
  auto ratio = [words](int n) {
    return words == 0 ? 0.0 : static_cast<double>(n) / words;
  };
  acc.Set("pos_ratio_noun", ratio(nouns));
  acc.Set("pos_ratio_adj", ratio(adjectives));
  acc.Set("pos_ratio_adv", ratio(adverbs));
  acc.Set("ne_count", text::CountNamedEntities(tagged, lex.dictionary));
  acc.Set("connector_count",
          text::CountDiscourseConnectors(tokens, lex.connectors));
  acc.Set("spelling_error", text::HasSpellingError(tokens, lex.dictionary));
  acc.Set("char_repeat", text::HasRepeatedChars(tokens));
  acc.Set("capitals", text::CountCapitals(raw_text));
  acc.Set("length", words);
  text::EmoticonStats emoticons = text::DetectEmoticons(tokens);
  acc.Set("emoticon_presence", emoticons.present);
  acc.Set("emoticon_count", emoticons.count);
  SentimentRatio sentiment = ComputeSentimentRatio(tokens, lex);
  acc.Set("sent_pos_ratio", sentiment.positive);
  acc.Set("sent_neg_ratio", sentiment.negative);

  if (!lda_unigrams.empty()) {
    std::map<std::string, int> counts;
    for (const Token &t : tokens) {
      if (t.kind == TokenKind::kWord && lda_unigrams.count(t.normalized)) {
        ++counts[t.normalized];
      }
    }
    for (const auto &[word, count] : counts) {
      acc.Set(std::string(kLdaPresencePrefix) + word, 1.0);
      acc.Set(std::string(kLdaCountPrefix) + word, count);
    }
  }
  return acc.Build();
}

}  // namespace

void FeatureConfig::Validate() const {
  if (!ngram_presence && !ngram_count && !stylistic) {
    throw ConfigError("at least one feature group must be enabled");
  }
}

FeatureConfig FeatureConfig::FromPreset(std::string_view preset) {
  FeatureConfig config;
  if (preset == "ngram") {
    config.stylistic = false;
  } else if (preset == "stylistic") {
    config.ngram_presence = false;
    config.ngram_count = false;
  } else if (preset != "all") {
    throw ConfigError("unknown feature set '" + std::string(preset) +
                      "' (expected ngram, stylistic or all)");
  }
  return config;
}

std::string FeatureConfig::PresetName() const {
  const bool ngram = ngram_presence || ngram_count;
  if (ngram && stylistic) return "all";
  return ngram ? "ngram" : "stylistic";
}

FeatureVector ExtractNgrams(std::span<const Token> tokens,
                            FeatureRegistry &registry, NgramMode mode) {
  const bool presence = mode == NgramMode::kPresence;
  const std::string unigram(presence ? kUnigramPresencePrefix
                                     : kUnigramCountPrefix);
  const std::string bigram(presence ? kBigramPresencePrefix
                                    : kBigramCountPrefix);
  Accumulator acc(registry);
  const Token *previous = nullptr;
  for (const Token &t : tokens) {
    if (!IsNgramToken(t)) continue;
    if (presence) {
      acc.Set(unigram + t.normalized, 1.0);
      if (previous) acc.Set(bigram + previous->normalized + "_" + t.normalized, 1.0);
    } else {
      acc.Add(unigram + t.normalized, 1.0);
      if (previous) acc.Add(bigram + previous->normalized + "_" + t.normalized, 1.0);
    }
    previous = &t;
  }
  return acc.Build();
}

SentimentRatio ComputeSentimentRatio(std::span<const Token> tokens,
                                     const text::LexiconSet &lex) {
  int words = 0, positive = 0, negative = 0;
  for (const Token &t : tokens) {
    if (t.kind != TokenKind::kWord) continue;
    ++words;
    positive += lex.sentiment_positive.count(t.normalized) > 0;
    negative += lex.sentiment_negative.count(t.normalized) > 0;
  }
  if (words == 0) return {};
  return {static_cast<double>(positive) / words,
          static_cast<double>(negative) / words};
}

FeatureVector ExtractStylistic(std::string_view text,
                               const text::LexiconSet &lex,
                               const std::set<std::string> &lda_unigrams,
                               FeatureRegistry &registry) {
  text::Tokenizer tokenizer(lex.emoticon_patterns);
  std::vector<Token> tokens = tokenizer.Tokenize(text);
  return StylisticFromTokens(text, tokens, lex, lda_unigrams, registry);
}

FeatureExtractor::FeatureExtractor(FeatureConfig config,
                                   const text::LexiconSet &lex)
    : config_(std::move(config)), lex_(lex), tokenizer_(lex.emoticon_patterns) {
  config_.Validate();
}

FeatureVector FeatureExtractor::Extract(std::string_view text,
                                        FeatureRegistry &registry) const {
  std::vector<Token> tokens = tokenizer_.Tokenize(text);
  FeatureVector v;
  if (config_.ngram_presence) {
    v = v.Plus(ExtractNgrams(tokens, registry, NgramMode::kPresence));
  }
  if (config_.ngram_count) {
    v = v.Plus(ExtractNgrams(tokens, registry, NgramMode::kCount));
  }
  if (config_.stylistic) {
    v = v.Plus(StylisticFromTokens(text, tokens, lex_, config_.lda_unigrams,
                                   registry));
  }
  return v;
}

Design VectorizeCorpus(const corpus::Corpus &corpus, const FeatureConfig &config,
                       const text::LexiconSet &lex, FeatureRegistry &registry) {
  if (corpus.empty()) throw DataError("cannot vectorize an empty corpus");
  FeatureExtractor extractor(config, lex);
  Design design;
  design.rows.reserve(corpus.size());
  design.labels.reserve(corpus.size());
  for (const corpus::LabeledTweet &tweet : corpus.tweets) {
    design.rows.push_back(extractor.Extract(tweet.text, registry));
    design.labels.push_back(Sign(tweet.label));
  }
  return design;
}

void WriteVectorDump(std::ostream &out, const corpus::Corpus &corpus,
                     const Design &design, const FeatureRegistry &registry) {
  for (std::size_t i = 0; i < design.rows.size(); ++i) {
    out << corpus.tweets.at(i).id << '\t'
        << LabelName(LabelFromSign(design.labels[i])) << '\t';
    bool first = true;
    for (const FeatureEntry &e : design.rows[i].entries()) {
      if (!first) out << ',';
      out << registry.Name(e.index) << '=' << FormatDouble(e.value);
      first = false;
    }
    out << '\n';
  }
}

}  // namespace soberlens::features
