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

#ifndef SOBERLENS_FEATURES_EXTRACTOR_H_
#define SOBERLENS_FEATURES_EXTRACTOR_H_

#include <array>
#include <iosfwd>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "soberlens/corpus/records.h"
#include "soberlens/features/feature_vector.h"
#include "soberlens/features/registry.h"
#include "soberlens/text/lexicon.h"
#include "soberlens/text/tokenizer.h"

namespace soberlens::features {

// Feature groups and the LDA word list that feeds the stylistic group.
struct FeatureConfig {
  bool ngram_presence = true;
  bool ngram_count = true;
  bool stylistic = true;
  std::set<std::string> lda_unigrams;

  // Throws ConfigError when no group is enabled.
  void Validate() const;

  // "ngram" (presence and count), "stylistic", or "all".
  static FeatureConfig FromPreset(std::string_view preset);
  std::string PresetName() const;
};

enum class NgramMode { kPresence, kCount };

// Feature-name prefixes. Count features use "u:"/"b:"; presence features
// use "up:"/"bp:" so both groups can be active together.
inline constexpr std::string_view kUnigramCountPrefix = "u:";
inline constexpr std::string_view kBigramCountPrefix = "b:";
inline constexpr std::string_view kUnigramPresencePrefix = "up:";
inline constexpr std::string_view kBigramPresencePrefix = "bp:";
inline constexpr std::string_view kLdaPresencePrefix = "lda_p:";
inline constexpr std::string_view kLdaCountPrefix = "lda_c:";

// Fixed stylistic feature names, in registry order.
inline constexpr std::array<std::string_view, 13> kStylisticNames = {
    "pos_ratio_noun",  "pos_ratio_adj",     "pos_ratio_adv",
    "ne_count",        "connector_count",   "spelling_error",
    "char_repeat",     "capitals",          "length",
    "emoticon_presence", "emoticon_count",  "sent_pos_ratio",
    "sent_neg_ratio"};

// Unigrams and bigrams over word and emoticon tokens (normalized forms);
// other token kinds are skipped, and bigrams join neighbours in the skipped
// sequence. Names unknown to a frozen registry are dropped.
FeatureVector ExtractNgrams(std::span<const text::Token> tokens,
                            FeatureRegistry &registry, NgramMode mode);

struct SentimentRatio {
  double positive = 0.0;
  double negative = 0.0;
};

// Fractions of word tokens in the positive and negative lexicons.
SentimentRatio ComputeSentimentRatio(std::span<const text::Token> tokens,
                                     const text::LexiconSet &lex);

// Stylistic features of one text. Zero-valued features are omitted from the
// vector, but the fixed names are always registered (when not frozen) so
// every training run yields the same leading indices.
FeatureVector ExtractStylistic(std::string_view text,
                               const text::LexiconSet &lex,
                               const std::set<std::string> &lda_unigrams,
                               FeatureRegistry &registry);

inline FeatureVector ExtractStylistic(const corpus::LabeledTweet &tweet,
                                      const text::LexiconSet &lex,
                                      const std::set<std::string> &lda_unigrams,
                                      FeatureRegistry &registry) {
  return ExtractStylistic(tweet.text, lex, lda_unigrams, registry);
}

// All enabled groups for one text, sharing one tokenizer.
class FeatureExtractor {
 public:
  FeatureExtractor(FeatureConfig config, const text::LexiconSet &lex);

  FeatureVector Extract(std::string_view text, FeatureRegistry &registry) const;

  const FeatureConfig &config() const { return config_; }

 private:
  FeatureConfig config_;
  const text::LexiconSet &lex_;
  text::Tokenizer tokenizer_;
};

struct Design {
  std::vector<FeatureVector> rows;
  // +1 drunk, -1 sober.
  std::vector<int> labels;
};

// One row per tweet in corpus order. With an unfrozen registry this is the
// training pass; with a frozen one, unseen features are dropped. Throws
// DataError on an empty corpus.
Design VectorizeCorpus(const corpus::Corpus &corpus, const FeatureConfig &config,
                       const text::LexiconSet &lex, FeatureRegistry &registry);

// Debug dump: `<id>\t<label>\t<name>=<value>,...` per row.
void WriteVectorDump(std::ostream &out, const corpus::Corpus &corpus,
                     const Design &design, const FeatureRegistry &registry);

}  // namespace soberlens::features

#endif  // SOBERLENS_FEATURES_EXTRACTOR_H_
