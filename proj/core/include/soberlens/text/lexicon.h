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

#ifndef SOBERLENS_TEXT_LEXICON_H_
#define SOBERLENS_TEXT_LEXICON_H_

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace soberlens::text {

using WordSet = std::unordered_set<std::string>;

enum class PosTag {
  kNoun,
  kVerb,
  kAdjective,
  kAdverb,
  kPronoun,
  kPreposition,
  kDeterminer,
  kConjunction,
  kInterjection,
  kOther,
};

// Short uppercase names used in lexicon files: NOUN, VERB, ADJ, ADV, PRON,
// PREP, DET, CONJ, INTJ, OTHER.
std::string_view PosTagName(PosTag tag);
PosTag ParsePosTag(std::string_view name);

// Word lists used by the stylistic signals. Read-only after loading.
struct LexiconSet {
  WordSet dictionary;
  WordSet sentiment_positive;
  WordSet sentiment_negative;
  WordSet connectors;
  WordSet stopwords;
  std::vector<std::string> emoticon_patterns;
  std::unordered_map<std::string, PosTag> pos_lexicon;

  // Throws ConfigError if the sentiment sets overlap, a word entry is not
  // lowercase, or the dictionary is empty.
  void Validate() const;
};

// One entry per line; blank lines and lines starting with '#' are skipped.
// Surrounding whitespace is trimmed.
std::vector<std::string> ReadEntries(std::istream &in);

WordSet ReadWordList(std::istream &in);

// `word<TAB>TAG` lines.
std::unordered_map<std::string, PosTag> ReadPosLexicon(
    std::istream &in, const std::string &source);

// `word<TAB>positive|negative` lines.
void ReadSentimentLexicon(std::istream &in, const std::string &source,
                          WordSet &positive, WordSet &negative);

// Loads dictionary.txt, sentiment.tsv, connectors.txt, stopwords.txt,
// pos.tsv and emoticons.txt from `dir`. Missing optional files (everything
// but dictionary.txt) leave the corresponding set empty, except emoticons,
// which fall back to the built-in list. The result is validated.
LexiconSet LoadLexiconDir(const std::filesystem::path &dir);

}  // namespace soberlens::text

#endif  // SOBERLENS_TEXT_LEXICON_H_
