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

#include "soberlens/text/lexicon.h"

#include <fstream>
#include <istream>

#include "soberlens/common/error.h"
#include "soberlens/common/utf8.h"
#include "soberlens/text/tokenizer.h"

namespace soberlens::text {

namespace {

std::string_view Trim(std::string_view s) {
  while (!s.empty() && utf8::IsSpace(s.front())) s.remove_prefix(1);
  while (!s.empty() && utf8::IsSpace(s.back())) s.remove_suffix(1);
  return s;
}

bool IsLowercase(std::string_view word) { return utf8::Lowercase(word) == word; }

// Splits a `key<TAB>value` line; returns false for skippable lines.
bool SplitTabbed(std::string_view line, const std::string &source,
                 std::size_t line_no, std::string &key, std::string &value) {
  std::string_view trimmed = Trim(line);
  if (trimmed.empty() || trimmed.front() == '#') return false;
  std::size_t tab = trimmed.find('\t');
  if (tab == std::string_view::npos) {
    throw ParseError(source, line_no, "expected word<TAB>value");
  }
  key = std::string(Trim(trimmed.substr(0, tab)));
  value = std::string(Trim(trimmed.substr(tab + 1)));
  if (key.empty() || value.empty()) {
    throw ParseError(source, line_no, "empty word or value");
  }
  return true;
}

std::ifstream OpenOrThrow(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open lexicon file " + path.string());
  return in;
}

}  // namespace

std::string_view PosTagName(PosTag tag) {
  switch (tag) {
    case PosTag::kNoun:
      return "NOUN";
    case PosTag::kVerb:
      return "VERB";
    case PosTag::kAdjective:
      return "ADJ";
    case PosTag::kAdverb:
      return "ADV";
    case PosTag::kPronoun:
      return "PRON";
    case PosTag::kPreposition:
      return "PREP";
    case PosTag::kDeterminer:
      return "DET";
    case PosTag::kConjunction:
      return "CONJ";
    case PosTag::kInterjection:
      return "INTJ";
    case PosTag::kOther:
      return "OTHER";
  }
  return "OTHER";
}

PosTag ParsePosTag(std::string_view name) {
  for (PosTag tag :
       {PosTag::kNoun, PosTag::kVerb, PosTag::kAdjective, PosTag::kAdverb,
        PosTag::kPronoun, PosTag::kPreposition, PosTag::kDeterminer,
        PosTag::kConjunction, PosTag::kInterjection, PosTag::kOther}) {
    if (PosTagName(tag) == name) return tag;
  }
  throw ConfigError("unknown POS tag '" + std::string(name) + "'");
}

void LexiconSet::Validate() const {
  if (dictionary.empty()) throw ConfigError("spelling dictionary is empty");
  for (const std::string &w : sentiment_positive) {
    if (sentiment_negative.count(w)) {
      throw ConfigError("word '" + w + "' is both positive and negative");
    }
  }
  auto check_lower = [](const WordSet &set, std::string_view what) {
    for (const std::string &w : set) {
      if (!IsLowercase(w)) {
        throw ConfigError(std::string(what) + " entry '" + w +
                          "' is not lowercase");
      }
    }
  };
  check_lower(dictionary, "dictionary");
  check_lower(sentiment_positive, "sentiment");
  check_lower(sentiment_negative, "sentiment");
  check_lower(connectors, "connector");
  check_lower(stopwords, "stopword");
  for (const auto &[w, tag] : pos_lexicon) {
    if (!IsLowercase(w)) {
      throw ConfigError("POS lexicon entry '" + w + "' is not lowercase");
    }
  }
}

std::vector<std::string> ReadEntries(std::istream &in) {
  std::vector<std::string> entries;
  std::string line;
  while (std::getline(in, line)) {
    std::string_view entry = Trim(line);
    if (entry.empty() || entry.front() == '#') continue;
    entries.emplace_back(entry);
  }
  return entries;
}

WordSet ReadWordList(std::istream &in) {
  std::vector<std::string> entries = ReadEntries(in);
  return WordSet(entries.begin(), entries.end());
}

std::unordered_map<std::string, PosTag> ReadPosLexicon(
    std::istream &in, const std::string &source) {
  std::unordered_map<std::string, PosTag> lexicon;
  std::string line, word, tag;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!SplitTabbed(line, source, line_no, word, tag)) continue;
    try {
      lexicon[word] = ParsePosTag(tag);
    } catch (const ConfigError &e) {
      throw ParseError(source, line_no, e.what());
    }
  }
  return lexicon;
}

void ReadSentimentLexicon(std::istream &in, const std::string &source,
                          WordSet &positive, WordSet &negative) {
  std::string line, word, polarity;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!SplitTabbed(line, source, line_no, word, polarity)) continue;
    if (polarity == "positive") {
      positive.insert(word);
    } else if (polarity == "negative") {
      negative.insert(word);
    } else {
      throw ParseError(source, line_no,
                       "polarity must be positive or negative");
    }
  }
}

LexiconSet LoadLexiconDir(const std::filesystem::path &dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) {
    throw ConfigError("lexicon directory not found: " + dir.string());
  }
  LexiconSet lex;
  {
    std::ifstream in = OpenOrThrow(dir / "dictionary.txt");
    lex.dictionary = ReadWordList(in);
  }
  if (fs::exists(dir / "sentiment.tsv")) {
    std::ifstream in = OpenOrThrow(dir / "sentiment.tsv");
    ReadSentimentLexicon(in, (dir / "sentiment.tsv").string(),
                         lex.sentiment_positive, lex.sentiment_negative);
  }
  if (fs::exists(dir / "connectors.txt")) {
    std::ifstream in = OpenOrThrow(dir / "connectors.txt");
    lex.connectors = ReadWordList(in);
  }
  if (fs::exists(dir / "stopwords.txt")) {
    std::ifstream in = OpenOrThrow(dir / "stopwords.txt");
    lex.stopwords = ReadWordList(in);
  }
  if (fs::exists(dir / "pos.tsv")) {
    std::ifstream in = OpenOrThrow(dir / "pos.tsv");
    lex.pos_lexicon = ReadPosLexicon(in, (dir / "pos.tsv").string());
  }
  if (fs::exists(dir / "emoticons.txt")) {
    std::ifstream in = OpenOrThrow(dir / "emoticons.txt");
    lex.emoticon_patterns = ReadEntries(in);
  } else {
    lex.emoticon_patterns = DefaultEmoticons();
  }
  lex.Validate();
  return lex;
}

}  // namespace soberlens::text
