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

#include "support/synthetic.h"

#include <array>

namespace soberlens::testing {

namespace {

constexpr std::array<const char *, 12> kSyllables = {
    "ba", "ke", "mi", "ro", "tu", "sa", "ne", "lo", "pi", "du", "fe", "go"};

std::string Pick(Rng &rng, const std::vector<std::string> &words) {
  return words[rng.Below(words.size())];
}

// Replaces the first vowel with 'q', which never appears in pseudo-words.
std::string Misspell(std::string word) {
  for (char &c : word) {
    if (c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u') {
      c = 'q';
      break;
    }
  }
  return word;
}

std::string Stretch(std::string word) {
  word.insert(word.size() - 1, 2, word.back());
  return word;
}

}  // namespace

text::LexiconSet TestLexicon() {
  text::LexiconSet lex;
  lex.dictionary = {"i",     "am",   "so",    "happy", "the",   "party",
                    "was",   "good", "we",    "went",  "to",    "bar",
                    "and",   "then", "home",  "but",   "sad",   "this",
                    "is",    "bad",  "quickly", "walking", "nice", "a",
                    "day",   "lol",  "beer",  "love",  "you",   "friends",
                    "at",    "night", "because", "tired", "cannot", "wait",
                    "for",   "tomorrow", "hate", "morning", "it", "my",
                    "dog",   "saw",  "with", "in", "played"};
  lex.sentiment_positive = {"happy", "good", "nice", "love"};
  lex.sentiment_negative = {"sad", "bad", "hate", "tired"};
  lex.connectors = {"and", "but", "then", "because"};
  lex.stopwords = {"i", "am", "the", "was", "to", "and", "a", "is", "it"};
  lex.emoticon_patterns = {":)", ":(", ":D", ";)", "<3", ":-)"};
  lex.pos_lexicon = {{"i", text::PosTag::kPronoun},
                     {"we", text::PosTag::kPronoun},
                     {"you", text::PosTag::kPronoun},
                     {"it", text::PosTag::kPronoun},
                     {"my", text::PosTag::kDeterminer},
                     {"am", text::PosTag::kVerb},
                     {"was", text::PosTag::kVerb},
                     {"is", text::PosTag::kVerb},
                     {"went", text::PosTag::kVerb},
                     {"saw", text::PosTag::kVerb},
                     {"love", text::PosTag::kVerb},
                     {"hate", text::PosTag::kVerb},
                     {"wait", text::PosTag::kVerb},
                     {"cannot", text::PosTag::kVerb},
                     {"so", text::PosTag::kAdverb},
                     {"then", text::PosTag::kAdverb},
                     {"happy", text::PosTag::kAdjective},
                     {"good", text::PosTag::kAdjective},
                     {"sad", text::PosTag::kAdjective},
                     {"bad", text::PosTag::kAdjective},
                     {"nice", text::PosTag::kAdjective},
                     {"tired", text::PosTag::kAdjective},
                     {"the", text::PosTag::kDeterminer},
                     {"a", text::PosTag::kDeterminer},
                     {"this", text::PosTag::kDeterminer},
                     {"to", text::PosTag::kPreposition},
                     {"at", text::PosTag::kPreposition},
                     {"for", text::PosTag::kPreposition},
                     {"with", text::PosTag::kPreposition},
                     {"in", text::PosTag::kPreposition},
                     {"and", text::PosTag::kConjunction},
                     {"but", text::PosTag::kConjunction},
                     {"because", text::PosTag::kConjunction},
                     {"lol", text::PosTag::kInterjection}};
  return lex;
}

std::string PseudoWord(std::size_t i) {
  std::string word;
  std::size_t n = i;
  for (int s = 0; s < 3 || n > 0; ++s) {
    word += kSyllables[n % kSyllables.size()];
    n /= kSyllables.size();
  }
  return word;
}

SyntheticWorld MakeSyntheticWorld(const SyntheticCorpusOptions &options) {
  SyntheticWorld world;
  std::vector<std::string> drunk_words, sober_words, shared_words;
  std::size_t next = 0;
  for (int i = 0; i < options.class_vocab; ++i) drunk_words.push_back(PseudoWord(next++));
  for (int i = 0; i < options.class_vocab; ++i) sober_words.push_back(PseudoWord(next++));
  for (int i = 0; i < options.shared_vocab; ++i) shared_words.push_back(PseudoWord(next++));
  for (const auto *list : {&drunk_words, &sober_words, &shared_words}) {
    world.lex.dictionary.insert(list->begin(), list->end());
  }
  for (std::size_t i = 0; i < 20; ++i) {
    world.lex.sentiment_positive.insert(shared_words[i]);
    world.lex.sentiment_negative.insert(shared_words[20 + i]);
  }
  world.lex.emoticon_patterns = {":)", ":("};

  Rng rng(options.seed);
  auto make = [&](bool drunk, int serial) {
    const auto &own = drunk ? drunk_words : sober_words;
    const int span = options.max_words - options.min_words + 1;
    const int n = options.min_words + static_cast<int>(rng.Below(span));
    std::vector<std::string> words;
    for (int i = 0; i < n; ++i) {
      words.push_back(rng.Uniform() < options.class_word_rate
                          ? Pick(rng, own)
                          : Pick(rng, shared_words));
    }
    const double misspell =
        drunk ? options.drunk_misspell_rate : options.sober_misspell_rate;
    const double repeat =
        drunk ? options.drunk_repeat_rate : options.sober_repeat_rate;
    if (rng.Uniform() < misspell) {
      std::string &w = words[rng.Below(words.size())];
      w = Misspell(w);
    }
    if (rng.Uniform() < repeat) {
      std::string &w = words[rng.Below(words.size())];
      w = Stretch(w);
    }
    std::string text;
    for (const std::string &w : words) text += w + ' ';
    text += drunk ? "#drunk" : "#sober";
    corpus::RawRecord record;
    record.id = (drunk ? "d" : "s") + std::to_string(serial);
    record.user = "u" + std::to_string(rng.Below(400));
    record.text = std::move(text);
    return record;
  };
  for (int i = 0; i < options.n_drunk; ++i) world.records.push_back(make(true, i));
  for (int i = 0; i < options.n_sober; ++i) world.records.push_back(make(false, i));
  std::span<corpus::RawRecord> all(world.records);
  rng.Shuffle(all);
  return world;
}

std::vector<corpus::RawRecord> RandomRecords(Rng &rng, std::size_t n,
                                             const std::string &id_prefix) {
  static const std::vector<std::string> kWords = {
      "party", "beer",  "home", "night", "so",   "happy", "Tired",
      "LOL",   "went",  "bar",  "with",  "you",  "sooo",  "can't",
      ":)",    "!!!",   "@pal", "#fun",  "42",   "café"};
  static const std::vector<std::string> kTags = {
      "#drunk", "#Drunk", "#drank!", "#imdrunk", "#notdrunk",
      "#imnotdrunk", "#sober", "#SOBER.", "#drunkard", "#soberly"};
  static const std::vector<std::string> kLinks = {
      "http://x.co/a", "https://t.co/b", "WWW.example.com"};
  std::vector<corpus::RawRecord> records;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::string> tokens;
    const int words = 2 + static_cast<int>(rng.Below(10));
    for (int w = 0; w < words; ++w) tokens.push_back(Pick(rng, kWords));
    const int tags = static_cast<int>(rng.Below(4));
    for (int t = 0; t < tags; ++t) {
      tokens.insert(tokens.begin() + rng.Below(tokens.size() + 1),
                    Pick(rng, kTags));
    }
    if (rng.Below(10) == 0) {
      tokens.insert(tokens.begin() + rng.Below(tokens.size() + 1),
                    Pick(rng, kLinks));
    }
    std::string text;
    for (std::size_t t = 0; t < tokens.size(); ++t) {
      text += (t ? (rng.Below(5) == 0 ? "  " : " ") : "") + tokens[t];
    }
    if (rng.Below(20) == 0) text += "\xff";
    corpus::RawRecord record;
    record.id = id_prefix + std::to_string(i);
    record.user = "user" + std::to_string(rng.Below(30));
    record.text = std::move(text);
    records.push_back(std::move(record));
  }
  return records;
}

}  // namespace soberlens::testing
