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

#ifndef SOBERLENS_TEXT_TOKENIZER_H_
#define SOBERLENS_TEXT_TOKENIZER_H_

#include <string>
#include <string_view>
#include <vector>

namespace soberlens::text {

enum class TokenKind { kWord, kEmoticon, kHashtag, kMention, kPunct, kNumber };

std::string_view TokenKindName(TokenKind kind);

struct Token {
  std::string surface;
  // Lowercased for words, hashtags and mentions; the surface otherwise.
  std::string normalized;
  TokenKind kind = TokenKind::kWord;

  bool operator==(const Token &) const = default;
};

const std::vector<std::string> &DefaultEmoticons();

// Deterministic left-to-right scanner for short social-media texts.
//
// Whitespace separates tokens and is never part of one. At each position the
// scanner tries, in order: the emoticon patterns (longest match wins),
// hashtags (#word), mentions (@word), words and numbers, and finally runs of
// punctuation. Words keep internal apostrophes ("can't"), so contractions
// stay whole. A pattern that begins (ends) with a letter or digit only
// matches at a left (right) word boundary, and no pattern matches between two
// word characters, which keeps "http://" and "Re:Dear" out of the emoticons.
class Tokenizer {
 public:
  Tokenizer();
  explicit Tokenizer(std::vector<std::string> emoticon_patterns);

  std::vector<Token> Tokenize(std::string_view text) const;

  const std::vector<std::string> &patterns() const { return patterns_; }

 private:
  std::size_t MatchEmoticon(std::string_view text, std::size_t pos) const;

  // Sorted by length, longest first.
  std::vector<std::string> patterns_;
};

// Tokenizes with the default emoticon list.
std::vector<Token> Tokenize(std::string_view text);

}  // namespace soberlens::text

#endif  // SOBERLENS_TEXT_TOKENIZER_H_
