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

#include "soberlens/text/signals.h"

#include "soberlens/common/error.h"
#include "soberlens/common/utf8.h"

namespace soberlens::text {

namespace {

bool StartsUpper(std::string_view surface) {
  if (surface.empty()) return false;
  std::size_t pos = 0;
  return utf8::IsUpper(utf8::Decode(surface, pos));
}

}  // namespace

std::vector<bool> NamedEntityMask(std::span<const Token> tokens,
                                  const WordSet &dictionary) {
  std::vector<bool> mask(tokens.size(), false);
  bool seen_word = false;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const Token &t = tokens[i];
    if (t.kind != TokenKind::kWord) continue;
    if (seen_word && StartsUpper(t.surface) && !dictionary.count(t.normalized)) {
      mask[i] = true;
    }
    seen_word = true;
  }
  return mask;
}

int CountNamedEntities(std::span<const TaggedToken> tagged,
                       const WordSet &dictionary) {
  std::vector<Token> tokens;
  tokens.reserve(tagged.size());
  for (const TaggedToken &t : tagged) tokens.push_back(t.token);
  int count = 0;
  for (bool is_entity : NamedEntityMask(tokens, dictionary)) count += is_entity;
  return count;
}

bool HasSpellingError(std::span<const Token> tokens,
                      const WordSet &dictionary) {
  if (dictionary.empty()) throw ConfigError("spelling dictionary is empty");
  std::vector<bool> entities = NamedEntityMask(tokens, dictionary);
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (tokens[i].kind != TokenKind::kWord || entities[i]) continue;
    if (!dictionary.count(tokens[i].normalized)) return true;
  }
  return false;
}

bool HasCharRun(std::string_view word, int run) {
  std::size_t pos = 0;
  char32_t previous = 0;
  int length = 0;
  while (pos < word.size()) {
    char32_t c = utf8::ToLower(utf8::Decode(word, pos));
    length = (length > 0 && c == previous) ? length + 1 : 1;
    if (length >= run) return true;
    previous = c;
  }
  return false;
}

bool HasRepeatedChars(std::span<const Token> tokens) {
  for (const Token &t : tokens) {
    if (t.kind == TokenKind::kWord && HasCharRun(t.surface)) return true;
  }
  return false;
}

int CountCapitals(std::string_view text) {
  int count = 0;
  std::size_t pos = 0;
  while (pos < text.size()) count += utf8::IsUpper(utf8::Decode(text, pos));
  return count;
}

EmoticonStats DetectEmoticons(std::span<const Token> tokens) {
  EmoticonStats stats;
  for (const Token &t : tokens) stats.count += t.kind == TokenKind::kEmoticon;
  stats.present = stats.count > 0;
  return stats;
}

int CountDiscourseConnectors(std::span<const Token> tokens,
                             const WordSet &connectors) {
  int count = 0;
  for (const Token &t : tokens) {
    if (t.kind == TokenKind::kWord && connectors.count(t.normalized)) ++count;
  }
  return count;
}

}  // namespace soberlens::text
