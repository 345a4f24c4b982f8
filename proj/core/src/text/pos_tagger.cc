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

#include "soberlens/text/pos_tagger.h"

#include <array>
#include <string>
#include <utility>

namespace soberlens::text {

namespace {

constexpr std::size_t kMinStem = 2;

constexpr std::array<std::pair<std::string_view, PosTag>, 6> kSuffixRules = {{
    {"ly", PosTag::kAdverb},
    {"ing", PosTag::kVerb},
    {"ed", PosTag::kVerb},
    {"ous", PosTag::kAdjective},
    {"ful", PosTag::kAdjective},
    {"able", PosTag::kAdjective},
}};

}  // namespace

PosTag TagWord(std::string_view normalized, const LexiconSet &lex) {
  if (auto it = lex.pos_lexicon.find(std::string(normalized));
      it != lex.pos_lexicon.end()) {
    return it->second;
  }
  for (const auto &[suffix, tag] : kSuffixRules) {
    if (normalized.size() >= suffix.size() + kMinStem &&
        normalized.ends_with(suffix)) {
      return tag;
    }
  }
  return PosTag::kNoun;
}

std::vector<TaggedToken> TagPartsOfSpeech(std::span<const Token> tokens,
                                          const LexiconSet &lex) {
  std::vector<TaggedToken> tagged;
  tagged.reserve(tokens.size());
  for (const Token &token : tokens) {
    PosTag tag = token.kind == TokenKind::kWord
                     ? TagWord(token.normalized, lex)
                     : PosTag::kOther;
    tagged.push_back({token, tag});
  }
  return tagged;
}

}  // namespace soberlens::text
