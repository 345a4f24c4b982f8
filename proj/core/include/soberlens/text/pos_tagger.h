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

#ifndef SOBERLENS_TEXT_POS_TAGGER_H_
#define SOBERLENS_TEXT_POS_TAGGER_H_

#include <span>
#include <string_view>
#include <vector>

#include "soberlens/text/lexicon.h"
#include "soberlens/text/tokenizer.h"

namespace soberlens::text {

struct TaggedToken {
  Token token;
  PosTag tag = PosTag::kOther;
};

// Tag for a single normalized word: lexicon entry if present, else the first
// matching suffix rule (-ly adverb; -ing, -ed verb; -ous, -ful, -able
// adjective), else noun. Suffix rules need at least two characters of stem,
// so "bed" and "red" stay nouns.
PosTag TagWord(std::string_view normalized, const LexiconSet &lex);

// One tag per token. Non-word tokens are tagged kOther.
std::vector<TaggedToken> TagPartsOfSpeech(std::span<const Token> tokens,
                                          const LexiconSet &lex);

}  // namespace soberlens::text

#endif  // SOBERLENS_TEXT_POS_TAGGER_H_
