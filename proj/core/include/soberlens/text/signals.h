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

#ifndef SOBERLENS_TEXT_SIGNALS_H_
#define SOBERLENS_TEXT_SIGNALS_H_

#include <span>
#include <string_view>
#include <vector>

#include "soberlens/text/lexicon.h"
#include "soberlens/text/pos_tagger.h"
#include "soberlens/text/tokenizer.h"

// Token-level stylistic signals. All functions are pure.
namespace soberlens::text {

// Marks word tokens that look like named entities: capitalized, not the first
// word of the text, and unknown to the dictionary in lowercase form.
std::vector<bool> NamedEntityMask(std::span<const Token> tokens,
                                  const WordSet &dictionary);

int CountNamedEntities(std::span<const TaggedToken> tagged,
                       const WordSet &dictionary);

// True if a word token is missing from the dictionary. Named entities and
// non-word tokens are exempt. Throws ConfigError on an empty dictionary.
bool HasSpellingError(std::span<const Token> tokens, const WordSet &dictionary);

// True if some code point occurs `run` or more times in a row, ignoring case.
bool HasCharRun(std::string_view word, int run = 3);

// Any word token with a character repeated three or more times.
bool HasRepeatedChars(std::span<const Token> tokens);

// Uppercase letters (ASCII and Latin-1) in the raw text.
int CountCapitals(std::string_view text);

struct EmoticonStats {
  bool present = false;
  int count = 0;
};

EmoticonStats DetectEmoticons(std::span<const Token> tokens);

int CountDiscourseConnectors(std::span<const Token> tokens,
                             const WordSet &connectors);

}  // namespace soberlens::text

#endif  // SOBERLENS_TEXT_SIGNALS_H_
