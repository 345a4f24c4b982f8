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

#ifndef SOBERLENS_COMMON_UTF8_H_
#define SOBERLENS_COMMON_UTF8_H_

#include <cstddef>
#include <string>
#include <string_view>

namespace soberlens::utf8 {

// Length in bytes of the well-formed UTF-8 sequence starting at `pos`, or 0
// if the bytes there are not a valid encoding (overlong forms, surrogates and
// code points above U+10FFFF are invalid).
std::size_t ValidSequenceLength(std::string_view text, std::size_t pos);

// Drops every byte that is not part of a well-formed sequence.
std::string StripInvalid(std::string_view text);

// Decodes the sequence at `pos` (which must be valid) and advances `pos`.
char32_t Decode(std::string_view text, std::size_t &pos);

bool IsUpper(char32_t c);

// ASCII and Latin-1 lowercasing; other code points are returned unchanged.
char32_t ToLower(char32_t c);

// Lowercases ASCII and Latin-1 letters, leaving all other bytes intact.
std::string Lowercase(std::string_view text);

void Append(std::string &out, char32_t c);

inline bool IsSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

}  // namespace soberlens::utf8

#endif  // SOBERLENS_COMMON_UTF8_H_
