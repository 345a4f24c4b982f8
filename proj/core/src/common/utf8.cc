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

#include "soberlens/common/utf8.h"

namespace soberlens::utf8 {

namespace {

bool IsContinuation(unsigned char c) { return (c & 0xC0) == 0x80; }

}  // namespace

std::size_t ValidSequenceLength(std::string_view text, std::size_t pos) {
  const auto at = [&](std::size_t i) {
    return static_cast<unsigned char>(text[i]);
  };
  const std::size_t remaining = text.size() - pos;
  const unsigned char lead = at(pos);
  if (lead < 0x80) return 1;
  if (lead >= 0xC2 && lead <= 0xDF) {
    return remaining >= 2 && IsContinuation(at(pos + 1)) ? 2 : 0;
  }
  if (lead >= 0xE0 && lead <= 0xEF) {
    if (remaining < 3) return 0;
    const unsigned char b1 = at(pos + 1);
    if (!IsContinuation(b1) || !IsContinuation(at(pos + 2))) return 0;
    if (lead == 0xE0 && b1 < 0xA0) return 0;  // overlong
    if (lead == 0xED && b1 >= 0xA0) return 0;  // surrogate
    return 3;
  }
  if (lead >= 0xF0 && lead <= 0xF4) {
    if (remaining < 4) return 0;
    const unsigned char b1 = at(pos + 1);
    if (!IsContinuation(b1) || !IsContinuation(at(pos + 2)) ||
        !IsContinuation(at(pos + 3))) {
      return 0;
    }
    if (lead == 0xF0 && b1 < 0x90) return 0;  // overlong
    if (lead == 0xF4 && b1 >= 0x90) return 0;  // above U+10FFFF
    return 4;
  }
  return 0;
}

std::string StripInvalid(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t len = ValidSequenceLength(text, pos);
    if (len == 0) {
      ++pos;
      continue;
    }
    out.append(text.substr(pos, len));
    pos += len;
  }
  return out;
}

char32_t Decode(std::string_view text, std::size_t &pos) {
  const unsigned char lead = static_cast<unsigned char>(text[pos]);
  std::size_t len = ValidSequenceLength(text, pos);
  if (len == 0) {
    ++pos;
    return U'�';
  }
  char32_t c;
  switch (len) {
    case 1:
      c = lead;
      break;
    case 2:
      c = lead & 0x1F;
      break;
    case 3:
      c = lead & 0x0F;
      break;
    default:
      c = lead & 0x07;
      break;
  }
  for (std::size_t i = 1; i < len; ++i) {
    c = (c << 6) | (static_cast<unsigned char>(text[pos + i]) & 0x3F);
  }
  pos += len;
  return c;
}

bool IsUpper(char32_t c) {
  if (c >= U'A' && c <= U'Z') return true;
  return c >= 0xC0 && c <= 0xDE && c != 0xD7;
}

char32_t ToLower(char32_t c) { return IsUpper(c) ? c + 0x20 : c; }

void Append(std::string &out, char32_t c) {
  if (c < 0x80) {
    out.push_back(static_cast<char>(c));
  } else if (c < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (c >> 6)));
    out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
  } else if (c < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (c >> 12)));
    out.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (c >> 18)));
    out.push_back(static_cast<char>(0x80 | ((c >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
  }
}

std::string Lowercase(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t start = pos;
    if (ValidSequenceLength(text, pos) == 0) {
      out.push_back(text[pos++]);
      continue;
    }
    char32_t c = Decode(text, pos);
    if (IsUpper(c)) {
      Append(out, ToLower(c));
    } else {
      out.append(text.substr(start, pos - start));
    }
  }
  return out;
}

}  // namespace soberlens::utf8
