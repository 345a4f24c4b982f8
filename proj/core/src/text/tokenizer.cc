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

#include "soberlens/text/tokenizer.h"

#include <algorithm>

#include "soberlens/common/utf8.h"

namespace soberlens::text {

namespace {

bool IsAsciiAlnum(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9');
}

bool IsDigit(char c) { return c >= '0' && c <= '9'; }

// Emoji, dingbats, arrows and general punctuation are symbols, not letters.
bool IsSymbolCodePoint(char32_t c) {
  return (c >= 0x2000 && c <= 0x2BFF) || (c >= 0x1F000 && c <= 0x1FAFF) ||
         (c >= 0xFE00 && c <= 0xFE0F) || c == 0x200D || c == 0xA0 ||
         (c >= 0xA1 && c <= 0xBF) || c == 0xD7 || c == 0xF7;
}

bool IsApostrophe(char32_t c) { return c == U'\'' || c == 0x2019; }

struct Scan {
  std::string_view text;

  char32_t PeekAt(std::size_t pos, std::size_t *len = nullptr) const {
    std::size_t next = pos;
    char32_t c = utf8::Decode(text, next);
    if (len) *len = next - pos;
    return c;
  }

  bool IsWordChar(std::size_t pos) const {
    if (pos >= text.size()) return false;
    const char b = text[pos];
    if (static_cast<unsigned char>(b) < 0x80) return IsAsciiAlnum(b) || b == '_';
    return !IsSymbolCodePoint(PeekAt(pos));
  }

  bool IsSpaceAt(std::size_t pos) const {
    return pos < text.size() && utf8::IsSpace(text[pos]);
  }

  // Byte length of the code point at pos.
  std::size_t Width(std::size_t pos) const {
    std::size_t len = 0;
    PeekAt(pos, &len);
    return len;
  }

  // Start of the code point ending just before pos.
  std::size_t PrevStart(std::size_t pos) const {
    std::size_t p = pos - 1;
    while (p > 0 && (static_cast<unsigned char>(text[p]) & 0xC0) == 0x80) --p;
    return p;
  }
};

}  // namespace

std::string_view TokenKindName(TokenKind kind) {
  switch (kind) {
    case TokenKind::kWord:
      return "Word";
    case TokenKind::kEmoticon:
      return "Emoticon";
    case TokenKind::kHashtag:
      return "Hashtag";
    case TokenKind::kMention:
      return "Mention";
    case TokenKind::kPunct:
      return "Punct";
    case TokenKind::kNumber:
      return "Number";
  }
  return "?";
}

const std::vector<std::string> &DefaultEmoticons() {
  static const std::vector<std::string> kDefaults = {
      ":)", ":(", ":D", ":P", ":p", ";)", ":/", "<3", ":-)", ":-(", ":-D",
      ":-P", ";-)", ":-/", "(:", "):", "D:", "(;", "</3", ":'(", ":O", ":o",
      "xD", "XD"};
  return kDefaults;
}

Tokenizer::Tokenizer() : Tokenizer(DefaultEmoticons()) {}

Tokenizer::Tokenizer(std::vector<std::string> emoticon_patterns)
    : patterns_(std::move(emoticon_patterns)) {
  std::erase_if(patterns_, [](const std::string &p) { return p.empty(); });
  std::stable_sort(patterns_.begin(), patterns_.end(),
                   [](const std::string &a, const std::string &b) {
                     return a.size() > b.size();
                   });
}

std::size_t Tokenizer::MatchEmoticon(std::string_view text,
                                     std::size_t pos) const {
  Scan scan{text};
  const bool word_before = pos > 0 && scan.IsWordChar(scan.PrevStart(pos));
  for (const std::string &p : patterns_) {
    if (text.substr(pos, p.size()) != p) continue;
    const std::size_t end = pos + p.size();
    const bool word_after =
        scan.IsWordChar(end) || (end < text.size() && text[end] == '/');
    if (IsAsciiAlnum(p.front()) && word_before) continue;
    if (IsAsciiAlnum(p.back()) && word_after) continue;
    if (word_before && word_after) continue;
    return p.size();
  }
  return 0;
}

std::vector<Token> Tokenizer::Tokenize(std::string_view text) const {
  std::vector<Token> tokens;
  Scan scan{text};
  std::size_t pos = 0;

  auto emit = [&](std::size_t begin, std::size_t end, TokenKind kind) {
    Token token;
    token.surface = std::string(text.substr(begin, end - begin));
    token.kind = kind;
    if (kind == TokenKind::kWord || kind == TokenKind::kHashtag ||
        kind == TokenKind::kMention) {
      token.normalized = utf8::Lowercase(token.surface);
    } else {
      token.normalized = token.surface;
    }
    tokens.push_back(std::move(token));
  };

  // Consumes a word starting at pos; returns its end and whether it had a
  // non-digit character.
  auto scan_word = [&](std::size_t start, bool *has_letter) {
    std::size_t p = start;
    *has_letter = false;
    while (p < text.size()) {
      if (scan.IsWordChar(p)) {
        if (!IsDigit(text[p])) *has_letter = true;
        p += scan.Width(p);
        continue;
      }
      std::size_t width = 0;
      char32_t c = scan.PeekAt(p, &width);
      const std::size_t next = p + width;
      if (IsApostrophe(c) && scan.IsWordChar(next) && !IsDigit(text[next])) {
        p = next;
        continue;
      }
      // 3.5, 1,000 stay together as one number.
      if ((c == U'.' || c == U',') && p > start && IsDigit(text[p - 1]) &&
          next < text.size() && IsDigit(text[next])) {
        p = next;
        continue;
      }
      break;
    }
    return p;
  };

  while (pos < text.size()) {
    if (scan.IsSpaceAt(pos)) {
      ++pos;
      continue;
    }
    if (std::size_t len = MatchEmoticon(text, pos); len > 0) {
      emit(pos, pos + len, TokenKind::kEmoticon);
      pos += len;
      continue;
    }
    const char c = text[pos];
    if ((c == '#' || c == '@') && scan.IsWordChar(pos + 1)) {
      std::size_t end = pos + 1;
      while (scan.IsWordChar(end)) end += scan.Width(end);
      emit(pos, end,
           c == '#' ? TokenKind::kHashtag : TokenKind::kMention);
      pos = end;
      continue;
    }
    if (scan.IsWordChar(pos)) {
      bool has_letter = false;
      std::size_t end = scan_word(pos, &has_letter);
      emit(pos, end, has_letter ? TokenKind::kWord : TokenKind::kNumber);
      pos = end;
      continue;
    }
    // Punctuation run: stops at whitespace, word characters, tags and
    // emoticons.
    std::size_t end = pos + scan.Width(pos);
    while (end < text.size() && !scan.IsSpaceAt(end) && !scan.IsWordChar(end) &&
           MatchEmoticon(text, end) == 0 &&
           !((text[end] == '#' || text[end] == '@') &&
             scan.IsWordChar(end + 1))) {
      end += scan.Width(end);
    }
    emit(pos, end, TokenKind::kPunct);
    pos = end;
  }
  return tokens;
}

std::vector<Token> Tokenize(std::string_view text) {
  static const Tokenizer kDefault;
  return kDefault.Tokenize(text);
}

}  // namespace soberlens::text
