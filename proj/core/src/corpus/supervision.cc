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

#include "soberlens/corpus/supervision.h"

#include <vector>

#include "soberlens/common/error.h"
#include "soberlens/common/utf8.h"

namespace soberlens::corpus {

namespace {

struct Span {
  std::size_t begin;
  std::size_t end;
};

std::vector<Span> WhitespaceTokens(std::string_view text) {
  std::vector<Span> spans;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && utf8::IsSpace(text[pos])) ++pos;
    if (pos == text.size()) break;
    std::size_t begin = pos;
    while (pos < text.size() && !utf8::IsSpace(text[pos])) ++pos;
    spans.push_back({begin, pos});
  }
  return spans;
}

bool IsTagChar(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9') || c == '_';
}

bool IsAsciiPunct(char c) {
  return (c >= '!' && c <= '/') || (c >= ':' && c <= '@') ||
         (c >= '[' && c <= '`') || (c >= '{' && c <= '~');
}

// Splits a token into its lowercased hashtag part and the trailing remainder.
// Returns false when the token is not a hashtag followed by punctuation only.
bool SplitHashtag(std::string_view token, std::string &tag,
                  std::string_view &rest) {
  if (token.size() < 2 || token[0] != '#') return false;
  std::size_t end = 1;
  while (end < token.size() && IsTagChar(token[end])) ++end;
  if (end == 1) return false;
  rest = token.substr(end);
  for (char c : rest) {
    if (!IsAsciiPunct(c)) return false;
  }
  tag = utf8::Lowercase(token.substr(0, end));
  return true;
}

bool StartsWithIgnoreCase(std::string_view s, std::string_view prefix) {
  if (s.size() < prefix.size()) return false;
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    char c = s[i];
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    if (c != prefix[i]) return false;
  }
  return true;
}

}  // namespace

void FilterRules::Validate() const {
  if (min_words < 1) throw ConfigError("min_words must be at least 1");
}

void SupervisionTags::Validate() const {
  auto check = [](const std::set<std::string> &set) {
    for (const std::string &tag : set) {
      if (tag.size() < 2 || tag[0] != '#') {
        throw ConfigError("supervision tag '" + tag + "' must start with '#'");
      }
      if (utf8::Lowercase(tag) != tag) {
        throw ConfigError("supervision tag '" + tag + "' must be lowercase");
      }
    }
  };
  check(drunk_tags);
  check(sober_tags);
  for (const std::string &tag : drunk_tags) {
    if (sober_tags.count(tag)) {
      throw ConfigError("tag '" + tag + "' is both a drunk and a sober tag");
    }
  }
}

std::string_view RejectReasonName(RejectReason reason) {
  switch (reason) {
    case RejectReason::kHyperlink:
      return "hyperlink";
    case RejectReason::kTooShort:
      return "too_short";
  }
  return "?";
}

int CountWords(std::string_view text) {
  return static_cast<int>(WhitespaceTokens(text).size());
}

bool ContainsHyperlink(std::string_view text) {
  for (const Span &s : WhitespaceTokens(text)) {
    std::string_view token = text.substr(s.begin, s.end - s.begin);
    if (StartsWithIgnoreCase(token, "http://") ||
        StartsWithIgnoreCase(token, "https://") ||
        StartsWithIgnoreCase(token, "www.")) {
      return true;
    }
  }
  return false;
}

FilterResult FilterRecord(const RawRecord &record, const FilterRules &rules) {
  FilterResult result;
  result.text = rules.strip_non_unicode ? utf8::StripInvalid(record.text)
                                        : record.text;
  if (rules.reject_hyperlinks && ContainsHyperlink(result.text)) {
    result.rejection = RejectReason::kHyperlink;
  } else if (CountWords(result.text) < rules.min_words) {
    result.rejection = RejectReason::kTooShort;
  }
  return result;
}

std::vector<std::string> FindSupervisionTags(std::string_view text,
                                             const SupervisionTags &tags) {
  std::vector<std::string> found;
  std::string tag;
  std::string_view rest;
  for (const Span &s : WhitespaceTokens(text)) {
    if (!SplitHashtag(text.substr(s.begin, s.end - s.begin), tag, rest)) {
      continue;
    }
    if (tags.drunk_tags.count(tag) || tags.sober_tags.count(tag)) {
      found.push_back(tag);
    }
  }
  return found;
}

std::string StripTags(std::string_view text,
                      const std::set<std::string> &strip,
                      std::vector<std::string> *removed) {
  const std::vector<Span> spans = WhitespaceTokens(text);
  // Replacement for each token; nullopt drops it.
  std::vector<std::optional<std::string_view>> pieces;
  pieces.reserve(spans.size());
  std::string tag;
  std::string_view rest;
  for (const Span &s : spans) {
    std::string_view token = text.substr(s.begin, s.end - s.begin);
    if (SplitHashtag(token, tag, rest) && strip.count(tag)) {
      if (removed) removed->push_back(tag);
      pieces.push_back(rest.empty() ? std::nullopt
                                    : std::optional<std::string_view>(rest));
    } else {
      pieces.push_back(token);
    }
  }

  std::string out;
  bool dropped_since_last = false;
  std::optional<std::size_t> last_kept;
  for (std::size_t i = 0; i < spans.size(); ++i) {
    if (!pieces[i]) {
      dropped_since_last = true;
      continue;
    }
    if (!last_kept) {
      if (i == 0) out.append(text.substr(0, spans[0].begin));
    } else if (dropped_since_last) {
      out.push_back(' ');
    } else {
      out.append(text.substr(spans[*last_kept].end,
                             spans[i].begin - spans[*last_kept].end));
    }
    out.append(*pieces[i]);
    last_kept = i;
    dropped_since_last = false;
  }
  if (last_kept && *last_kept + 1 == spans.size()) {
    out.append(text.substr(spans.back().end));
  }
  return out;
}

LabelOutcome LabelByHashtags(const RawRecord &record,
                             const SupervisionTags &tags) {
  bool drunk = false;
  bool sober = false;
  for (const std::string &tag : FindSupervisionTags(record.text, tags)) {
    drunk |= tags.drunk_tags.count(tag) > 0;
    sober |= tags.sober_tags.count(tag) > 0;
  }
  if (drunk && sober) return Conflict{};
  if (!drunk && !sober) return Unlabeled{};

  std::set<std::string> all = tags.drunk_tags;
  all.insert(tags.sober_tags.begin(), tags.sober_tags.end());
  LabeledTweet tweet;
  tweet.id = record.id;
  tweet.user = record.user;
  tweet.label = drunk ? Label::kDrunk : Label::kSober;
  tweet.text = StripTags(record.text, all, &tweet.stripped_tags);
  return tweet;
}

}  // namespace soberlens::corpus
