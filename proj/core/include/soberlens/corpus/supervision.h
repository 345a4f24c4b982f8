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

#ifndef SOBERLENS_CORPUS_SUPERVISION_H_
#define SOBERLENS_CORPUS_SUPERVISION_H_

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>

#include "soberlens/corpus/records.h"

namespace soberlens::corpus {

struct FilterRules {
  int min_words = 6;
  bool reject_hyperlinks = true;
  bool strip_non_unicode = true;

  void Validate() const;
};

struct SupervisionTags {
  std::set<std::string> drunk_tags{"#drunk", "#drank", "#imdrunk"};
  std::set<std::string> sober_tags{"#notdrunk", "#imnotdrunk", "#sober"};

  // Tags must start with '#', be lowercase, and the two sets be disjoint.
  void Validate() const;
};

enum class RejectReason { kHyperlink, kTooShort };

std::string_view RejectReasonName(RejectReason reason);

struct FilterResult {
  // Cleaned text; meaningful only when accepted.
  std::string text;
  std::optional<RejectReason> rejection;

  bool accepted() const { return !rejection.has_value(); }
};

// Whitespace-separated token count.
int CountWords(std::string_view text);

// A token starting with http://, https:// or www. (case-insensitive).
bool ContainsHyperlink(std::string_view text);

// Applies, in order: invalid UTF-8 removal, hyperlink rejection, minimum
// length. Length counts whitespace tokens including supervision hashtags.
FilterResult FilterRecord(const RawRecord &record, const FilterRules &rules);

struct Unlabeled {};
struct Conflict {};
using LabelOutcome = std::variant<LabeledTweet, Unlabeled, Conflict>;

// Hashtag supervision over whitespace tokens. A token matches a tag when its
// hashtag part ('#' plus letters, digits and '_') equals the tag ignoring
// case and anything after it is ASCII punctuation; the hashtag part is then
// removed and the punctuation kept. Whitespace left around a removed token
// collapses to a single space.
LabelOutcome LabelByHashtags(const RawRecord &record,
                             const SupervisionTags &tags);

// Supervision hashtags present in `text` (lowercased, text order).
std::vector<std::string> FindSupervisionTags(std::string_view text,
                                             const SupervisionTags &tags);

// `text` with the given tag set removed; matched tags are appended to
// `removed`.
std::string StripTags(std::string_view text,
                      const std::set<std::string> &strip,
                      std::vector<std::string> *removed);

}  // namespace soberlens::corpus

#endif  // SOBERLENS_CORPUS_SUPERVISION_H_
