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

#ifndef SOBERLENS_CORPUS_RECORDS_H_
#define SOBERLENS_CORPUS_RECORDS_H_

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "soberlens/common/label.h"

namespace soberlens::corpus {

// One downloaded post.
struct RawRecord {
  std::string id;
  std::string user;
  std::string text;

  bool operator==(const RawRecord &) const = default;
};

struct LabeledTweet {
  std::string id;
  std::string user;
  // Supervision hashtags removed.
  std::string text;
  Label label = Label::kSober;
  // Lowercased supervision hashtags removed from the text, in text order.
  std::vector<std::string> stripped_tags;

  bool operator==(const LabeledTweet &) const = default;
};

enum class Strategy { kD1, kD2, kH };

std::string_view StrategyName(Strategy strategy);
Strategy ParseStrategy(std::string_view name);

struct Corpus {
  Strategy strategy = Strategy::kD1;
  std::vector<LabeledTweet> tweets;
  // Non-fatal conditions noticed while building, e.g. an empty user pool.
  std::vector<std::string> warnings;

  std::size_t Count(Label label) const;
  std::size_t n_drunk() const { return Count(Label::kDrunk); }
  std::size_t n_sober() const { return Count(Label::kSober); }
  std::size_t size() const { return tweets.size(); }
  bool empty() const { return tweets.empty(); }
};

// Reads JSON-lines records with string fields `id`, `user` and `text`.
// Blank lines are skipped. Throws ParseError naming the line for malformed
// lines and DataError for empty or duplicate ids.
std::vector<RawRecord> IngestRecords(std::istream &in,
                                     const std::string &source = "<input>");

// Labeled corpus lines: the record fields plus `label` ("drunk"/"sober")
// and `stripped_tags`.
void WriteLabeledCorpus(std::ostream &out, const Corpus &corpus);
Corpus ReadLabeledCorpus(std::istream &in, Strategy strategy,
                         const std::string &source = "<corpus>");

}  // namespace soberlens::corpus

#endif  // SOBERLENS_CORPUS_RECORDS_H_
