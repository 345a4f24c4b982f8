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

#include "soberlens/corpus/term_frequency.h"

#include <algorithm>
#include <map>

#include "soberlens/text/tokenizer.h"

namespace soberlens::corpus {

const std::vector<std::string> &DefaultDropStems() {
  static const std::vector<std::string> kStems = {"drunk"};
  return kStems;
}

std::vector<TermCount> TermFrequencyReport(
    const Corpus &corpus, Label label, const text::WordSet &stopwords,
    const std::vector<std::string> &drop_stems) {
  std::map<std::string, std::size_t> counts;
  for (const LabeledTweet &tweet : corpus.tweets) {
    if (tweet.label != label) continue;
    for (const text::Token &token : text::Tokenize(tweet.text)) {
      if (token.kind != text::TokenKind::kWord) continue;
      const std::string &w = token.normalized;
      if (stopwords.count(w)) continue;
      bool dropped = std::any_of(
          drop_stems.begin(), drop_stems.end(),
          [&](const std::string &stem) { return w.starts_with(stem); });
      if (!dropped) ++counts[w];
    }
  }
  std::vector<TermCount> ranked(counts.begin(), counts.end());
  // counts is alphabetical already, so a stable sort keeps ties in order.
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const TermCount &a, const TermCount &b) {
                     return a.second > b.second;
                   });
  return ranked;
}

}  // namespace soberlens::corpus
