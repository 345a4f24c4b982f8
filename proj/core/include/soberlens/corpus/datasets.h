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

#ifndef SOBERLENS_CORPUS_DATASETS_H_
#define SOBERLENS_CORPUS_DATASETS_H_

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>

#include "soberlens/corpus/records.h"
#include "soberlens/corpus/supervision.h"

namespace soberlens::corpus {

// Per-record outcome counts for one input stream. Every record is counted
// exactly once, either as accepted or under one rejection reason.
struct BuildTally {
  std::size_t accepted = 0;
  std::map<std::string, std::size_t> rejected;

  void Reject(std::string_view reason) { ++rejected[std::string(reason)]; }
  std::size_t total_rejected() const;
  std::size_t total() const { return accepted + total_rejected(); }
};

// Tweets labeled by the drunk and sober hashtags. Conflicting and untagged
// records are dropped. Throws DataError if either class ends up empty.
Corpus BuildDataset1(std::span<const RawRecord> records,
                     const FilterRules &rules, const SupervisionTags &tags,
                     BuildTally *tally = nullptr);

// Drunk tweets of `drunk_corpus` against sober tweets drawn from the same
// authors: pool records by a drunk author that pass the filters and carry no
// drunk tag. Sober tags in those records are stripped. An empty pool, or one
// that yields no negatives, produces a corpus with no sober tweets and a
// warning. Throws DataError if `drunk_corpus` has no drunk tweets.
Corpus BuildDataset2(const Corpus &drunk_corpus,
                     std::span<const RawRecord> user_pool,
                     const FilterRules &rules, const SupervisionTags &tags,
                     BuildTally *tally = nullptr);

// Held-out corpus: hashtag labeling as in BuildDataset1 plus untagged tweets
// by the drunk authors of this stream as sober tweets. Records whose id is in
// `exclude` are dropped first. May return an empty class; callers decide.
Corpus BuildHeldout(std::span<const RawRecord> records,
                    const FilterRules &rules, const SupervisionTags &tags,
                    const std::unordered_set<std::string> &exclude,
                    BuildTally *tally = nullptr);

// Hashtag labeling with no empty-class check, for callers that only need
// one side (for example the drunk half of a D2 build).
Corpus LabelRecords(std::span<const RawRecord> records,
                    const FilterRules &rules, const SupervisionTags &tags,
                    BuildTally *tally = nullptr);

}  // namespace soberlens::corpus

#endif  // SOBERLENS_CORPUS_DATASETS_H_
