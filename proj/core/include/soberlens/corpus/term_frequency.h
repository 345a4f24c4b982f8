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

#ifndef SOBERLENS_CORPUS_TERM_FREQUENCY_H_
#define SOBERLENS_CORPUS_TERM_FREQUENCY_H_

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "soberlens/common/label.h"
#include "soberlens/corpus/records.h"
#include "soberlens/text/lexicon.h"

namespace soberlens::corpus {

using TermCount = std::pair<std::string, std::size_t>;

// Forms of "drunk" left out of the drunk-class word report.
const std::vector<std::string> &DefaultDropStems();

// Lowercased word counts for one class, most frequent first (ties
// alphabetical). Stopwords are removed, as is any word starting with one of
// `drop_stems` (so "drunk" also removes "drunken" and "drunkk").
std::vector<TermCount> TermFrequencyReport(
    const Corpus &corpus, Label label, const text::WordSet &stopwords,
    const std::vector<std::string> &drop_stems = DefaultDropStems());

}  // namespace soberlens::corpus

#endif  // SOBERLENS_CORPUS_TERM_FREQUENCY_H_
