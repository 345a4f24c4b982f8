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

#include "soberlens/eval/folds.h"

#include "soberlens/common/error.h"
#include "soberlens/common/random.h"

namespace soberlens::eval {

std::vector<std::size_t> FoldAssignment::TestIndices(int fold) const {
  std::vector<std::size_t> indices;
  for (std::size_t i = 0; i < fold_of.size(); ++i) {
    if (fold_of[i] == fold) indices.push_back(i);
  }
  return indices;
}

std::vector<std::size_t> FoldAssignment::TrainIndices(int fold) const {
  std::vector<std::size_t> indices;
  for (std::size_t i = 0; i < fold_of.size(); ++i) {
    if (fold_of[i] != fold) indices.push_back(i);
  }
  return indices;
}

FoldAssignment StratifiedKFold(std::span<const int> labels, int k,
                               std::uint64_t seed) {
  if (k < 2) throw ConfigError("k must be at least 2");
  std::vector<std::size_t> drunk, sober;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    (labels[i] > 0 ? drunk : sober).push_back(i);
  }
  if (drunk.size() < static_cast<std::size_t>(k) ||
      sober.size() < static_cast<std::size_t>(k)) {
    throw DataError("each class needs at least k = " + std::to_string(k) +
                    " instances (have " + std::to_string(drunk.size()) +
                    " drunk, " + std::to_string(sober.size()) + " sober)");
  }
  Rng rng(seed);
  FoldAssignment assignment;
  assignment.k = k;
  assignment.fold_of.assign(labels.size(), -1);
  std::size_t next = 0;
  for (std::vector<std::size_t> *members : {&drunk, &sober}) {
    rng.Shuffle(std::span<std::size_t>(*members));
    for (std::size_t i : *members) {
      assignment.fold_of[i] = static_cast<int>(next % k);
      ++next;
    }
  }
  return assignment;
}

FoldAssignment StratifiedKFold(const corpus::Corpus &corpus, int k,
                               std::uint64_t seed) {
  std::vector<int> labels;
  labels.reserve(corpus.size());
  for (const corpus::LabeledTweet &t : corpus.tweets) {
    labels.push_back(Sign(t.label));
  }
  return StratifiedKFold(labels, k, seed);
}

}  // namespace soberlens::eval
