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

#ifndef SOBERLENS_EVAL_FOLDS_H_
#define SOBERLENS_EVAL_FOLDS_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "soberlens/corpus/records.h"

namespace soberlens::eval {

struct FoldAssignment {
  int k = 0;
  // Fold id of each instance, in input order.
  std::vector<int> fold_of;

  std::vector<std::size_t> TestIndices(int fold) const;
  std::vector<std::size_t> TrainIndices(int fold) const;
};

// Each class (drunk first, then sober) is shuffled with the seed and dealt
// round-robin to the folds. The dealing position carries over from one class
// to the next, so fold sizes differ by at most one and each fold's class
// counts differ by at most one from an exact split. Throws ConfigError for
// k < 2 and DataError when a class has fewer than k members.
FoldAssignment StratifiedKFold(std::span<const int> labels, int k,
                               std::uint64_t seed);
FoldAssignment StratifiedKFold(const corpus::Corpus &corpus, int k,
                               std::uint64_t seed);

}  // namespace soberlens::eval

#endif  // SOBERLENS_EVAL_FOLDS_H_
