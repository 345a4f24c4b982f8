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

#ifndef SOBERLENS_EVAL_KAPPA_H_
#define SOBERLENS_EVAL_KAPPA_H_

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "soberlens/common/label.h"

namespace soberlens::eval {

// Cohen's kappa, (p_o - p_e) / (1 - p_e), where p_e sums the products of the
// two raters' marginal label rates. When p_e = 1 the result is 1 if the
// raters agree everywhere and 0 otherwise. Throws DataError for empty or
// unequal-length inputs.
double CohenKappa(std::span<const Label> a, std::span<const Label> b);

struct Annotation {
  std::string id;
  std::string annotator;
  Label label = Label::kSober;
};

// JSON-lines `{"id": ..., "annotator": ..., "label": "drunk"|"sober"}`.
// Throws DataError when an annotator labels the same id twice.
std::vector<Annotation> ReadAnnotations(std::istream &in,
                                        const std::string &source = "<input>");

struct KappaMatrix {
  // Sorted annotator names.
  std::vector<std::string> annotators;
  // Symmetric; diagonal is 1. nullopt when two annotators share no ids.
  std::vector<std::vector<std::optional<double>>> kappa;
  // Number of ids labeled by both annotators.
  std::vector<std::vector<std::size_t>> overlap;
};

// Pairwise kappa over the ids each pair of annotators has in common.
KappaMatrix PairwiseKappa(std::span<const Annotation> annotations);

// Header row of annotator names, then one row per annotator. Values use six
// decimals; pairs without overlap print "—".
void WriteKappaTsv(std::ostream &out, const KappaMatrix &matrix);

}  // namespace soberlens::eval

#endif  // SOBERLENS_EVAL_KAPPA_H_
