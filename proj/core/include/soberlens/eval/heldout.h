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

#ifndef SOBERLENS_EVAL_HELDOUT_H_
#define SOBERLENS_EVAL_HELDOUT_H_

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "soberlens/common/label.h"
#include "soberlens/corpus/records.h"
#include "soberlens/eval/metrics.h"
#include "soberlens/learn/linear_model.h"
#include "soberlens/text/lexicon.h"

namespace soberlens::eval {

struct HeldoutResult {
  ConfusionMatrix confusion;
  Metrics metrics;
  // One per tweet, in corpus order.
  std::vector<learn::Prediction> predictions;
};

// Single prediction pass through the model's frozen registry; nothing is
// refit. Throws DataError on an empty corpus.
HeldoutResult EvaluateHeldout(const learn::LinearModel &model,
                              const corpus::Corpus &corpus,
                              const text::LexiconSet &lex);

struct Contribution {
  std::string name;
  // weight * value
  double term = 0.0;
};

struct ErrorRow {
  std::string id;
  std::string text;
  Label gold = Label::kSober;
  Label predicted = Label::kSober;
  double score = 0.0;
  std::vector<Contribution> top_features;
};

// Misclassified tweets, largest |score| first (corpus order among ties), each
// with its `top_n` largest |weight * value| terms (ties by name).
std::vector<ErrorRow> ErrorReport(const learn::LinearModel &model,
                                  const corpus::Corpus &corpus,
                                  const text::LexiconSet &lex,
                                  std::size_t top_n = 10);

// `id<TAB>gold<TAB>predicted<TAB>score<TAB>name=term;...<TAB>text`; tabs and
// newlines in the text become spaces.
void WriteErrorReportTsv(std::ostream &out, const std::vector<ErrorRow> &rows);

}  // namespace soberlens::eval

#endif  // SOBERLENS_EVAL_HELDOUT_H_
