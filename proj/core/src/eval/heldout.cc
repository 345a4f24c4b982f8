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

#include "soberlens/eval/heldout.h"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "soberlens/common/error.h"
#include "soberlens/common/format.h"
#include "soberlens/features/extractor.h"

namespace soberlens::eval {

namespace {

features::Design VectorizeFrozen(const learn::LinearModel &model,
                                 const corpus::Corpus &corpus,
                                 const text::LexiconSet &lex) {
  features::FeatureRegistry registry = model.registry();
  registry.Freeze();
  return features::VectorizeCorpus(corpus, model.feature_config, lex, registry);
}

}  // namespace

HeldoutResult EvaluateHeldout(const learn::LinearModel &model,
                              const corpus::Corpus &corpus,
                              const text::LexiconSet &lex) {
  if (corpus.empty()) throw DataError("held-out corpus is empty");
  features::Design design = VectorizeFrozen(model, corpus, lex);
  HeldoutResult result;
  for (std::size_t i = 0; i < design.rows.size(); ++i) {
    learn::Prediction p = model.Predict(design.rows[i]);
    result.confusion.Add(design.labels[i], p.label);
    result.predictions.push_back(p);
  }
  result.metrics = ComputeMetrics(result.confusion);
  return result;
}

std::vector<ErrorRow> ErrorReport(const learn::LinearModel &model,
                                  const corpus::Corpus &corpus,
                                  const text::LexiconSet &lex,
                                  std::size_t top_n) {
  std::vector<ErrorRow> rows;
  if (corpus.empty()) return rows;
  features::Design design = VectorizeFrozen(model, corpus, lex);
  const std::vector<double> &weights = model.weights();
  for (std::size_t i = 0; i < design.rows.size(); ++i) {
    learn::Prediction p = model.Predict(design.rows[i]);
    if (p.label == design.labels[i]) continue;
    ErrorRow row;
    row.id = corpus.tweets[i].id;
    row.text = corpus.tweets[i].text;
    row.gold = LabelFromSign(design.labels[i]);
    row.predicted = LabelFromSign(p.label);
    row.score = p.score;
    for (const features::FeatureEntry &e : design.rows[i].entries()) {
      const double term = weights[e.index] * e.value;
      if (term != 0.0) {
        row.top_features.push_back({model.registry().Name(e.index), term});
      }
    }
    std::sort(row.top_features.begin(), row.top_features.end(),
              [](const Contribution &a, const Contribution &b) {
                if (std::abs(a.term) != std::abs(b.term)) {
                  return std::abs(a.term) > std::abs(b.term);
                }
                return a.name < b.name;
              });
    if (row.top_features.size() > top_n) row.top_features.resize(top_n);
    rows.push_back(std::move(row));
  }
  std::stable_sort(rows.begin(), rows.end(),
                   [](const ErrorRow &a, const ErrorRow &b) {
                     return std::abs(a.score) > std::abs(b.score);
                   });
  return rows;
}

void WriteErrorReportTsv(std::ostream &out, const std::vector<ErrorRow> &rows) {
  out << "id\tgold\tpredicted\tscore\ttop_features\ttext\n";
  for (const ErrorRow &row : rows) {
    out << row.id << '\t' << LabelName(row.gold) << '\t'
        << LabelName(row.predicted) << '\t' << FormatDouble(row.score) << '\t';
    for (std::size_t i = 0; i < row.top_features.size(); ++i) {
      if (i > 0) out << ';';
      out << row.top_features[i].name << '='
          << FormatDouble(row.top_features[i].term);
    }
    std::string text = row.text;
    std::replace_if(
        text.begin(), text.end(),
        [](char c) { return c == '\t' || c == '\n' || c == '\r'; }, ' ');
    out << '\t' << text << '\n';
  }
}

}  // namespace soberlens::eval
