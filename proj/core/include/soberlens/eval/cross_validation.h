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

#ifndef SOBERLENS_EVAL_CROSS_VALIDATION_H_
#define SOBERLENS_EVAL_CROSS_VALIDATION_H_

#include <cstdint>
#include <iosfwd>
#include <string_view>
#include <vector>

#include "soberlens/corpus/records.h"
#include "soberlens/eval/folds.h"
#include "soberlens/eval/metrics.h"
#include "soberlens/features/extractor.h"
#include "soberlens/features/registry.h"
#include "soberlens/learn/linear_model.h"
#include "soberlens/text/lexicon.h"

namespace soberlens::eval {

enum class ClassifierKind { kSvm, kNaiveBayes };

std::string_view ClassifierName(ClassifierKind kind);
ClassifierKind ParseClassifier(std::string_view name);

struct CvOptions {
  int k = 5;
  std::uint64_t seed = 0;
  ClassifierKind classifier = ClassifierKind::kSvm;
  // Folds train concurrently; results do not depend on this.
  bool parallel = true;
};

struct FoldResult {
  int fold = 0;
  ConfusionMatrix confusion;
  Metrics metrics;
  // Registry built from this fold's training split.
  features::FeatureRegistry registry;
};

struct CvResult {
  FoldAssignment assignment;
  std::vector<FoldResult> folds;
  // Sum of the per-fold confusion matrices.
  ConfusionMatrix pooled;
  Metrics metrics;
};

// Stratified k-fold cross-validation. For each fold a fresh registry is
// built from the training split only, the classifier is trained with seed
// options.seed + fold (the TrainConfig seed is ignored), and the held fold is
// predicted through the frozen registry. Metrics come from the pooled
// confusion matrix.
CvResult CrossValidate(const corpus::Corpus &corpus,
                       const features::FeatureConfig &feature_config,
                       const learn::TrainConfig &train_config,
                       const text::LexiconSet &lex, const CvOptions &options);

// Deterministic text report: header comments (feature set, classifier,
// aggregation, k, seed), the pooled metrics table, per-fold TSV rows.
void WriteCvReport(std::ostream &out, const CvResult &result,
                   const features::FeatureConfig &feature_config,
                   const CvOptions &options);

}  // namespace soberlens::eval

#endif  // SOBERLENS_EVAL_CROSS_VALIDATION_H_
