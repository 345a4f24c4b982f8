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

#include "soberlens/eval/cross_validation.h"

#include <future>
#include <ostream>

#include "soberlens/common/error.h"
#include "soberlens/learn/naive_bayes.h"
#include "soberlens/learn/svm.h"

namespace soberlens::eval {

namespace {

corpus::Corpus Subset(const corpus::Corpus &corpus,
                      const std::vector<std::size_t> &indices) {
  corpus::Corpus subset;
  subset.strategy = corpus.strategy;
  subset.tweets.reserve(indices.size());
  for (std::size_t i : indices) subset.tweets.push_back(corpus.tweets[i]);
  return subset;
}

FoldResult RunFold(const corpus::Corpus &corpus, const FoldAssignment &folds,
                   int fold, const features::FeatureConfig &feature_config,
                   const learn::TrainConfig &train_config,
                   const text::LexiconSet &lex, const CvOptions &options) {
  FoldResult result;
  result.fold = fold;
  corpus::Corpus train = Subset(corpus, folds.TrainIndices(fold));
  corpus::Corpus test = Subset(corpus, folds.TestIndices(fold));

  features::Design train_design =
      features::VectorizeCorpus(train, feature_config, lex, result.registry);
  result.registry.Freeze();
  features::Design test_design =
      features::VectorizeCorpus(test, feature_config, lex, result.registry);

  std::vector<int> predicted;
  predicted.reserve(test_design.rows.size());
  if (options.classifier == ClassifierKind::kSvm) {
    learn::TrainConfig config = train_config;
    config.seed = options.seed + static_cast<std::uint64_t>(fold);
    learn::LinearModel model = learn::TrainSvm(
        train_design.rows, train_design.labels, result.registry, config);
    for (const auto &row : test_design.rows) {
      predicted.push_back(model.Predict(row).label);
    }
  } else {
    learn::NaiveBayesModel model = learn::TrainNaiveBayes(
        train_design.rows, train_design.labels, result.registry.size());
    for (const auto &row : test_design.rows) {
      predicted.push_back(model.Predict(row));
    }
  }
  for (std::size_t i = 0; i < predicted.size(); ++i) {
    result.confusion.Add(test_design.labels[i], predicted[i]);
  }
  result.metrics = ComputeMetrics(result.confusion);
  return result;
}

}  // namespace

std::string_view ClassifierName(ClassifierKind kind) {
  return kind == ClassifierKind::kSvm ? "svm" : "nb";
}

ClassifierKind ParseClassifier(std::string_view name) {
  if (name == "svm") return ClassifierKind::kSvm;
  if (name == "nb") return ClassifierKind::kNaiveBayes;
  throw ConfigError("unknown classifier '" + std::string(name) +
                    "' (expected svm or nb)");
}

CvResult CrossValidate(const corpus::Corpus &corpus,
                       const features::FeatureConfig &feature_config,
                       const learn::TrainConfig &train_config,
                       const text::LexiconSet &lex, const CvOptions &options) {
  feature_config.Validate();
  train_config.Validate();
  CvResult result;
  result.assignment = StratifiedKFold(corpus, options.k, options.seed);

  if (options.parallel) {
    std::vector<std::future<FoldResult>> pending;
    for (int fold = 0; fold < options.k; ++fold) {
      pending.push_back(std::async(std::launch::async, RunFold,
                                   std::cref(corpus),
                                   std::cref(result.assignment), fold,
                                   std::cref(feature_config),
                                   std::cref(train_config), std::cref(lex),
                                   std::cref(options)));
    }
    for (auto &f : pending) result.folds.push_back(f.get());
  } else {
    for (int fold = 0; fold < options.k; ++fold) {
      result.folds.push_back(RunFold(corpus, result.assignment, fold,
                                     feature_config, train_config, lex,
                                     options));
    }
  }
  for (const FoldResult &fold : result.folds) result.pooled += fold.confusion;
  result.metrics = ComputeMetrics(result.pooled);
  return result;
}

void WriteCvReport(std::ostream &out, const CvResult &result,
                   const features::FeatureConfig &feature_config,
                   const CvOptions &options) {
  const std::string preset = feature_config.PresetName();
  const char *display = preset == "ngram"       ? "N-gram"
                        : preset == "stylistic" ? "Stylistic"
                                                : "All";
  out << "# feature sets: N-gram | Stylistic | All; this run: " << display
      << '\n';
  out << "# classifier: " << ClassifierName(options.classifier) << '\n';
  out << "# folds: " << options.k << " (stratified), seed " << options.seed
      << '\n';
  out << "# aggregation: pooled confusion matrix over folds (micro-average)\n";
  out << "# pooled confusion: tp=" << result.pooled.tp
      << " fp=" << result.pooled.fp << " fn=" << result.pooled.fn
      << " tn=" << result.pooled.tn << '\n';
  std::vector<MetricsRow> pooled = {{display, result.metrics}};
  WriteMetricsTable(out, pooled);
  out << '\n';
  std::vector<MetricsRow> rows;
  for (const FoldResult &fold : result.folds) {
    rows.emplace_back("fold" + std::to_string(fold.fold), fold.metrics);
  }
  rows.emplace_back("pooled", result.metrics);
  WriteMetricsTsv(out, rows);
}

}  // namespace soberlens::eval
