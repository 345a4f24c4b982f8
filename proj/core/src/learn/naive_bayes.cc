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

#include "soberlens/learn/naive_bayes.h"

#include <cmath>

#include "soberlens/common/error.h"
#include "soberlens/learn/svm.h"

namespace soberlens::learn {

namespace {

int Slot(int label) { return label > 0 ? 0 : 1; }

}  // namespace

double NaiveBayesModel::LogJoint(const features::FeatureVector &x,
                                 int label) const {
  const int slot = Slot(label);
  const std::vector<double> &likelihood = log_likelihood_[slot];
  double score = log_prior_[slot];
  for (const features::FeatureEntry &e : x.entries()) {
    if (e.index < likelihood.size()) score += e.value * likelihood[e.index];
  }
  return score;
}

int NaiveBayesModel::Predict(const features::FeatureVector &x) const {
  return LogJoint(x, +1) > LogJoint(x, -1) ? +1 : -1;
}

NaiveBayesModel TrainNaiveBayes(std::span<const features::FeatureVector> rows,
                                std::span<const int> labels,
                                std::size_t dimension) {
  ValidateTrainingSet(rows, labels, dimension);
  std::array<std::vector<double>, 2> mass;
  mass[0].assign(dimension, 0.0);
  mass[1].assign(dimension, 0.0);
  std::array<double, 2> docs{0.0, 0.0};
  std::array<double, 2> total{0.0, 0.0};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const int slot = Slot(labels[i]);
    docs[slot] += 1.0;
    for (const features::FeatureEntry &e : rows[i].entries()) {
      if (e.value < 0.0) {
        throw DataError("naive Bayes needs non-negative feature values");
      }
      mass[slot][e.index] += e.value;
      total[slot] += e.value;
    }
  }

  NaiveBayesModel model;
  const double n = static_cast<double>(rows.size());
  const double smoothing = NaiveBayesModel::kSmoothing;
  for (int slot = 0; slot < 2; ++slot) {
    model.log_prior_[slot] = std::log(docs[slot] / n);
    const double denominator =
        total[slot] + smoothing * static_cast<double>(dimension);
    model.log_likelihood_[slot].resize(dimension);
    for (std::size_t j = 0; j < dimension; ++j) {
      model.log_likelihood_[slot][j] =
          std::log((mass[slot][j] + smoothing) / denominator);
    }
  }
  return model;
}

}  // namespace soberlens::learn
