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

#ifndef SOBERLENS_LEARN_NAIVE_BAYES_H_
#define SOBERLENS_LEARN_NAIVE_BAYES_H_

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "soberlens/features/feature_vector.h"

namespace soberlens::learn {

// Multinomial naive Bayes over non-negative feature values, with add-one
// smoothing. Class slot 0 is drunk (+1), slot 1 sober (-1).
class NaiveBayesModel {
 public:
  static constexpr double kSmoothing = 1.0;

  const std::array<double, 2> &log_prior() const { return log_prior_; }
  const std::vector<double> &log_likelihood(int slot) const {
    return log_likelihood_[slot];
  }
  std::size_t dimension() const { return log_likelihood_[0].size(); }

  // log P(class) + sum_j x_j log P(j | class). Features beyond the training
  // dimension are ignored.
  double LogJoint(const features::FeatureVector &x, int label) const;

  // Argmax over the two classes; ties predict sober (-1).
  int Predict(const features::FeatureVector &x) const;

 private:
  friend NaiveBayesModel TrainNaiveBayes(
      std::span<const features::FeatureVector>, std::span<const int>,
      std::size_t);

  std::array<double, 2> log_prior_{};
  std::array<std::vector<double>, 2> log_likelihood_;
};

// Throws DataError on single-class input or a negative feature value.
NaiveBayesModel TrainNaiveBayes(std::span<const features::FeatureVector> rows,
                                std::span<const int> labels,
                                std::size_t dimension);

}  // namespace soberlens::learn

#endif  // SOBERLENS_LEARN_NAIVE_BAYES_H_
