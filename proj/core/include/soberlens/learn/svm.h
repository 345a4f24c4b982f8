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

#ifndef SOBERLENS_LEARN_SVM_H_
#define SOBERLENS_LEARN_SVM_H_

#include <cstddef>
#include <span>
#include <vector>

#include "soberlens/features/feature_vector.h"
#include "soberlens/features/registry.h"
#include "soberlens/learn/linear_model.h"

namespace soberlens::learn {

struct TrainStats {
  int epochs = 0;
  bool converged = false;
  // Largest |alpha_new - alpha_old| in the final epoch.
  double last_max_update = 0.0;
  // Dual objective after initialization and after each epoch.
  std::vector<double> dual_objective;
  // Epochs whose dual objective fell below the previous one beyond rounding.
  int dual_decreases = 0;
};

struct LinearWeights {
  std::vector<double> weights;
  double bias = 0.0;
};

// L2-regularized hinge-loss SVM trained by dual coordinate descent. The bias
// is learned as the weight of a constant feature 1, so it is regularized
// like the other weights:
//
//   min_w  1/2 (|w|^2 + b^2) + c * sum_i max(0, 1 - y_i (w.x_i + b))
//
// Each coordinate step maximizes the dual exactly over alpha_i in [0, c].
// Epoch order is a seeded shuffle (or input order with shuffle off). Training
// stops after the first epoch whose largest alpha change is below
// `tolerance`, or after `max_epochs`. Throws DataError for single-class
// input, labels other than +/-1, or non-finite values.
LinearWeights TrainSvmWeights(std::span<const features::FeatureVector> rows,
                              std::span<const int> labels,
                              std::size_t dimension, const TrainConfig &config,
                              TrainStats *stats = nullptr);

// Trains over a registry; indices must be below registry.size().
LinearModel TrainSvm(std::span<const features::FeatureVector> rows,
                     std::span<const int> labels,
                     const features::FeatureRegistry &registry,
                     const TrainConfig &config, TrainStats *stats = nullptr);

// Checks shared by the trainers: equal lengths, +/-1 labels, both classes
// present, finite values, indices below `dimension`.
void ValidateTrainingSet(std::span<const features::FeatureVector> rows,
                         std::span<const int> labels, std::size_t dimension);

}  // namespace soberlens::learn

#endif  // SOBERLENS_LEARN_SVM_H_
