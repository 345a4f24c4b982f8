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

#include "soberlens/learn/svm.h"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>

#include "soberlens/common/error.h"
#include "soberlens/common/random.h"

namespace soberlens::learn {

namespace {

double DualObjective(std::span<const double> alpha, std::span<const double> w,
                     double b) {
  double sum_alpha = std::accumulate(alpha.begin(), alpha.end(), 0.0);
  double norm = b * b;
  for (double x : w) norm += x * x;
  return sum_alpha - 0.5 * norm;
}

}  // namespace

void ValidateTrainingSet(std::span<const features::FeatureVector> rows,
                         std::span<const int> labels, std::size_t dimension) {
  if (rows.size() != labels.size()) {
    throw DataError("rows and labels differ in length");
  }
  if (rows.empty()) throw DataError("training set is empty");
  bool pos = false, neg = false;
  for (int y : labels) {
    if (y != 1 && y != -1) throw DataError("labels must be +1 or -1");
    pos |= y == 1;
    neg |= y == -1;
  }
  if (!pos || !neg) throw DataError("training set has a single class");
  for (const features::FeatureVector &x : rows) {
    for (const features::FeatureEntry &e : x.entries()) {
      if (!std::isfinite(e.value)) throw DataError("non-finite feature value");
      if (e.index >= dimension) {
        throw ModelError("feature index " + std::to_string(e.index) +
                         " outside the registry");
      }
    }
  }
}

LinearWeights TrainSvmWeights(std::span<const features::FeatureVector> rows,
                              std::span<const int> labels,
                              std::size_t dimension, const TrainConfig &config,
                              TrainStats *stats) {
  config.Validate();
  ValidateTrainingSet(rows, labels, dimension);

  const std::size_t n = rows.size();
  const double c = config.c;
  LinearWeights model;
  model.weights.assign(dimension, 0.0);
  std::vector<double> alpha(n, 0.0);
  std::vector<double> diag(n);
  for (std::size_t i = 0; i < n; ++i) diag[i] = rows[i].SquaredNorm() + 1.0;

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  Rng rng(config.seed);

  TrainStats local;
  TrainStats &st = stats ? *stats : local;
  st = TrainStats{};
  st.dual_objective.push_back(0.0);

  for (int epoch = 1; epoch <= config.max_epochs; ++epoch) {
    if (config.shuffle) rng.Shuffle(std::span<std::size_t>(order));
    double max_update = 0.0;
    for (std::size_t i : order) {
      const double y = labels[i];
      const features::FeatureVector &x = rows[i];
      const double gradient = y * (x.Dot(model.weights) + model.bias) - 1.0;
      const double updated = std::clamp(alpha[i] - gradient / diag[i], 0.0, c);
      const double delta = updated - alpha[i];
      if (delta == 0.0) continue;
      alpha[i] = updated;
      const double step = delta * y;
      for (const features::FeatureEntry &e : x.entries()) {
        model.weights[e.index] += step * e.value;
      }
      model.bias += step;
      max_update = std::max(max_update, std::abs(delta));
    }

    const double dual = DualObjective(alpha, model.weights, model.bias);
    const double previous = st.dual_objective.back();
    if (dual < previous - 1e-10 * std::max(1.0, std::abs(previous))) {
      ++st.dual_decreases;
    }
    assert(st.dual_decreases == 0 && "dual objective decreased");
    st.dual_objective.push_back(dual);
    st.epochs = epoch;
    st.last_max_update = max_update;
    if (max_update < config.tolerance) {
      st.converged = true;
      break;
    }
  }
  return model;
}

LinearModel TrainSvm(std::span<const features::FeatureVector> rows,
                     std::span<const int> labels,
                     const features::FeatureRegistry &registry,
                     const TrainConfig &config, TrainStats *stats) {
  LinearWeights w =
      TrainSvmWeights(rows, labels, registry.size(), config, stats);
  LinearModel model(registry, std::move(w.weights), w.bias);
  model.train_config = config;
  return model;
}

}  // namespace soberlens::learn
