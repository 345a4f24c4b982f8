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

#ifndef SOBERLENS_LEARN_LINEAR_MODEL_H_
#define SOBERLENS_LEARN_LINEAR_MODEL_H_

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "soberlens/features/extractor.h"
#include "soberlens/features/feature_vector.h"
#include "soberlens/features/registry.h"

namespace soberlens::learn {

struct TrainConfig {
  double c = 1.0;
  int max_epochs = 1000;
  double tolerance = 1e-4;
  std::uint64_t seed = 0;
  bool shuffle = true;

  void Validate() const;
};

struct Prediction {
  // +1 drunk, -1 sober. A zero score predicts sober.
  int label = -1;
  double score = 0.0;
};

inline int LabelForScore(double score) { return score > 0.0 ? +1 : -1; }

// Weight vector and bias over a frozen feature registry, plus the feature
// settings needed to rebuild vectors for new text.
class LinearModel {
 public:
  LinearModel() = default;
  // Throws ModelError if the weight count differs from the registry size or
  // any parameter is non-finite. The registry is frozen.
  LinearModel(features::FeatureRegistry registry, std::vector<double> weights,
              double bias);

  double Score(const features::FeatureVector &x) const {
    return x.Dot(weights_) + bias_;
  }
  Prediction Predict(const features::FeatureVector &x) const {
    double score = Score(x);
    return {LabelForScore(score), score};
  }

  const features::FeatureRegistry &registry() const { return registry_; }
  const std::vector<double> &weights() const { return weights_; }
  double bias() const { return bias_; }

  TrainConfig train_config;
  features::FeatureConfig feature_config;

  // Versioned JSON: config, feature settings, registry (index order), sparse
  // weights and bias. Doubles round-trip exactly.
  void WriteJson(std::ostream &out) const;
  // Throws ModelError on a malformed or incompatible file.
  static LinearModel ReadJson(std::istream &in);

 private:
  features::FeatureRegistry registry_;
  std::vector<double> weights_;
  double bias_ = 0.0;
};

inline Prediction Predict(const LinearModel &model,
                          const features::FeatureVector &x) {
  return model.Predict(x);
}

}  // namespace soberlens::learn

#endif  // SOBERLENS_LEARN_LINEAR_MODEL_H_
