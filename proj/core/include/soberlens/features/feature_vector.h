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

#ifndef SOBERLENS_FEATURES_FEATURE_VECTOR_H_
#define SOBERLENS_FEATURES_FEATURE_VECTOR_H_

#include <cstddef>
#include <span>
#include <vector>

namespace soberlens::features {

struct FeatureEntry {
  std::size_t index = 0;
  double value = 0.0;

  bool operator==(const FeatureEntry &) const = default;
};

// Sparse vector with unique indices in increasing order and finite values.
class FeatureVector {
 public:
  FeatureVector() = default;

  // Sorts by index and sums entries that share an index. Zero values are
  // kept. Throws DataError on a non-finite value.
  static FeatureVector FromEntries(std::vector<FeatureEntry> entries);

  std::span<const FeatureEntry> entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  // Value at `index`, 0 if absent.
  double Get(std::size_t index) const;

  // Indices at or beyond weights.size() contribute nothing.
  double Dot(std::span<const double> weights) const;

  double SquaredNorm() const;

  // Index-wise sum.
  FeatureVector Plus(const FeatureVector &other) const;

  bool operator==(const FeatureVector &) const = default;

 private:
  std::vector<FeatureEntry> entries_;
};

}  // namespace soberlens::features

#endif  // SOBERLENS_FEATURES_FEATURE_VECTOR_H_
