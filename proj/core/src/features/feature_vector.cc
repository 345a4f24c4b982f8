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

#include "soberlens/features/feature_vector.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "soberlens/common/error.h"

namespace soberlens::features {

FeatureVector FeatureVector::FromEntries(std::vector<FeatureEntry> entries) {
  for (const FeatureEntry &e : entries) {
    if (!std::isfinite(e.value)) {
      throw DataError("non-finite value for feature index " +
                      std::to_string(e.index));
    }
  }
  std::stable_sort(entries.begin(), entries.end(),
                   [](const FeatureEntry &a, const FeatureEntry &b) {
                     return a.index < b.index;
                   });
  FeatureVector v;
  for (const FeatureEntry &e : entries) {
    if (!v.entries_.empty() && v.entries_.back().index == e.index) {
      v.entries_.back().value += e.value;
    } else {
      v.entries_.push_back(e);
    }
  }
  return v;
}

double FeatureVector::Get(std::size_t index) const {
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), index,
      [](const FeatureEntry &e, std::size_t i) { return e.index < i; });
  return it != entries_.end() && it->index == index ? it->value : 0.0;
}

double FeatureVector::Dot(std::span<const double> weights) const {
  double sum = 0.0;
  for (const FeatureEntry &e : entries_) {
    if (e.index < weights.size()) sum += weights[e.index] * e.value;
  }
  return sum;
}

double FeatureVector::SquaredNorm() const {
  double sum = 0.0;
  for (const FeatureEntry &e : entries_) sum += e.value * e.value;
  return sum;
}

FeatureVector FeatureVector::Plus(const FeatureVector &other) const {
  std::vector<FeatureEntry> all(entries_);
  all.insert(all.end(), other.entries_.begin(), other.entries_.end());
  return FromEntries(std::move(all));
}

}  // namespace soberlens::features
