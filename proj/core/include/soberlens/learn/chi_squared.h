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

#ifndef SOBERLENS_LEARN_CHI_SQUARED_H_
#define SOBERLENS_LEARN_CHI_SQUARED_H_

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "soberlens/common/label.h"
#include "soberlens/features/feature_vector.h"
#include "soberlens/features/registry.h"

namespace soberlens::learn {

struct RankedFeature {
  std::string name;
  double chi2 = 0.0;
  // Class in which the feature is present more often than expected.
  Label affinity = Label::kSober;
};

// Pearson statistic of a 2x2 table. Rows: feature present / absent;
// columns: drunk / sober. Cells with zero expected count contribute 0.
double ChiSquared2x2(double present_drunk, double present_sober,
                     double absent_drunk, double absent_sober);

// Ranks every registry feature by the chi-squared statistic of its
// presence (value != 0) against the class, highest first, ties by name.
std::vector<RankedFeature> ChiSquaredRank(
    std::span<const features::FeatureVector> rows, std::span<const int> labels,
    const features::FeatureRegistry &registry);

// `rank<TAB>name<TAB>chi2<TAB>affinity` lines, rank starting at 1.
void WriteRankingTsv(std::ostream &out, std::span<const RankedFeature> ranking);

}  // namespace soberlens::learn

#endif  // SOBERLENS_LEARN_CHI_SQUARED_H_
