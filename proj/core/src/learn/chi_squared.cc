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

#include "soberlens/learn/chi_squared.h"

#include <algorithm>
#include <ostream>

#include "soberlens/common/error.h"
#include "soberlens/common/format.h"

namespace soberlens::learn {

double ChiSquared2x2(double present_drunk, double present_sober,
                     double absent_drunk, double absent_sober) {
  const double n = present_drunk + present_sober + absent_drunk + absent_sober;
  if (n == 0.0) return 0.0;
  const double present = present_drunk + present_sober;
  const double absent = absent_drunk + absent_sober;
  const double drunk = present_drunk + absent_drunk;
  const double sober = present_sober + absent_sober;
  auto cell = [n](double observed, double row, double col) {
    const double expected = row * col / n;
    if (expected == 0.0) return 0.0;
    const double diff = observed - expected;
    return diff * diff / expected;
  };
  return cell(present_drunk, present, drunk) +
         cell(present_sober, present, sober) +
         cell(absent_drunk, absent, drunk) + cell(absent_sober, absent, sober);
}

std::vector<RankedFeature> ChiSquaredRank(
    std::span<const features::FeatureVector> rows, std::span<const int> labels,
    const features::FeatureRegistry &registry) {
  if (rows.size() != labels.size()) {
    throw DataError("rows and labels differ in length");
  }
  const std::size_t dim = registry.size();
  std::vector<double> present_drunk(dim, 0.0), present_sober(dim, 0.0);
  double drunk = 0.0, sober = 0.0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const bool is_drunk = labels[i] > 0;
    (is_drunk ? drunk : sober) += 1.0;
    for (const features::FeatureEntry &e : rows[i].entries()) {
      if (e.value == 0.0 || e.index >= dim) continue;
      (is_drunk ? present_drunk : present_sober)[e.index] += 1.0;
    }
  }
  const double n = drunk + sober;
  std::vector<RankedFeature> ranking;
  ranking.reserve(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    const double a = present_drunk[j], b = present_sober[j];
    RankedFeature f;
    f.name = registry.Name(j);
    f.chi2 = ChiSquared2x2(a, b, drunk - a, sober - b);
    const double expected = n == 0.0 ? 0.0 : (a + b) * drunk / n;
    f.affinity = a > expected ? Label::kDrunk : Label::kSober;
    ranking.push_back(std::move(f));
  }
  std::sort(ranking.begin(), ranking.end(),
            [](const RankedFeature &x, const RankedFeature &y) {
              if (x.chi2 != y.chi2) return x.chi2 > y.chi2;
              return x.name < y.name;
            });
  return ranking;
}

void WriteRankingTsv(std::ostream &out,
                     std::span<const RankedFeature> ranking) {
  for (std::size_t i = 0; i < ranking.size(); ++i) {
    out << i + 1 << '\t' << ranking[i].name << '\t'
        << FormatFixed(ranking[i].chi2, 6) << '\t'
        << LabelName(ranking[i].affinity) << '\n';
  }
}

}  // namespace soberlens::learn
