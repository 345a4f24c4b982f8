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

#ifndef SOBERLENS_EVAL_METRICS_H_
#define SOBERLENS_EVAL_METRICS_H_

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>

namespace soberlens::eval {

// Drunk is the positive class.
struct ConfusionMatrix {
  long tp = 0;
  long fp = 0;
  long fn = 0;
  long tn = 0;

  // gold and predicted are +1 / -1.
  void Add(int gold, int predicted);
  long total() const { return tp + fp + fn + tn; }

  ConfusionMatrix &operator+=(const ConfusionMatrix &other);
  bool operator==(const ConfusionMatrix &) const = default;
};

// nullopt marks a metric whose denominator is zero.
struct Metrics {
  std::optional<double> a;
  std::optional<double> pp;
  std::optional<double> np;
  std::optional<double> pr;
  std::optional<double> nr;
};

// a = (tp+tn)/total, pp = tp/(tp+fp), np = tn/(tn+fn), pr = tp/(tp+fn),
// nr = tn/(tn+fp).
Metrics ComputeMetrics(const ConfusionMatrix &m);

// Percentage with one decimal, or "—" when undefined.
std::string FormatPercent(const std::optional<double> &value);
// Fraction with six decimals, or "—" when undefined.
std::string FormatFraction(const std::optional<double> &value);

using MetricsRow = std::pair<std::string, Metrics>;

// Aligned table in the column order A, NP, PP, NR, PR (percentages).
void WriteMetricsTable(std::ostream &out, std::span<const MetricsRow> rows);

// TSV header `name<TAB>A<TAB>NP<TAB>PP<TAB>NR<TAB>PR` then one line per row
// (fractions).
void WriteMetricsTsv(std::ostream &out, std::span<const MetricsRow> rows);

}  // namespace soberlens::eval

#endif  // SOBERLENS_EVAL_METRICS_H_
