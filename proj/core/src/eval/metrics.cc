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

#include "soberlens/eval/metrics.h"

#include <algorithm>
#include <iomanip>
#include <ostream>

#include "soberlens/common/format.h"

namespace soberlens::eval {

namespace {

constexpr const char *kUndefined = "—";

std::optional<double> Ratio(long numerator, long denominator) {
  if (denominator == 0) return std::nullopt;
  return static_cast<double>(numerator) / static_cast<double>(denominator);
}

// Display width of a UTF-8 string in code points.
std::size_t Width(const std::string &s) {
  return static_cast<std::size_t>(std::count_if(
      s.begin(), s.end(), [](char c) { return (c & 0xC0) != 0x80; }));
}

void Pad(std::ostream &out, const std::string &s, std::size_t width,
         bool right) {
  std::string fill(width > Width(s) ? width - Width(s) : 0, ' ');
  out << (right ? fill + s : s + fill);
}

}  // namespace

void ConfusionMatrix::Add(int gold, int predicted) {
  if (gold > 0) {
    (predicted > 0 ? tp : fn) += 1;
  } else {
    (predicted > 0 ? fp : tn) += 1;
  }
}

ConfusionMatrix &ConfusionMatrix::operator+=(const ConfusionMatrix &other) {
  tp += other.tp;
  fp += other.fp;
  fn += other.fn;
  tn += other.tn;
  return *this;
}

Metrics ComputeMetrics(const ConfusionMatrix &m) {
  return {Ratio(m.tp + m.tn, m.total()), Ratio(m.tp, m.tp + m.fp),
          Ratio(m.tn, m.tn + m.fn), Ratio(m.tp, m.tp + m.fn),
          Ratio(m.tn, m.tn + m.fp)};
}

std::string FormatPercent(const std::optional<double> &value) {
  return value ? FormatFixed(*value * 100.0, 1) : kUndefined;
}

std::string FormatFraction(const std::optional<double> &value) {
  return value ? FormatFixed(*value, 6) : kUndefined;
}

void WriteMetricsTable(std::ostream &out, std::span<const MetricsRow> rows) {
  std::size_t name_width = 4;
  for (const MetricsRow &row : rows) {
    name_width = std::max(name_width, Width(row.first));
  }
  Pad(out, "", name_width, false);
  for (const char *col : {"A (%)", "NP (%)", "PP (%)", "NR (%)", "PR (%)"}) {
    out << "  ";
    Pad(out, col, 7, true);
  }
  out << '\n';
  for (const MetricsRow &row : rows) {
    Pad(out, row.first, name_width, false);
    const Metrics &m = row.second;
    for (const auto *value : {&m.a, &m.np, &m.pp, &m.nr, &m.pr}) {
      out << "  ";
      Pad(out, FormatPercent(*value), 7, true);
    }
    out << '\n';
  }
}

void WriteMetricsTsv(std::ostream &out, std::span<const MetricsRow> rows) {
  out << "name\tA\tNP\tPP\tNR\tPR\n";
  for (const MetricsRow &row : rows) {
    const Metrics &m = row.second;
    out << row.first;
    for (const auto *value : {&m.a, &m.np, &m.pp, &m.nr, &m.pr}) {
      out << '\t' << FormatFraction(*value);
    }
    out << '\n';
  }
}

}  // namespace soberlens::eval
