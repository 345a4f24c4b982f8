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

#ifndef SOBERLENS_TESTS_SUPPORT_ORACLES_H_
#define SOBERLENS_TESTS_SUPPORT_ORACLES_H_

#include <cstddef>
#include <vector>

namespace soberlens::testing {

// Shortcut form N (ad - bc)^2 / ((a+b)(c+d)(a+c)(b+d)); 0 when any margin
// is empty. a = present & drunk, b = present & sober, c = absent & drunk,
// d = absent & sober.
inline double ChiSquaredShortcut(double a, double b, double c, double d) {
  const double n = a + b + c + d;
  const double denom = (a + b) * (c + d) * (a + c) * (b + d);
  if (denom == 0.0) return 0.0;
  const double diff = a * d - b * c;
  return n * diff * diff / denom;
}

// Kappa from the 2x2 agreement table n[i][j]: p_o = trace / N and
// p_e = sum_k rows_k * cols_k / N^2. Labels are 0 / 1.
inline double KappaFromTable(const std::vector<int> &x,
                             const std::vector<int> &y) {
  long table[2][2] = {{0, 0}, {0, 0}};
  for (std::size_t i = 0; i < x.size(); ++i) ++table[x[i]][y[i]];
  const long n = static_cast<long>(x.size());
  const long trace = table[0][0] + table[1][1];
  long chance = 0;
  for (int k = 0; k < 2; ++k) {
    chance += (table[k][0] + table[k][1]) * (table[0][k] + table[1][k]);
  }
  const double po = static_cast<double>(trace) / static_cast<double>(n);
  const double pe =
      static_cast<double>(chance) / static_cast<double>(n * n);
  if (chance == n * n) return trace == n ? 1.0 : 0.0;
  return (po - pe) / (1.0 - pe);
}

}  // namespace soberlens::testing

#endif  // SOBERLENS_TESTS_SUPPORT_ORACLES_H_
