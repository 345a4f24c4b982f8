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

#ifndef SOBERLENS_COMMON_FORMAT_H_
#define SOBERLENS_COMMON_FORMAT_H_

#include <charconv>
#include <string>

namespace soberlens {

// Shortest decimal text that parses back to exactly `value`.
inline std::string FormatDouble(double value) {
  char buf[32];
  auto result = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, result.ptr);
}

// Fixed-point with `digits` decimals.
inline std::string FormatFixed(double value, int digits) {
  char buf[64];
  auto result = std::to_chars(buf, buf + sizeof(buf), value,
                              std::chars_format::fixed, digits);
  return std::string(buf, result.ptr);
}

}  // namespace soberlens

#endif  // SOBERLENS_COMMON_FORMAT_H_
