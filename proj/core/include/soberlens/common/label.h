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

#ifndef SOBERLENS_COMMON_LABEL_H_
#define SOBERLENS_COMMON_LABEL_H_

#include <string_view>

namespace soberlens {

// Drunk is the positive class.
enum class Label { kDrunk, kSober };

inline constexpr int Sign(Label label) {
  return label == Label::kDrunk ? +1 : -1;
}

inline constexpr Label LabelFromSign(int sign) {
  return sign > 0 ? Label::kDrunk : Label::kSober;
}

inline constexpr std::string_view LabelName(Label label) {
  return label == Label::kDrunk ? "drunk" : "sober";
}

// Accepts "drunk" / "sober" (lowercase). Throws ConfigError otherwise.
Label ParseLabel(std::string_view name);

}  // namespace soberlens

#endif  // SOBERLENS_COMMON_LABEL_H_
