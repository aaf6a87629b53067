// Copyright 2026 The painfacets Authors.
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

#ifndef PAINFACETS_COHORT_H_
#define PAINFACETS_COHORT_H_

#include <optional>
#include <string_view>

namespace painfacets {

// FM is the positive class throughout.
enum class CohortLabel { kFM, kNP };

constexpr std::string_view CohortName(CohortLabel label) {
  return label == CohortLabel::kFM ? "FM" : "NP";
}

inline std::optional<CohortLabel> ParseCohort(std::string_view name) {
  if (name == "FM") return CohortLabel::kFM;
  if (name == "NP") return CohortLabel::kNP;
  return std::nullopt;
}

constexpr CohortLabel Other(CohortLabel label) {
  return label == CohortLabel::kFM ? CohortLabel::kNP : CohortLabel::kFM;
}

}  // namespace painfacets

#endif  // PAINFACETS_COHORT_H_
