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

#ifndef PAINFACETS_FACETS_H_
#define PAINFACETS_FACETS_H_

#include <cstddef>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "painfacets/anchors.h"
#include "painfacets/cohort.h"
#include "painfacets/lexicon.h"

namespace painfacets {

// Normalized facet words.
using FacetSet = std::set<std::string>;

struct FacetEntry {
  std::size_t count = 0;  // explanations whose anchor contains the word
  PosTag pos = PosTag::kOther;

  friend bool operator==(const FacetEntry&, const FacetEntry&) = default;
};

struct FacetLexicon {
  CohortLabel cohort = CohortLabel::kFM;
  std::map<std::string, FacetEntry> entries;

  FacetSet words() const;
  friend bool operator==(const FacetLexicon&, const FacetLexicon&) = default;
};

// Union of anchor words over the successful, non-saturated explanations of
// sentences labeled `cohort`. A word's tag is the majority over its
// occurrences, ties going to the tag seen first.
FacetLexicon CollectFacets(std::span<const Explanation> explanations, CohortLabel cohort);

struct RankedFacet {
  std::string word;
  std::size_t count = 0;

  friend bool operator==(const RankedFacet&, const RankedFacet&) = default;
};

struct FacetReport {
  std::size_t n = 0;
  std::vector<RankedFacet> nouns;
  std::vector<RankedFacet> verbs;
  std::vector<RankedFacet> adjectives;
};

// Per NOUN/VERB/ADJ: the n highest counts, count descending then word
// ascending. Throws InvalidArgument when n == 0.
FacetReport TopFacets(const FacetLexicon& lexicon, std::size_t n);

// Candidates whose word equals a normalized token of `text`.
FacetSet FacetsInText(std::string_view text, const FacetSet& candidates);

// Content words of the default depression/wellbeing screening questions.
const FacetSet& DefaultExpertFacets();
// Normalizes, drops empties and deduplicates.
FacetSet LoadExpertFacets(std::span<const std::string> words);

}  // namespace painfacets

#endif  // PAINFACETS_FACETS_H_
