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

#include "painfacets/facets.h"

#include <algorithm>
#include <unordered_map>

#include "painfacets/error.h"

namespace painfacets {

FacetSet FacetLexicon::words() const {
  FacetSet out;
  for (const auto& [word, entry] : entries) out.insert(word);
  return out;
}

FacetLexicon CollectFacets(std::span<const Explanation> explanations, CohortLabel cohort) {
  struct Votes {
    std::vector<PosTag> first_seen;  // distinct tags in order of appearance
    std::unordered_map<int, std::size_t> tally;
  };
  FacetLexicon lexicon;
  lexicon.cohort = cohort;
  std::map<std::string, Votes> votes;
  for (const auto& e : explanations) {
    if (!e.ok() || e.saturated || e.sentence.label != cohort) continue;
    FacetSet in_this;
    for (const auto& w : e.anchor) {
      std::string word = Normalize(w.surface);
      if (word.empty()) continue;
      Votes& v = votes[word];
      if (std::find(v.first_seen.begin(), v.first_seen.end(), w.pos) == v.first_seen.end()) {
        v.first_seen.push_back(w.pos);
      }
      ++v.tally[static_cast<int>(w.pos)];
      if (in_this.insert(word).second) ++lexicon.entries[word].count;
    }
  }
  for (auto& [word, v] : votes) {
    PosTag best = v.first_seen.front();
    for (PosTag tag : v.first_seen) {
      if (v.tally[static_cast<int>(tag)] > v.tally[static_cast<int>(best)]) best = tag;
    }
    lexicon.entries[word].pos = best;
  }
  return lexicon;
}

FacetReport TopFacets(const FacetLexicon& lexicon, std::size_t n) {
  if (n == 0) throw InvalidArgument("top-N requires n >= 1");
  FacetReport report;
  report.n = n;
  for (const auto& [word, entry] : lexicon.entries) {
    RankedFacet ranked{word, entry.count};
    switch (entry.pos) {
      case PosTag::kNoun:
        report.nouns.push_back(ranked);
        break;
      case PosTag::kVerb:
        report.verbs.push_back(ranked);
        break;
      case PosTag::kAdj:
        report.adjectives.push_back(ranked);
        break;
      default:
        break;
    }
  }
  for (auto* list : {&report.nouns, &report.verbs, &report.adjectives}) {
    std::sort(list->begin(), list->end(), [](const RankedFacet& a, const RankedFacet& b) {
      if (a.count != b.count) return a.count > b.count;
      return a.word < b.word;
    });
    if (list->size() > n) list->resize(n);
  }
  return report;
}

FacetSet FacetsInText(std::string_view text, const FacetSet& candidates) {
  FacetSet out;
  if (candidates.empty()) return out;
  for (const auto& token : Tokenize(text)) {
    std::string word = Normalize(token);
    if (!word.empty() && candidates.contains(word)) out.insert(std::move(word));
  }
  return out;
}

const FacetSet& DefaultExpertFacets() {
  static const FacetSet kDefault = {
      "interest", "pleasure",  "depressed",     "hopeless", "sleep",   "sleeping",
      "tired",    "energy",    "appetite",      "overeating", "failure", "concentrating",
      "fidgety",  "restless",  "dead",          "hurting"};
  return kDefault;
}

FacetSet LoadExpertFacets(std::span<const std::string> words) {
  FacetSet out;
  for (const auto& w : words) {
    const auto begin = w.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) continue;
    const auto end = w.find_last_not_of(" \t\r\n");
    std::string n = Normalize(std::string_view(w).substr(begin, end - begin + 1));
    if (!n.empty()) out.insert(std::move(n));
  }
  return out;
}

}  // namespace painfacets
