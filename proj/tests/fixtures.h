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

#ifndef PAINFACETS_TESTS_FIXTURES_H_
#define PAINFACETS_TESTS_FIXTURES_H_

#include <string>
#include <vector>

#include "painfacets/corpus.h"
#include "painfacets/embeddings.h"
#include "painfacets/lexicon.h"
#include "painfacets/rng.h"

namespace painfacets::fixture {

inline const std::vector<std::string>& Triggers() {
  static const std::vector<std::string> w{"burning", "night"};
  return w;
}

// Non-trigger stand-ins living next to each trigger.
inline const std::vector<std::vector<std::string>>& Twins() {
  static const std::vector<std::vector<std::string>> w{{"aching", "throbbing"},
                                                       {"evening", "dusk"}};
  return w;
}

inline const std::vector<std::string>& Fillers() {
  static const std::vector<std::string> w{"my",   "feet",   "are",    "badly", "hands", "always",
                                          "legs", "really", "hurt",   "the",   "at",    "and"};
  return w;
}

// One tag for every toy word so pools depend only on geometry.
inline const PosLexicon& ToyLexicon() {
  static const PosLexicon lex = [] {
    PosLexicon l;
    for (const auto& w : Triggers()) l.Add(w, PosTag::kNoun);
    for (const auto& g : Twins()) {
      for (const auto& w : g) l.Add(w, PosTag::kNoun);
    }
    for (const auto& w : Fillers()) l.Add(w, PosTag::kNoun);
    return l;
  }();
  return lex;
}

// Each trigger sits on its own axis with its twins; fillers share a third
// axis. With k <= 2 no filler ever draws a trigger and no trigger draws
// another trigger.
inline EmbeddingTable ToyTable() {
  constexpr std::size_t kDim = 9;
  EmbeddingTable table;
  Rng rng(7);
  auto noise = [&](double scale) { return (rng.Uniform() * 2.0 - 1.0) * scale; };
  for (std::size_t t = 0; t < Triggers().size(); ++t) {
    std::vector<double> v(kDim, 0.0);
    v[t] = 1.0;
    table.Add(Triggers()[t], v);
    for (std::size_t j = 0; j < Twins()[t].size(); ++j) {
      std::vector<double> u(kDim, 0.0);
      u[t] = 1.0;
      u[3 + j] = 0.1 * static_cast<double>(j + 1);
      table.Add(Twins()[t][j], u);
    }
  }
  for (const auto& w : Fillers()) {
    std::vector<double> v(kDim, 0.0);
    v[2] = 1.0;
    for (std::size_t i = 3; i < kDim; ++i) v[i] = noise(0.3);
    table.Add(w, v);
  }
  return table;
}

inline Sentence MakeSentence(const std::string& text, std::size_t index = 0,
                             CohortLabel label = CohortLabel::kFM) {
  Sentence s;
  s.doc_id = "toy";
  s.index = index;
  s.text = text;
  s.tokens = Tokenize(text);
  s.label = label;
  return s;
}

}  // namespace painfacets::fixture

#endif  // PAINFACETS_TESTS_FIXTURES_H_
