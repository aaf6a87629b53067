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

#ifndef PAINFACETS_SYNTHETIC_H_
#define PAINFACETS_SYNTHETIC_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "painfacets/corpus.h"
#include "painfacets/embeddings.h"

namespace painfacets {

// Desk-scale stand-in for a clinical interview corpus. Sentences are bags of
// neutral filler words; with probability `plant_rate` one keyword from the
// document's cohort pool is inserted at a random position.
struct SyntheticSpec {
  std::size_t fm_documents = 20;
  std::size_t np_documents = 20;
  std::size_t sentences_per_document = 20;
  std::vector<std::string> fm_keywords;
  std::vector<std::string> np_keywords;
  double plant_rate = 1.0;
  std::size_t min_fillers = 3;
  std::size_t max_fillers = 7;
};

// Default keyword pools (eight per cohort) and counts.
SyntheticSpec DefaultSyntheticSpec();

// Filler vocabulary, grouped by coarse tag in the default POS lexicon.
const std::vector<std::string>& SyntheticFillers();

// Deterministic under `seed`. Document ids are "FM-000", "NP-000", ...
// Throws InvalidArgument for an empty keyword pool, a keyword that is also a
// filler, or a non-positive document/sentence count.
Corpus GenerateSynthetic(const SyntheticSpec& spec, std::uint64_t seed);

// Embedding table covering fillers and keywords. Keyword i of one cohort is
// the nearest same-tag neighbor of keyword i of the other cohort; keywords of
// one cohort share a cohort axis (so mean embeddings are linearly separable);
// fillers are orthogonal to every keyword and mutually positively correlated.
EmbeddingTable SyntheticEmbeddings(const SyntheticSpec& spec, std::uint64_t seed);

}  // namespace painfacets

#endif  // PAINFACETS_SYNTHETIC_H_
