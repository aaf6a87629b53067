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

#include "painfacets/synthetic.h"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <unordered_set>

#include "painfacets/error.h"
#include "painfacets/rng.h"

namespace painfacets {

namespace {

constexpr std::size_t kFillerNoiseDims = 8;
constexpr double kCohortWeight = 0.3;
constexpr double kOwnWeight = 0.3;
constexpr double kFillerNoise = 0.3;

void Validate(const SyntheticSpec& spec) {
  if (spec.fm_keywords.empty() || spec.np_keywords.empty()) {
    throw InvalidArgument("keyword pool is empty");
  }
  if (!(spec.plant_rate >= 0.0 && spec.plant_rate <= 1.0)) {
    throw InvalidArgument("plant rate must lie in [0,1]");
  }
  if (spec.sentences_per_document == 0) {
    throw InvalidArgument("sentences per document must be positive");
  }
  if (spec.min_fillers == 0 || spec.min_fillers > spec.max_fillers) {
    throw InvalidArgument("filler range must satisfy 0 < min <= max");
  }
  std::unordered_set<std::string> fillers(SyntheticFillers().begin(),
                                          SyntheticFillers().end());
  std::unordered_set<std::string> seen;
  for (const auto* pool : {&spec.fm_keywords, &spec.np_keywords}) {
    for (const auto& kw : *pool) {
      if (kw.empty() || Normalize(kw) != kw) {
        throw InvalidArgument("keyword '" + kw + "' is not in normalized form");
      }
      if (fillers.contains(kw)) throw InvalidArgument("keyword '" + kw + "' is a filler");
      if (!seen.insert(kw).second) throw InvalidArgument("keyword '" + kw + "' repeated");
    }
  }
}

std::string RenderSentence(std::vector<std::string> words) {
  std::string out;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (i > 0) out += ' ';
    out += words[i];
  }
  out[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(out[0])));
  out += '.';
  return out;
}

}  // namespace

SyntheticSpec DefaultSyntheticSpec() {
  SyntheticSpec spec;
  // Paired by index and by coarse tag (six nouns, then two adjectives).
  spec.fm_keywords = {"fatigue", "stiffness", "fog",       "bowel",
                      "stress",  "massage",   "exhausted", "widespread"};
  spec.np_keywords = {"numbness", "tingling", "nerve",   "surgery",
                      "shock",    "injury",   "burning", "stabbing"};
  return spec;
}

const std::vector<std::string>& SyntheticFillers() {
  static const std::vector<std::string> kFillers = {
      // NOUN
      "day", "night", "morning", "week", "home", "work", "doctor", "family",
      "friends", "body", "legs", "back", "hands", "time", "life", "sleep",
      "energy", "appetite", "dinner", "bed", "house", "weather",
      // VERB
      "feel", "try", "go", "get", "take", "need", "want", "think", "help",
      "started", "stay", "know", "see", "rest", "move",
      // ADJ
      "bad", "hard", "tired", "little", "good", "long", "normal", "worse",
      "better", "constant", "difficult", "whole",
      // ADV
      "really", "sometimes", "always", "often", "usually", "still", "never",
      "mostly", "now", "then", "maybe", "quite",
      // OTHER
      "i", "my", "the", "it", "at", "in", "and", "with", "me", "is", "was",
      "of", "to", "a", "for", "on"};
  return kFillers;
}

Corpus GenerateSynthetic(const SyntheticSpec& spec, std::uint64_t seed) {
  Validate(spec);
  const auto& fillers = SyntheticFillers();
  std::vector<Document> docs;
  for (CohortLabel label : {CohortLabel::kFM, CohortLabel::kNP}) {
    const bool fm = label == CohortLabel::kFM;
    const auto& pool = fm ? spec.fm_keywords : spec.np_keywords;
    const std::size_t count = fm ? spec.fm_documents : spec.np_documents;
    for (std::size_t d = 0; d < count; ++d) {
      char id[32];
      std::snprintf(id, sizeof(id), "%s-%03zu", fm ? "FM" : "NP", d);
      Rng rng = StreamKey(seed).Add(std::string_view(id)).MakeRng();
      std::string text;
      for (std::size_t s = 0; s < spec.sentences_per_document; ++s) {
        const std::size_t n_fill =
            spec.min_fillers + rng.Below(spec.max_fillers - spec.min_fillers + 1);
        std::vector<std::string> words;
        for (std::size_t w = 0; w < n_fill; ++w) {
          words.push_back(fillers[rng.Below(fillers.size())]);
        }
        if (rng.Bernoulli(spec.plant_rate)) {
          const auto& kw = pool[rng.Below(pool.size())];
          words.insert(words.begin() + static_cast<std::ptrdiff_t>(rng.Below(words.size() + 1)),
                       kw);
        }
        if (!text.empty()) text += ' ';
        text += RenderSentence(std::move(words));
      }
      docs.push_back({id, label, std::move(text)});
    }
  }
  return Corpus(std::move(docs));
}

EmbeddingTable SyntheticEmbeddings(const SyntheticSpec& spec, std::uint64_t seed) {
  Validate(spec);
  const std::size_t pairs = std::max(spec.fm_keywords.size(), spec.np_keywords.size());
  const std::size_t n_keywords = spec.fm_keywords.size() + spec.np_keywords.size();
  // Layout: [pair axes | per-keyword axes | cohort axis | filler axis | noise]
  const std::size_t own_base = pairs;
  const std::size_t cohort_axis = own_base + n_keywords;
  const std::size_t filler_axis = cohort_axis + 1;
  const std::size_t noise_base = filler_axis + 1;
  const std::size_t dim = noise_base + kFillerNoiseDims;

  EmbeddingTable table;
  Rng rng = StreamKey(seed).Add(std::string_view("embeddings")).MakeRng();
  std::vector<double> v(dim);
  for (const auto& word : SyntheticFillers()) {
    std::fill(v.begin(), v.end(), 0.0);
    v[filler_axis] = 1.0;
    for (std::size_t i = 0; i < kFillerNoiseDims; ++i) {
      v[noise_base + i] = (2.0 * rng.Uniform() - 1.0) * kFillerNoise;
    }
    table.Add(word, v);
  }
  std::size_t own = own_base;
  for (CohortLabel label : {CohortLabel::kFM, CohortLabel::kNP}) {
    const auto& pool = label == CohortLabel::kFM ? spec.fm_keywords : spec.np_keywords;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      std::fill(v.begin(), v.end(), 0.0);
      v[i] = 1.0;
      v[own++] = kOwnWeight;
      v[cohort_axis] = label == CohortLabel::kFM ? kCohortWeight : -kCohortWeight;
      table.Add(pool[i], v);
    }
  }
  return table;
}

}  // namespace painfacets
