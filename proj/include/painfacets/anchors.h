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

#ifndef PAINFACETS_ANCHORS_H_
#define PAINFACETS_ANCHORS_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "painfacets/classifier.h"
#include "painfacets/corpus.h"
#include "painfacets/embeddings.h"
#include "painfacets/lexicon.h"
#include "painfacets/rng.h"

namespace painfacets {

struct AnchorConfig {
  double tau = 0.95;
  // Samples per precision estimate, and per refinement batch.
  std::size_t n_samples = 100;
  double p_replace = 0.5;
  std::size_t k_neighbors = 10;
  std::size_t beam_width = 4;
  // Defaults to the number of non-punctuation tokens.
  std::optional<std::size_t> max_anchor_size;
  double confidence_delta = 0.05;
  // Upper bound on samples spent on one candidate. A candidate whose running
  // estimate is at least tau but whose lower bound is not yet is re-sampled
  // in batches of n_samples until it qualifies, drops below tau, or hits
  // this cap.
  std::size_t max_samples = 2000;
  std::uint64_t seed = 42;

  // Throws InvalidArgument.
  void Validate() const;
};

// Sorted, duplicate-free token positions.
using IndexSet = std::vector<std::size_t>;

struct PerturbationSample {
  std::vector<std::string> tokens;
  IndexSet changed_indices;
};

struct AnchorWord {
  std::size_t index = 0;
  std::string surface;
  PosTag pos = PosTag::kOther;

  friend bool operator==(const AnchorWord&, const AnchorWord&) = default;
};

struct Explanation {
  enum class Failure { kNone, kInvalidSentence, kPredictionUnavailable };

  Sentence sentence;
  Prediction predicted;
  std::vector<AnchorWord> anchor;
  double precision_estimate = 0.0;
  double precision_lower_bound = 0.0;
  std::size_t samples_used = 0;
  bool saturated = false;
  Failure failure = Failure::kNone;
  std::string error;

  bool ok() const { return failure == Failure::kNone; }
  IndexSet anchor_indices() const;

  friend bool operator==(const Explanation&, const Explanation&) = default;
};

struct PrecisionEstimate {
  double estimate = 0.0;
  double lower_bound = 0.0;
  std::size_t samples = 0;
  std::size_t agreements = 0;
};

// One-sided Hoeffding bound, clamped to [0,1].
double HoeffdingLowerBound(double estimate, std::size_t samples, double delta);

// Per-sentence perturbation model: each token's neighbor pool is its
// k nearest same-tag neighbors. Punctuation and out-of-vocabulary tokens get
// an empty pool and are never replaced.
class Perturber {
 public:
  Perturber(std::span<const std::string> tokens, const EmbeddingTable& table,
            std::size_t k_neighbors, const PosLexicon& lexicon = PosLexicon::Default());

  // Tokens outside `fixed` are independently replaced with probability
  // p_replace by a uniform draw from their pool.
  PerturbationSample Sample(const IndexSet& fixed, double p_replace, Rng& rng) const;

  const std::vector<Token>& tokens() const { return tokens_; }
  const std::vector<std::vector<std::string>>& pools() const { return pools_; }
  // Positions that may be anchors: the non-punctuation tokens.
  const IndexSet& eligible() const { return eligible_; }

 private:
  std::vector<Token> tokens_;
  std::vector<std::vector<std::string>> pools_;
  IndexSet eligible_;
};

PerturbationSample Perturb(std::span<const std::string> tokens, const IndexSet& fixed,
                           const AnchorConfig& config, const EmbeddingTable& table, Rng& rng,
                           const PosLexicon& lexicon = PosLexicon::Default());

// Rendering used for every perturbed sample: a single-space join.
std::string RenderTokens(std::span<const std::string> tokens);

// Bottom-up beam search for anchors against one classifier. Stateless
// beyond its configuration; safe to share across threads when the
// classifier is.
class AnchorExplainer {
 public:
  AnchorExplainer(const Classifier& model, const EmbeddingTable& table, AnchorConfig config,
                  const PosLexicon& lexicon = PosLexicon::Default());

  // Fraction of n_samples perturbations (sample indices [0, n_samples))
  // whose predicted label matches the prediction on the original sentence.
  PrecisionEstimate EstimatePrecision(const Sentence& sentence, const IndexSet& candidate) const;

  // Same, over sample indices [first_sample, first_sample + count) with an
  // explicit seed. Used for independent re-estimates.
  PrecisionEstimate EstimatePrecision(const Sentence& sentence, const IndexSet& candidate,
                                      std::uint64_t seed, std::size_t first_sample,
                                      std::size_t count) const;

  // Throws InvalidArgument for a punctuation-only sentence and
  // PredictionUnavailable from the classifier.
  Explanation FindAnchor(const Sentence& sentence) const;

  // Order preserved; failures are recorded on the explanation.
  std::vector<Explanation> ExplainBatch(std::span<const Sentence> sentences,
                                        std::size_t threads = 1) const;

  const AnchorConfig& config() const { return config_; }

 private:
  struct Counts {
    std::size_t samples = 0;
    std::size_t agreements = 0;
  };

  Counts Sample(const Perturber& perturber, const Sentence& sentence, CohortLabel original,
                const IndexSet& candidate, std::uint64_t seed, std::size_t first,
                std::size_t count) const;
  PrecisionEstimate Finish(Counts counts) const;

  const Classifier* model_;
  const EmbeddingTable* table_;
  AnchorConfig config_;
  const PosLexicon* lexicon_;
};

inline Explanation FindAnchor(const Classifier& model, const Sentence& sentence,
                              const AnchorConfig& config, const EmbeddingTable& table) {
  return AnchorExplainer(model, table, config).FindAnchor(sentence);
}

inline std::vector<Explanation> ExplainBatch(const Classifier& model,
                                             std::span<const Sentence> sentences,
                                             const AnchorConfig& config,
                                             const EmbeddingTable& table,
                                             std::size_t threads = 1) {
  return AnchorExplainer(model, table, config).ExplainBatch(sentences, threads);
}

}  // namespace painfacets

#endif  // PAINFACETS_ANCHORS_H_
