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

#ifndef PAINFACETS_CLASSIFIER_H_
#define PAINFACETS_CLASSIFIER_H_

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "painfacets/cohort.h"
#include "painfacets/corpus.h"
#include "painfacets/embeddings.h"

namespace painfacets {

struct Prediction {
  CohortLabel label = CohortLabel::kFM;
  double prob_positive = 0.5;  // P(FM)

  friend bool operator==(const Prediction&, const Prediction&) = default;
};

// FM iff p >= 0.5.
inline CohortLabel LabelFor(double prob_positive) {
  return prob_positive >= 0.5 ? CohortLabel::kFM : CohortLabel::kNP;
}

inline Prediction MakePrediction(double prob_positive) {
  return {LabelFor(prob_positive), prob_positive};
}

// Black-box binary cohort classifier. Implementations must tolerate
// concurrent calls.
class Classifier {
 public:
  virtual ~Classifier() = default;

  // One P(FM) per input sentence, in order. Throws PredictionUnavailable.
  virtual std::vector<double> PredictProba(std::span<const std::string> sentences) const = 0;

  Prediction Predict(std::string_view sentence) const;
  std::vector<Prediction> PredictBatch(std::span<const std::string> sentences) const;
};

struct TrainConfig {
  double learning_rate = 0.1;
  std::size_t epochs = 200;
  std::uint64_t seed = 42;
  // Standard deviation-like scale of the initial weights (uniform in
  // [-scale, scale]); 0 starts from the zero vector.
  double init_scale = 0.01;
};

// Logistic regression over the mean embedding of a sentence's in-vocabulary
// tokens. Holds a non-owning pointer to its embedding table, which must
// outlive the model.
class BuiltinModel : public Classifier {
 public:
  // weights.size() must equal table.dimension() + 1; the bias is last.
  BuiltinModel(std::vector<double> weights, const EmbeddingTable& table);

  std::vector<double> PredictProba(std::span<const std::string> sentences) const override;

  double ProbabilityOfTokens(std::span<const std::string> tokens) const;

  // Mean of the normalized in-vocabulary tokens; zero vector when none.
  std::vector<double> Features(std::span<const std::string> tokens) const;

  const std::vector<double>& weights() const { return weights_; }
  const EmbeddingTable& table() const { return *table_; }

 private:
  std::vector<double> weights_;
  const EmbeddingTable* table_;
};

struct TrainingTrace {
  // Mean cross-entropy before each epoch's update, plus the final loss.
  std::vector<double> loss;
};

// Full-batch gradient descent. Throws InvalidArgument for an empty or
// single-class training set, or an empty embedding table.
BuiltinModel TrainBuiltin(std::span<const Sentence> train, const EmbeddingTable& table,
                          const TrainConfig& config, TrainingTrace* trace = nullptr);
BuiltinModel TrainBuiltin(const Corpus& corpus, std::span<const std::size_t> indices,
                          const EmbeddingTable& table, const TrainConfig& config,
                          TrainingTrace* trace = nullptr);

// P(FM) = 1 when the sentence contains every word of at least one group in
// `fm_triggers` (normalized token match), else 0. A single group {"burning"}
// is the one-keyword oracle; {"burning", "night"} requires both.
class KeywordClassifier : public Classifier {
 public:
  explicit KeywordClassifier(std::vector<std::vector<std::string>> fm_triggers);
  static KeywordClassifier AnyOf(const std::vector<std::string>& words);
  static KeywordClassifier AllOf(const std::vector<std::string>& words);

  std::vector<double> PredictProba(std::span<const std::string> sentences) const override;

 private:
  std::vector<std::vector<std::string>> groups_;
};

// Always returns the same probability.
class ConstantClassifier : public Classifier {
 public:
  explicit ConstantClassifier(double prob) : prob_(prob) {}
  std::vector<double> PredictProba(std::span<const std::string> sentences) const override {
    return std::vector<double>(sentences.size(), prob_);
  }

 private:
  double prob_;
};

}  // namespace painfacets

#endif  // PAINFACETS_CLASSIFIER_H_
