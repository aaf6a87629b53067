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

#include "painfacets/classifier.h"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "painfacets/error.h"
#include "painfacets/lexicon.h"
#include "painfacets/rng.h"

namespace painfacets {

namespace {

double Sigmoid(double z) {
  if (z >= 0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

// -log(sigmoid(z)) without overflow.
double SoftplusNeg(double z) { return z > 0 ? std::log1p(std::exp(-z)) : -z + std::log1p(std::exp(z)); }

}  // namespace

Prediction Classifier::Predict(std::string_view sentence) const {
  const std::string s(sentence);
  auto probs = PredictProba(std::span<const std::string>(&s, 1));
  return MakePrediction(probs.at(0));
}

std::vector<Prediction> Classifier::PredictBatch(std::span<const std::string> sentences) const {
  std::vector<Prediction> out;
  out.reserve(sentences.size());
  for (double p : PredictProba(sentences)) out.push_back(MakePrediction(p));
  return out;
}

BuiltinModel::BuiltinModel(std::vector<double> weights, const EmbeddingTable& table)
    : weights_(std::move(weights)), table_(&table) {
  const auto dim = table.dimension();
  if (!dim) throw InvalidArgument("builtin model needs a nonempty embedding table");
  if (weights_.size() != *dim + 1) {
    throw InvalidArgument("weight vector has " + std::to_string(weights_.size()) +
                          " entries, expected " + std::to_string(*dim + 1));
  }
}

std::vector<double> BuiltinModel::Features(std::span<const std::string> tokens) const {
  const std::size_t dim = weights_.size() - 1;
  std::vector<double> mean(dim, 0.0);
  std::size_t found = 0;
  for (const auto& token : tokens) {
    const double* v = table_->Find(Normalize(token));
    if (v == nullptr) continue;
    for (std::size_t i = 0; i < dim; ++i) mean[i] += v[i];
    ++found;
  }
  if (found > 0) {
    for (double& x : mean) x /= static_cast<double>(found);
  }
  return mean;
}

double BuiltinModel::ProbabilityOfTokens(std::span<const std::string> tokens) const {
  const auto x = Features(tokens);
  double z = weights_.back();
  for (std::size_t i = 0; i < x.size(); ++i) z += weights_[i] * x[i];
  return Sigmoid(z);
}

std::vector<double> BuiltinModel::PredictProba(std::span<const std::string> sentences) const {
  std::vector<double> out;
  out.reserve(sentences.size());
  for (const auto& s : sentences) out.push_back(ProbabilityOfTokens(Tokenize(s)));
  return out;
}

BuiltinModel TrainBuiltin(std::span<const Sentence> train, const EmbeddingTable& table,
                          const TrainConfig& config, TrainingTrace* trace) {
  if (train.empty()) throw InvalidArgument("training set is empty");
  const bool has_fm = std::any_of(train.begin(), train.end(),
                                  [](const Sentence& s) { return s.label == CohortLabel::kFM; });
  const bool has_np = std::any_of(train.begin(), train.end(),
                                  [](const Sentence& s) { return s.label == CohortLabel::kNP; });
  if (!has_fm || !has_np) throw InvalidArgument("training set contains a single class");
  const auto dim_opt = table.dimension();
  if (!dim_opt) throw InvalidArgument("embedding table is empty");
  const std::size_t dim = *dim_opt;

  std::vector<double> weights(dim + 1, 0.0);
  Rng rng(config.seed);
  for (double& w : weights) w = (2.0 * rng.Uniform() - 1.0) * config.init_scale;
  BuiltinModel model(weights, table);

  const std::size_t n = train.size();
  std::vector<std::vector<double>> features;
  std::vector<double> targets;
  features.reserve(n);
  for (const auto& s : train) {
    features.push_back(model.Features(s.tokens));
    targets.push_back(s.label == CohortLabel::kFM ? 1.0 : 0.0);
  }

  std::vector<double> grad(dim + 1);
  auto loss_and_grad = [&](bool want_grad) {
    std::fill(grad.begin(), grad.end(), 0.0);
    double loss = 0.0;
    for (std::size_t r = 0; r < n; ++r) {
      double z = weights[dim];
      for (std::size_t i = 0; i < dim; ++i) z += weights[i] * features[r][i];
      loss += targets[r] > 0.5 ? SoftplusNeg(z) : SoftplusNeg(-z);
      if (want_grad) {
        const double err = Sigmoid(z) - targets[r];
        for (std::size_t i = 0; i < dim; ++i) grad[i] += err * features[r][i];
        grad[dim] += err;
      }
    }
    return loss / static_cast<double>(n);
  };

  for (std::size_t epoch = 0; epoch < config.epochs; ++epoch) {
    const double loss = loss_and_grad(true);
    if (trace) trace->loss.push_back(loss);
    const double step = config.learning_rate / static_cast<double>(n);
    for (std::size_t i = 0; i <= dim; ++i) weights[i] -= step * grad[i];
  }
  if (trace) trace->loss.push_back(loss_and_grad(false));
  return BuiltinModel(std::move(weights), table);
}

BuiltinModel TrainBuiltin(const Corpus& corpus, std::span<const std::size_t> indices,
                          const EmbeddingTable& table, const TrainConfig& config,
                          TrainingTrace* trace) {
  std::vector<Sentence> subset;
  subset.reserve(indices.size());
  for (std::size_t i : indices) subset.push_back(corpus.sentences().at(i));
  return TrainBuiltin(subset, table, config, trace);
}

KeywordClassifier::KeywordClassifier(std::vector<std::vector<std::string>> fm_triggers)
    : groups_(std::move(fm_triggers)) {
  for (auto& group : groups_) {
    for (auto& w : group) w = Normalize(w);
  }
}

KeywordClassifier KeywordClassifier::AnyOf(const std::vector<std::string>& words) {
  std::vector<std::vector<std::string>> groups;
  for (const auto& w : words) groups.push_back({w});
  return KeywordClassifier(std::move(groups));
}

KeywordClassifier KeywordClassifier::AllOf(const std::vector<std::string>& words) {
  return KeywordClassifier({words});
}

std::vector<double> KeywordClassifier::PredictProba(
    std::span<const std::string> sentences) const {
  std::vector<double> out;
  out.reserve(sentences.size());
  for (const auto& s : sentences) {
    std::unordered_set<std::string> present;
    for (const auto& t : Tokenize(s)) present.insert(Normalize(t));
    const bool hit = std::any_of(groups_.begin(), groups_.end(), [&](const auto& group) {
      return !group.empty() && std::all_of(group.begin(), group.end(), [&](const auto& w) {
        return present.contains(w);
      });
    });
    out.push_back(hit ? 1.0 : 0.0);
  }
  return out;
}

}  // namespace painfacets
