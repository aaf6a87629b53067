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

#ifndef PAINFACETS_METRICS_H_
#define PAINFACETS_METRICS_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "painfacets/classifier.h"
#include "painfacets/cohort.h"
#include "painfacets/corpus.h"

namespace painfacets {

// Rank (Mann-Whitney) AUC with FM as the positive class: the probability a
// random FM score exceeds a random NP score, ties counting one half.
// Throws InvalidArgument on length mismatch or a single-class input.
double Auc(std::span<const double> scores, std::span<const CohortLabel> labels);

struct RocPoint {
  double fpr = 0.0;
  double tpr = 0.0;

  friend bool operator==(const RocPoint&, const RocPoint&) = default;
};

// Thresholds swept over the distinct scores, highest first. Starts at (0,0)
// and ends at (1,1).
std::vector<RocPoint> RocCurve(std::span<const double> scores, std::span<const CohortLabel> labels);

// Trapezoidal area under a polyline.
double AreaUnder(std::span<const RocPoint> curve);

struct CohortMetrics {
  double precision = 0.0;
  double recall = 0.0;
};

struct Metrics {
  double auc = 0.0;
  double accuracy = 0.0;
  CohortMetrics fm;
  CohortMetrics np;
  std::vector<RocPoint> roc;
  std::size_t support = 0;
};

// Labels come from the 0.5 rule; precision/recall are 0 when undefined.
Metrics ComputeMetrics(std::span<const double> scores, std::span<const CohortLabel> labels);

Metrics Evaluate(const Classifier& model, std::span<const Sentence> test);

struct CvResult {
  std::size_t k = 0;
  std::vector<double> fold_auc;
  double mean_auc = 0.0;
  double std_auc = 0.0;  // population standard deviation
};

// Builds a classifier from a training subset. For external adapters the
// training data may be ignored.
using Trainer = std::function<std::unique_ptr<Classifier>(std::span<const Sentence> train)>;

Trainer BuiltinTrainer(const EmbeddingTable& table, const TrainConfig& config);

// Trains on each fold's complement and scores the fold. Folds are processed
// by up to `threads` workers; results do not depend on scheduling. Throws
// InvalidArgument naming the fold whose complement (or held-out part) is
// single-class.
CvResult CrossValidate(const Corpus& corpus, std::size_t k, std::uint64_t seed,
                       const Trainer& trainer, std::size_t threads = 1);
CvResult CrossValidate(const Corpus& corpus, std::size_t k, std::uint64_t seed,
                       const EmbeddingTable& table, const TrainConfig& config,
                       std::size_t threads = 1);

}  // namespace painfacets

#endif  // PAINFACETS_METRICS_H_
