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

#include "painfacets/metrics.h"

#include <algorithm>
#include <cmath>
#include <future>
#include <numeric>

#include "painfacets/error.h"

namespace painfacets {

namespace {

void CheckInputs(std::span<const double> scores, std::span<const CohortLabel> labels) {
  if (scores.size() != labels.size()) {
    throw InvalidArgument("scores and labels differ in length");
  }
  const auto positives = std::count(labels.begin(), labels.end(), CohortLabel::kFM);
  if (positives == 0 || positives == static_cast<std::ptrdiff_t>(labels.size())) {
    throw InvalidArgument("AUC needs both classes present");
  }
}

}  // namespace

double Auc(std::span<const double> scores, std::span<const CohortLabel> labels) {
  CheckInputs(scores, labels);
  const std::size_t n = scores.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return scores[a] < scores[b]; });

  // Sum of midranks of the positives.
  double rank_sum = 0.0;
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j < n && scores[order[j]] == scores[order[i]]) ++j;
    const double midrank = (static_cast<double>(i + 1) + static_cast<double>(j)) / 2.0;
    for (std::size_t t = i; t < j; ++t) {
      if (labels[order[t]] == CohortLabel::kFM) rank_sum += midrank;
    }
    i = j;
  }
  const double pos = static_cast<double>(std::count(labels.begin(), labels.end(), CohortLabel::kFM));
  const double neg = static_cast<double>(n) - pos;
  return (rank_sum - pos * (pos + 1.0) / 2.0) / (pos * neg);
}

std::vector<RocPoint> RocCurve(std::span<const double> scores,
                               std::span<const CohortLabel> labels) {
  CheckInputs(scores, labels);
  const std::size_t n = scores.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });
  const double pos = static_cast<double>(std::count(labels.begin(), labels.end(), CohortLabel::kFM));
  const double neg = static_cast<double>(n) - pos;

  std::vector<RocPoint> curve = {{0.0, 0.0}};
  double tp = 0.0;
  double fp = 0.0;
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j < n && scores[order[j]] == scores[order[i]]) {
      (labels[order[j]] == CohortLabel::kFM ? tp : fp) += 1.0;
      ++j;
    }
    curve.push_back({fp / neg, tp / pos});
    i = j;
  }
  return curve;
}

double AreaUnder(std::span<const RocPoint> curve) {
  double area = 0.0;
  for (std::size_t i = 1; i < curve.size(); ++i) {
    area += (curve[i].fpr - curve[i - 1].fpr) * (curve[i].tpr + curve[i - 1].tpr) / 2.0;
  }
  return area;
}

Metrics ComputeMetrics(std::span<const double> scores, std::span<const CohortLabel> labels) {
  Metrics m;
  m.auc = Auc(scores, labels);
  m.roc = RocCurve(scores, labels);
  m.support = scores.size();
  double tp = 0, fp = 0, tn = 0, fn = 0;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    const bool predicted_fm = LabelFor(scores[i]) == CohortLabel::kFM;
    const bool actual_fm = labels[i] == CohortLabel::kFM;
    if (predicted_fm && actual_fm) ++tp;
    if (predicted_fm && !actual_fm) ++fp;
    if (!predicted_fm && !actual_fm) ++tn;
    if (!predicted_fm && actual_fm) ++fn;
  }
  auto ratio = [](double a, double b) { return b > 0 ? a / b : 0.0; };
  m.accuracy = ratio(tp + tn, tp + tn + fp + fn);
  m.fm = {ratio(tp, tp + fp), ratio(tp, tp + fn)};
  m.np = {ratio(tn, tn + fn), ratio(tn, tn + fp)};
  return m;
}

Metrics Evaluate(const Classifier& model, std::span<const Sentence> test) {
  std::vector<std::string> texts;
  std::vector<CohortLabel> labels;
  texts.reserve(test.size());
  for (const auto& s : test) {
    texts.push_back(s.text);
    labels.push_back(s.label);
  }
  const auto scores = model.PredictProba(texts);
  return ComputeMetrics(scores, labels);
}

Trainer BuiltinTrainer(const EmbeddingTable& table, const TrainConfig& config) {
  return [&table, config](std::span<const Sentence> train) -> std::unique_ptr<Classifier> {
    return std::make_unique<BuiltinModel>(TrainBuiltin(train, table, config));
  };
}

CvResult CrossValidate(const Corpus& corpus, std::size_t k, std::uint64_t seed,
                       const Trainer& trainer, std::size_t threads) {
  const FoldPlan plan = MakeFolds(corpus, k, seed);
  const auto& all = corpus.sentences();

  auto gather = [&all](const std::vector<std::size_t>& idx) {
    std::vector<Sentence> out;
    out.reserve(idx.size());
    for (std::size_t i : idx) out.push_back(all[i]);
    return out;
  };
  auto both_classes = [](const std::vector<Sentence>& s) {
    bool fm = false, np = false;
    for (const auto& x : s) (x.label == CohortLabel::kFM ? fm : np) = true;
    return fm && np;
  };

  std::vector<std::vector<Sentence>> train(k), held_out(k);
  for (std::size_t f = 0; f < k; ++f) {
    train[f] = gather(plan.Complement(f));
    held_out[f] = gather(plan.Members(f));
    if (!both_classes(train[f])) {
      throw InvalidArgument("fold " + std::to_string(f) +
                            ": training complement contains a single class");
    }
    if (!both_classes(held_out[f])) {
      throw InvalidArgument("fold " + std::to_string(f) + ": held-out fold contains a single class");
    }
  }

  CvResult result;
  result.k = k;
  result.fold_auc.assign(k, 0.0);
  auto run_fold = [&](std::size_t f) {
    auto model = trainer(train[f]);
    result.fold_auc[f] = Evaluate(*model, held_out[f]).auc;
  };
  threads = std::max<std::size_t>(1, std::min(threads, k));
  if (threads == 1) {
    for (std::size_t f = 0; f < k; ++f) run_fold(f);
  } else {
    std::vector<std::future<void>> pending;
    for (std::size_t f = 0; f < k; ++f) {
      pending.push_back(std::async(std::launch::async, run_fold, f));
      if (pending.size() == threads) {
        for (auto& p : pending) p.get();
        pending.clear();
      }
    }
    for (auto& p : pending) p.get();
  }

  const double n = static_cast<double>(k);
  result.mean_auc = std::accumulate(result.fold_auc.begin(), result.fold_auc.end(), 0.0) / n;
  double var = 0.0;
  for (double a : result.fold_auc) var += (a - result.mean_auc) * (a - result.mean_auc);
  result.std_auc = std::sqrt(var / n);
  return result;
}

CvResult CrossValidate(const Corpus& corpus, std::size_t k, std::uint64_t seed,
                       const EmbeddingTable& table, const TrainConfig& config,
                       std::size_t threads) {
  return CrossValidate(corpus, k, seed, BuiltinTrainer(table, config), threads);
}

}  // namespace painfacets
