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

#include <cmath>

#include <doctest.h>

#include "painfacets/classifier.h"
#include "painfacets/error.h"
#include "painfacets/synthetic.h"

namespace painfacets {
namespace {

EmbeddingTable ColdRain() {
  EmbeddingTable t;
  t.Add("cold", std::vector<double>{1.0, 2.0});
  t.Add("rain", std::vector<double>{3.0, -1.0});
  return t;
}

TEST_CASE("builtin probability is the sigmoid of the dot product") {
  const auto table = ColdRain();
  const BuiltinModel model({0.5, -0.25, 0.1}, table);
  // Mean of (1,2) and (3,-1) is (2, 0.5); 0.5*2 - 0.25*0.5 + 0.1 = 0.975.
  const double want = 1.0 / (1.0 + std::exp(-0.975));
  const std::vector<std::string> s{"cold rain"};
  CHECK(model.PredictProba(s)[0] == doctest::Approx(want).epsilon(1e-12));
  CHECK(model.PredictBatch(s)[0].label == CohortLabel::kFM);
}

TEST_CASE("unknown words contribute nothing") {
  const auto table = ColdRain();
  const BuiltinModel model({0.5, -0.25, 0.1}, table);
  const std::vector<std::string> s{"cold rain zorp", "zorp"};
  const auto p = model.PredictProba(s);
  CHECK(p[0] == doctest::Approx(1.0 / (1.0 + std::exp(-0.975))));
  CHECK(p[1] == doctest::Approx(1.0 / (1.0 + std::exp(-0.1))));
}

TEST_CASE("weights must match the table") {
  const auto table = ColdRain();
  CHECK_THROWS_AS(BuiltinModel({1.0, 2.0}, table), InvalidArgument);
}

TEST_CASE("label threshold is one half") {
  CHECK(LabelFor(0.5) == CohortLabel::kFM);
  CHECK(LabelFor(0.4999) == CohortLabel::kNP);
}

TEST_CASE("training loss decreases every epoch") {
  const auto spec = DefaultSyntheticSpec();
  const Corpus corpus = GenerateSynthetic(spec, 42);
  const auto table = SyntheticEmbeddings(spec, 42);
  TrainConfig config;
  config.epochs = 100;
  TrainingTrace trace;
  TrainBuiltin(corpus.sentences(), table, config, &trace);
  REQUIRE(trace.loss.size() == config.epochs + 1);
  for (std::size_t i = 1; i < trace.loss.size(); ++i) CHECK(trace.loss[i] < trace.loss[i - 1]);
}

TEST_CASE("training is deterministic per seed") {
  const auto spec = DefaultSyntheticSpec();
  const Corpus corpus = GenerateSynthetic(spec, 42);
  const auto table = SyntheticEmbeddings(spec, 42);
  const auto a = TrainBuiltin(corpus.sentences(), table, TrainConfig{});
  const auto b = TrainBuiltin(corpus.sentences(), table, TrainConfig{});
  CHECK(a.weights() == b.weights());
}

TEST_CASE("training rejects degenerate input") {
  const auto spec = DefaultSyntheticSpec();
  const Corpus corpus = GenerateSynthetic(spec, 42);
  const auto table = SyntheticEmbeddings(spec, 42);
  std::vector<Sentence> fm;
  for (const auto& s : corpus.sentences()) {
    if (s.label == CohortLabel::kFM) fm.push_back(s);
  }
  CHECK_THROWS_AS(TrainBuiltin(fm, table, TrainConfig{}), InvalidArgument);
  CHECK_THROWS_AS(TrainBuiltin(std::vector<Sentence>{}, table, TrainConfig{}), InvalidArgument);
  CHECK_THROWS_AS(TrainBuiltin(corpus.sentences(), EmbeddingTable{}, TrainConfig{}), InvalidArgument);
}

TEST_CASE("keyword classifier groups") {
  const auto any = KeywordClassifier::AnyOf({"burning"});
  const auto both = KeywordClassifier::AllOf({"burning", "night"});
  const std::vector<std::string> s{"My feet are Burning.", "Burning at night", "night only"};
  CHECK(any.PredictProba(s) == std::vector<double>{1, 1, 0});
  CHECK(both.PredictProba(s) == std::vector<double>{0, 1, 0});
}

TEST_CASE("constant classifier") {
  const ConstantClassifier c(0.25);
  const std::vector<std::string> s{"a", "b"};
  CHECK(c.PredictProba(s) == std::vector<double>{0.25, 0.25});
}

}  // namespace
}  // namespace painfacets
