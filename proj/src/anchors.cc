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

#include "painfacets/anchors.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <set>
#include <thread>

#include "painfacets/error.h"

namespace painfacets {

void AnchorConfig::Validate() const {
  if (!(tau > 0.0 && tau <= 1.0)) throw InvalidArgument("tau must lie in (0,1]");
  if (!(p_replace >= 0.0 && p_replace <= 1.0)) {
    throw InvalidArgument("p_replace must lie in [0,1]");
  }
  if (!(confidence_delta > 0.0 && confidence_delta < 1.0)) {
    throw InvalidArgument("confidence_delta must lie in (0,1)");
  }
  if (n_samples == 0 || k_neighbors == 0 || beam_width == 0) {
    throw InvalidArgument("n_samples, k_neighbors and beam_width must be positive");
  }
  if (max_anchor_size && *max_anchor_size == 0) {
    throw InvalidArgument("max_anchor_size must be positive");
  }
  if (max_samples < n_samples) throw InvalidArgument("max_samples must be >= n_samples");
}

IndexSet Explanation::anchor_indices() const {
  IndexSet out;
  for (const auto& w : anchor) out.push_back(w.index);
  return out;
}

double HoeffdingLowerBound(double estimate, std::size_t samples, double delta) {
  if (samples == 0) return 0.0;
  const double width = std::sqrt(std::log(1.0 / delta) / (2.0 * static_cast<double>(samples)));
  return std::clamp(estimate - width, 0.0, 1.0);
}

std::string RenderTokens(std::span<const std::string> tokens) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0) out += ' ';
    out += tokens[i];
  }
  return out;
}

Perturber::Perturber(std::span<const std::string> tokens, const EmbeddingTable& table,
                     std::size_t k_neighbors, const PosLexicon& lexicon)
    : tokens_(TagPos(std::vector<std::string>(tokens.begin(), tokens.end()), lexicon)) {
  pools_.resize(tokens_.size());
  for (std::size_t i = 0; i < tokens_.size(); ++i) {
    const Token& t = tokens_[i];
    if (IsPunctuation(t.surface)) continue;
    eligible_.push_back(i);
    if (t.normalized.empty() || !table.Contains(t.normalized)) continue;
    for (auto& n : table.Neighbors(t.normalized, k_neighbors, t.pos, lexicon)) {
      pools_[i].push_back(std::move(n.word));
    }
  }
}

PerturbationSample Perturber::Sample(const IndexSet& fixed, double p_replace, Rng& rng) const {
  PerturbationSample sample;
  sample.tokens.reserve(tokens_.size());
  for (const auto& t : tokens_) sample.tokens.push_back(t.surface);
  for (std::size_t i = 0; i < tokens_.size(); ++i) {
    if (pools_[i].empty() || std::binary_search(fixed.begin(), fixed.end(), i)) continue;
    if (!rng.Bernoulli(p_replace)) continue;
    sample.tokens[i] = pools_[i][rng.Below(pools_[i].size())];
    sample.changed_indices.push_back(i);
  }
  return sample;
}

PerturbationSample Perturb(std::span<const std::string> tokens, const IndexSet& fixed,
                           const AnchorConfig& config, const EmbeddingTable& table, Rng& rng,
                           const PosLexicon& lexicon) {
  return Perturber(tokens, table, config.k_neighbors, lexicon)
      .Sample(fixed, config.p_replace, rng);
}

AnchorExplainer::AnchorExplainer(const Classifier& model, const EmbeddingTable& table,
                                 AnchorConfig config, const PosLexicon& lexicon)
    : model_(&model), table_(&table), config_(std::move(config)), lexicon_(&lexicon) {
  config_.Validate();
}

AnchorExplainer::Counts AnchorExplainer::Sample(const Perturber& perturber,
                                                const Sentence& sentence, CohortLabel original,
                                                const IndexSet& candidate, std::uint64_t seed,
                                                std::size_t first, std::size_t count) const {
  StreamKey base(seed);
  base.Add(sentence.key()).Add(static_cast<std::uint64_t>(candidate.size()));
  for (std::size_t i : candidate) base.Add(static_cast<std::uint64_t>(i));

  std::vector<std::string> texts;
  texts.reserve(count);
  for (std::size_t j = first; j < first + count; ++j) {
    Rng rng = StreamKey(base).Add(static_cast<std::uint64_t>(j)).MakeRng();
    texts.push_back(RenderTokens(perturber.Sample(candidate, config_.p_replace, rng).tokens));
  }
  Counts counts;
  counts.samples = count;
  for (double p : model_->PredictProba(texts)) {
    if (LabelFor(p) == original) ++counts.agreements;
  }
  return counts;
}

PrecisionEstimate AnchorExplainer::Finish(Counts counts) const {
  PrecisionEstimate e;
  e.samples = counts.samples;
  e.agreements = counts.agreements;
  e.estimate = counts.samples == 0 ? 0.0
                                   : static_cast<double>(counts.agreements) /
                                         static_cast<double>(counts.samples);
  e.lower_bound = HoeffdingLowerBound(e.estimate, e.samples, config_.confidence_delta);
  return e;
}

PrecisionEstimate AnchorExplainer::EstimatePrecision(const Sentence& sentence,
                                                     const IndexSet& candidate) const {
  return EstimatePrecision(sentence, candidate, config_.seed, 0, config_.n_samples);
}

PrecisionEstimate AnchorExplainer::EstimatePrecision(const Sentence& sentence,
                                                     const IndexSet& candidate,
                                                     std::uint64_t seed, std::size_t first_sample,
                                                     std::size_t count) const {
  Perturber perturber(sentence.tokens, *table_, config_.k_neighbors, *lexicon_);
  const CohortLabel original = model_->Predict(sentence.text).label;
  return Finish(Sample(perturber, sentence, original, candidate, seed, first_sample, count));
}

Explanation AnchorExplainer::FindAnchor(const Sentence& sentence) const {
  Perturber perturber(sentence.tokens, *table_, config_.k_neighbors, *lexicon_);
  const IndexSet& eligible = perturber.eligible();
  if (eligible.empty()) {
    throw InvalidArgument("sentence " + sentence.key() + " has no non-punctuation token");
  }

  Explanation result;
  result.sentence = sentence;
  result.predicted = model_->Predict(sentence.text);
  const CohortLabel original = result.predicted.label;
  std::size_t total_samples = 0;

  struct Scored {
    IndexSet indices;
    PrecisionEstimate precision;
  };
  auto evaluate = [&](const IndexSet& candidate) {
    Counts counts = Sample(perturber, sentence, original, candidate, config_.seed, 0,
                           config_.n_samples);
    PrecisionEstimate e = Finish(counts);
    while (e.estimate >= config_.tau && e.lower_bound < config_.tau &&
           counts.samples < config_.max_samples) {
      const std::size_t batch = std::min(config_.n_samples, config_.max_samples - counts.samples);
      Counts more = Sample(perturber, sentence, original, candidate, config_.seed,
                           counts.samples, batch);
      counts.samples += more.samples;
      counts.agreements += more.agreements;
      e = Finish(counts);
    }
    total_samples += e.samples;
    return Scored{candidate, e};
  };
  auto finish = [&](const Scored& s, bool saturated) {
    for (std::size_t i : s.indices) {
      const Token& t = perturber.tokens()[i];
      result.anchor.push_back({i, t.surface, t.pos});
    }
    result.precision_estimate = s.precision.estimate;
    result.precision_lower_bound = s.precision.lower_bound;
    result.samples_used = total_samples;
    result.saturated = saturated;
    return result;
  };
  auto qualifies = [&](const Scored& s) { return s.precision.lower_bound >= config_.tau; };
  // Highest estimate first, then smaller sets, then lexicographically
  // smallest index set.
  auto ranks_before = [](const Scored& a, const Scored& b) {
    if (a.precision.estimate != b.precision.estimate) {
      return a.precision.estimate > b.precision.estimate;
    }
    if (a.indices.size() != b.indices.size()) return a.indices.size() < b.indices.size();
    return a.indices < b.indices;
  };

  Scored empty = evaluate({});
  if (qualifies(empty)) return finish(empty, false);

  const std::size_t max_size =
      std::min(config_.max_anchor_size.value_or(eligible.size()), eligible.size());
  std::vector<IndexSet> beam = {IndexSet{}};
  std::vector<Scored> round;
  for (std::size_t size = 1; size <= max_size; ++size) {
    std::set<IndexSet> extensions;
    for (const auto& member : beam) {
      for (std::size_t i : eligible) {
        if (std::binary_search(member.begin(), member.end(), i)) continue;
        IndexSet next = member;
        next.insert(std::upper_bound(next.begin(), next.end(), i), i);
        extensions.insert(std::move(next));
      }
    }
    round.clear();
    for (const auto& candidate : extensions) round.push_back(evaluate(candidate));
    std::sort(round.begin(), round.end(), ranks_before);
    for (const auto& s : round) {
      if (qualifies(s)) return finish(s, false);
    }
    beam.clear();
    for (std::size_t b = 0; b < std::min(config_.beam_width, round.size()); ++b) {
      beam.push_back(round[b].indices);
    }
  }
  return finish(round.front(), true);
}

std::vector<Explanation> AnchorExplainer::ExplainBatch(std::span<const Sentence> sentences,
                                                       std::size_t threads) const {
  std::vector<Explanation> out(sentences.size());
  auto explain_one = [&](std::size_t i) {
    try {
      out[i] = FindAnchor(sentences[i]);
    } catch (const PredictionUnavailable& e) {
      out[i].sentence = sentences[i];
      out[i].failure = Explanation::Failure::kPredictionUnavailable;
      out[i].error = e.what();
    } catch (const Error& e) {
      out[i].sentence = sentences[i];
      out[i].failure = Explanation::Failure::kInvalidSentence;
      out[i].error = e.what();
    }
  };
  threads = std::max<std::size_t>(1, std::min(threads, sentences.size()));
  if (threads == 1) {
    for (std::size_t i = 0; i < sentences.size(); ++i) explain_one(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> workers;
  for (std::size_t t = 0; t < threads; ++t) {
    workers.emplace_back([&] {
      for (std::size_t i = next++; i < sentences.size(); i = next++) explain_one(i);
    });
  }
  for (auto& w : workers) w.join();
  return out;
}

}  // namespace painfacets
