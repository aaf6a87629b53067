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

// Acceptance checks. One PASS/FAIL line per criterion; exit status is the
// number of failures.
#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "fixtures.h"
#include "oracles.h"
#include "painfacets/anchors.h"
#include "painfacets/classifier.h"
#include "painfacets/corpus.h"
#include "painfacets/facets.h"
#include "painfacets/json_io.h"
#include "painfacets/metrics.h"
#include "painfacets/rng.h"
#include "painfacets/summarizer.h"
#include "painfacets/synthetic.h"

namespace painfacets {
namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string detail;
};

int failures = 0;

void Report(const std::string& name, double limit_seconds, const std::function<Outcome()>& check) {
  const auto start = Clock::now();
  Outcome o;
  try {
    o = check();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  char timing[64];
  std::snprintf(timing, sizeof(timing), "%.2fs", secs);
  if (limit_seconds > 0 && secs >= limit_seconds) {
    o.ok = false;
    o.detail += "; over the " + std::to_string(static_cast<int>(limit_seconds)) + "s limit";
  }
  std::printf("%s %s: %s (%s)\n", o.ok ? "PASS" : "FAIL", name.c_str(), o.detail.c_str(), timing);
  std::fflush(stdout);
  if (!o.ok) ++failures;
}

std::string Fmt(const char* format, double a, double b = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), format, a, b);
  return buf;
}

// The frozen acceptance corpus: 20 documents per cohort, seed 42.
const Corpus& AcceptanceCorpus() {
  static const Corpus c = GenerateSynthetic(DefaultSyntheticSpec(), 42);
  return c;
}
const EmbeddingTable& AcceptanceTable() {
  static const EmbeddingTable t = SyntheticEmbeddings(DefaultSyntheticSpec(), 42);
  return t;
}

std::size_t Threads() { return std::max(1u, std::thread::hardware_concurrency()); }

Outcome AucOracle() {
  Rng rng(2024);
  double worst = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + rng.Below(49);
    std::vector<double> s(n);
    std::vector<CohortLabel> l(n);
    // A coarse grid on half the trials forces ties.
    const bool coarse = trial % 2 == 0;
    for (std::size_t i = 0; i < n; ++i) {
      s[i] = coarse ? static_cast<double>(rng.Below(5)) / 4.0 : rng.Uniform();
      l[i] = rng.Bernoulli(0.5) ? CohortLabel::kFM : CohortLabel::kNP;
    }
    l[rng.Below(n)] = CohortLabel::kFM;
    std::size_t j;
    do {
      j = rng.Below(n);
    } while (l[j] == CohortLabel::kFM && std::count(l.begin(), l.end(), CohortLabel::kFM) == 1);
    l[j] = CohortLabel::kNP;
    if (std::count(l.begin(), l.end(), CohortLabel::kFM) == 0) l[(j + 1) % n] = CohortLabel::kFM;
    worst = std::max(worst, std::abs(Auc(s, l) - oracle::Auc(s, l)));
  }
  return {worst <= 1e-9, Fmt("200 instances, max |auc - oracle| = %.3g", worst)};
}

Outcome AnchorExactness() {
  const auto table = fixture::ToyTable();
  const auto single = KeywordClassifier::AnyOf({"burning"});
  const auto both = KeywordClassifier::AllOf({"burning", "night"});
  AnchorConfig config;
  config.k_neighbors = 2;
  const AnchorExplainer single_explainer(single, table, config, fixture::ToyLexicon());
  const AnchorExplainer both_explainer(both, table, config, fixture::ToyLexicon());
  Rng rng(77);
  int exact = 0;
  std::string first_miss;
  for (int i = 0; i < 100; ++i) {
    const bool two = i % 2 == 1;
    const std::size_t len = (two ? 2 : 1) + rng.Below(two ? 7 : 8);
    std::vector<std::string> words(len);
    for (auto& w : words) w = fixture::Fillers()[rng.Below(fixture::Fillers().size())];
    IndexSet keys;
    const std::size_t a = rng.Below(len);
    words[a] = "burning";
    keys.push_back(a);
    if (two) {
      std::size_t b;
      do {
        b = rng.Below(len);
      } while (b == a);
      words[b] = "night";
      keys.push_back(b);
      std::sort(keys.begin(), keys.end());
    }
    std::string text;
    for (const auto& w : words) text += (text.empty() ? "" : " ") + w;
    const auto sentence = fixture::MakeSentence(text, static_cast<std::size_t>(i));
    const auto e = (two ? both_explainer : single_explainer).FindAnchor(sentence);

    std::vector<std::vector<std::string>> groups;
    if (two) groups = {{"burning", "night"}};
    else groups = {{"burning"}};
    const auto minimal = oracle::MinimalAnchors(words, groups, config.p_replace, config.tau);
    const bool ok = e.anchor_indices() == keys && minimal.size() == 1 && minimal[0] == keys;
    if (ok) ++exact;
    else if (first_miss.empty()) first_miss = "; first miss: \"" + text + "\"";
  }
  return {exact == 100, std::to_string(exact) + "/100 anchors equal the keyword set and the "
                                                "unique brute-force minimal subset" + first_miss};
}

Outcome AnchorSufficiency() {
  const Corpus& corpus = AcceptanceCorpus();
  const auto split = MakeSplits(corpus, SplitSpec{});
  const auto model = TrainBuiltin(corpus, split.train, AcceptanceTable(), TrainConfig{});
  AnchorConfig config;
  config.tau = 0.95;
  config.n_samples = 100;
  const AnchorExplainer explainer(model, AcceptanceTable(), config);
  const auto explanations = explainer.ExplainBatch(corpus.sentences(), Threads());
  std::size_t checked = 0;
  double worst = 1.0;
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < explanations.size(); ++i) {
    if (explanations[i].ok() && !explanations[i].saturated) idx.push_back(i);
  }
  std::vector<double> fresh(idx.size());
  std::vector<std::thread> pool;
  std::atomic<std::size_t> next{0};
  for (std::size_t t = 0; t < Threads(); ++t) {
    pool.emplace_back([&] {
      for (std::size_t k = next++; k < idx.size(); k = next++) {
        const auto& e = explanations[idx[k]];
        // Different seed and sample range from the search itself.
        fresh[k] = explainer.EstimatePrecision(e.sentence, e.anchor_indices(),
                                               config.seed ^ 0x5EEDF00DULL, 1000000, 1000)
                       .estimate;
      }
    });
  }
  for (auto& t : pool) t.join();
  for (double p : fresh) {
    worst = std::min(worst, p);
    ++checked;
  }
  return {checked > 0 && worst >= 0.90,
          std::to_string(checked) + " non-saturated of " + std::to_string(explanations.size()) +
              Fmt(" explanations, min re-estimated precision %.3f (need >= 0.90)", worst)};
}

Outcome AnalyticPrecision() {
  const auto table = fixture::ToyTable();
  const auto model = KeywordClassifier::AnyOf({"burning"});
  AnchorConfig config;
  config.k_neighbors = 2;
  config.p_replace = 0.5;
  const AnchorExplainer explainer(model, table, config, fixture::ToyLexicon());
  const auto s = fixture::MakeSentence("my feet are burning badly");
  const auto est = explainer.EstimatePrecision(s, IndexSet{0, 1, 2, 4}, 42, 0, 10000);
  return {std::abs(est.estimate - 0.5) <= 0.02 && est.samples == 10000,
          Fmt("estimate %.4f over 10000 samples (need 0.5 +/- 0.02)", est.estimate)};
}

Outcome FacovChecks() {
  Rng rng(31);
  const std::vector<std::string> vocab{"pain",  "sleep", "burn",   "nerve",  "tired", "stress",
                                       "night", "legs",  "massage", "bowel", "even",  "fog"};
  auto random_doc = [&](std::size_t sentences) {
    std::string text;
    for (std::size_t i = 0; i < sentences; ++i) {
      const std::size_t len = 1 + rng.Below(5);
      std::string s;
      for (std::size_t k = 0; k < len; ++k) {
        std::string w = vocab[rng.Below(vocab.size())];
        if (k == 0) w[0] = static_cast<char>(std::toupper(w[0]));
        s += (k ? " " : "") + w;
      }
      text += (i ? " " : "") + s + ".";
    }
    return Corpus({{"D", CohortLabel::kFM, text}});
  };
  auto random_subset = [&](double p) {
    FacetSet out;
    for (const auto& w : vocab) {
      if (rng.Bernoulli(p)) out.insert(w);
    }
    return out;
  };
  auto summary_of = [](std::span<const Sentence> sentences, const std::vector<bool>& keep) {
    Summary s;
    for (std::size_t i = 0; i < sentences.size(); ++i) {
      if (keep[i]) s.kept.push_back({sentences[i].index, sentences[i].text, {}});
    }
    return s;
  };
  auto oracle_of = [](std::span<const Sentence> sentences, const Summary& s, const FacetSet& lex,
                      const FacetSet& expert) {
    std::vector<std::pair<std::size_t, std::string>> orig;
    for (const auto& x : sentences) orig.emplace_back(x.index, x.text);
    std::vector<std::string> kept;
    for (const auto& k : s.kept) kept.push_back(k.text);
    return oracle::Facov(orig, kept, std::set<std::string>(lex.begin(), lex.end()),
                         std::set<std::string>(expert.begin(), expert.end()));
  };

  int agree = 0;
  for (int t = 0; t < 100; ++t) {
    const Corpus c = random_doc(2 + rng.Below(8));
    const auto sentences = c.sentences_of("D");
    std::vector<bool> keep(sentences.size());
    for (std::size_t i = 0; i < keep.size(); ++i) keep[i] = rng.Bernoulli(0.5);
    const Summary s = summary_of(sentences, keep);
    const FacetSet lex = random_subset(0.4);
    const FacetSet expert = random_subset(0.15);
    const auto got = Facov(sentences, s, lex, expert);
    const auto want = oracle_of(sentences, s, lex, expert);
    std::map<std::string, std::vector<std::size_t>> missing;
    for (const auto& m : got.missing) missing[m.facet] = m.source_sentences;
    const bool same = std::abs(got.score - want.score) <= 1e-12 &&
                      std::set<std::string>(got.x.begin(), got.x.end()) == want.x &&
                      std::set<std::string>(got.z.begin(), got.z.end()) == want.z &&
                      missing == want.missing;
    agree += same;
  }

  bool identity_ok = true;
  bool empty_ok = true;
  for (int t = 0; t < 20; ++t) {
    const Corpus c = random_doc(1 + rng.Below(6));
    const auto sentences = c.sentences_of("D");
    const FacetSet lex(vocab.begin(), vocab.end());
    const auto identity = Facov(sentences, summary_of(sentences, std::vector<bool>(sentences.size(), true)), lex, {});
    identity_ok = identity_ok && identity.score == 1.0;
    const auto empty = Facov(sentences, Summary{}, lex, {});
    empty_ok = empty_ok && !empty.x.empty() && empty.score == 0.0;
  }

  int monotone = 0;
  for (int t = 0; t < 50; ++t) {
    const Corpus c = random_doc(2 + rng.Below(8));
    const auto sentences = c.sentences_of("D");
    std::vector<bool> small(sentences.size()), large(sentences.size());
    for (std::size_t i = 0; i < sentences.size(); ++i) {
      small[i] = rng.Bernoulli(0.3);
      large[i] = small[i] || rng.Bernoulli(0.5);
    }
    const FacetSet lex = random_subset(0.5);
    const FacetSet expert = random_subset(0.2);
    monotone += Facov(sentences, summary_of(sentences, small), lex, expert).score <=
                Facov(sentences, summary_of(sentences, large), lex, expert).score;
  }
  const bool ok = agree == 100 && identity_ok && empty_ok && monotone == 50;
  return {ok, std::to_string(agree) + "/100 oracle matches, identity=1.0 " +
                  (identity_ok ? "yes" : "no") + ", empty=0.0 " + (empty_ok ? "yes" : "no") +
                  ", " + std::to_string(monotone) + "/50 nested pairs monotone"};
}

Outcome BleuChecks() {
  const double same = Bleu("My feet are burning at night.", "My feet are burning at night.").score;
  const double cat = Bleu("the cat sat", "the cat sat on the mat").score;
  Rng rng(8);
  const std::vector<std::string> vocab{"the", "cat", "sat", "on", "mat", "."};
  double worst = 0.0;
  for (int t = 0; t < 20; ++t) {
    std::vector<std::string> cand(1 + rng.Below(8)), ref(1 + rng.Below(10));
    for (auto& w : cand) w = vocab[rng.Below(vocab.size())];
    for (auto& w : ref) w = vocab[rng.Below(vocab.size())];
    worst = std::max(worst, std::abs(Bleu(cand, ref).score - oracle::Bleu(cand, ref)));
  }
  const bool ok = same == 1.0 && std::abs(cat - 0.3679) <= 1e-4 && worst <= 1e-9;
  return {ok, Fmt("identical = %.17g, cat case = %.6f", same, cat) +
                  Fmt(", 20 random cases max |diff| = %.3g", worst)};
}

// Planted-keyword run: the FM keyword oracle with each keyword's single
// nearest neighbor being its paired keyword of the other cohort.
std::vector<Explanation> PlantedRun() {
  const auto spec = DefaultSyntheticSpec();
  const auto model = KeywordClassifier::AnyOf(spec.fm_keywords);
  AnchorConfig config;
  config.k_neighbors = 1;
  return AnchorExplainer(model, AcceptanceTable(), config)
      .ExplainBatch(AcceptanceCorpus().sentences(), Threads());
}

Outcome FacetLexiconCheck() {
  const auto spec = DefaultSyntheticSpec();
  const auto explanations = PlantedRun();
  const FacetSet fm = CollectFacets(explanations, CohortLabel::kFM).words();
  const FacetSet np = CollectFacets(explanations, CohortLabel::kNP).words();
  const FacetSet want_fm(spec.fm_keywords.begin(), spec.fm_keywords.end());
  const FacetSet want_np(spec.np_keywords.begin(), spec.np_keywords.end());
  auto show = [](const FacetSet& s) {
    std::string out;
    for (const auto& w : s) out += (out.empty() ? "" : ",") + w;
    return "{" + out + "}";
  };
  return {fm == want_fm && np == want_np, "FM " + show(fm) + ", NP " + show(np)};
}

Outcome RelativeGrowth() {
  const Corpus& corpus = AcceptanceCorpus();
  const FacetSet lexicon = CollectFacets(PlantedRun(), CohortLabel::kFM).words();
  std::vector<std::string> docs;
  for (const auto& d : corpus.documents()) {
    if (d.label == CohortLabel::kFM) docs.push_back(d.id);
  }
  const auto rows = RatioSweep(corpus, docs, lexicon, DefaultExpertFacets(), DefaultSweepRatios(),
                               {}, Threads());
  bool increasing = true;
  for (std::size_t i = 1; i < rows.size(); ++i) increasing = increasing && rows[i].mean_bleu > rows[i - 1].mean_bleu;
  const double facov_growth = rows.back().mean_facov - rows.front().mean_facov;
  const double bleu_growth = rows.back().mean_bleu - rows.front().mean_bleu;
  return {rows.size() == 9 && increasing && facov_growth < bleu_growth,
          std::string("BLEU strictly increasing ") + (increasing ? "yes" : "no") +
              Fmt(", FaCov growth %.4f vs BLEU growth %.4f", facov_growth, bleu_growth)};
}

std::string PipelineBytes() {
  const auto spec = DefaultSyntheticSpec();
  const Corpus corpus = GenerateSynthetic(spec, 42);
  const auto table = SyntheticEmbeddings(spec, 42);
  const auto split = MakeSplits(corpus, SplitSpec{});
  const auto model = TrainBuiltin(corpus, split.train, table, TrainConfig{});
  const auto cv = CrossValidate(corpus, 4, 42, table, TrainConfig{}, Threads());
  std::ostringstream out;
  WriteCorpus(corpus, out);
  table.Write(out);
  out << Json(model.weights()).dump() << "\n" << CvResultToJson(cv).dump() << "\n";
  return out.str();
}

Outcome EndToEnd() {
  const auto spec = DefaultSyntheticSpec();
  const Corpus corpus = GenerateSynthetic(spec, 42);
  const auto cv =
      CrossValidate(corpus, 4, 42, SyntheticEmbeddings(spec, 42), TrainConfig{}, Threads());
  const bool identical = PipelineBytes() == PipelineBytes();
  return {cv.mean_auc >= 0.95 && identical,
          Fmt("4-fold mean AUC %.4f +/- %.4f (need >= 0.95)", cv.mean_auc, cv.std_auc) +
              ", two runs byte-identical " + (identical ? "yes" : "no")};
}

Outcome SplitFold() {
  const auto s = MakeSplits(100, SplitSpec{});
  const auto f = MakeFolds(10, 4, 42);
  std::vector<std::size_t> folds;
  for (std::size_t i = 0; i < 4; ++i) folds.push_back(f.Members(i).size());
  const bool ok = s.train.size() == 75 && s.validation.size() == 15 && s.test.size() == 10 &&
                  folds == std::vector<std::size_t>{3, 3, 2, 2};
  return {ok, std::to_string(s.train.size()) + "/" + std::to_string(s.validation.size()) + "/" +
                  std::to_string(s.test.size()) + ", folds {" + std::to_string(folds[0]) + "," +
                  std::to_string(folds[1]) + "," + std::to_string(folds[2]) + "," +
                  std::to_string(folds[3]) + "}"};
}

}  // namespace
}  // namespace painfacets

int main() {
  using namespace painfacets;
  Report("auc_oracle_equivalence", 5, AucOracle);
  Report("anchor_exactness_keyword_oracles", 120, AnchorExactness);
  Report("anchor_sufficiency", 300, AnchorSufficiency);
  Report("analytic_precision", 0, AnalyticPrecision);
  Report("facov_correctness", 0, FacovChecks);
  Report("bleu_hand_cases", 0, BleuChecks);
  Report("facov_bleu_relative_growth", 120, RelativeGrowth);
  Report("end_to_end_pipeline", 120, EndToEnd);
  Report("facet_lexicon_planted", 0, FacetLexiconCheck);
  Report("split_fold_arithmetic", 0, SplitFold);
  std::printf("%d failed\n", failures);
  return failures == 0 ? 0 : 1;
}
