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

#include <algorithm>
#include <cmath>
#include <map>

#include <doctest.h>

#include "oracles.h"
#include "painfacets/error.h"
#include "painfacets/rng.h"
#include "painfacets/summarizer.h"
#include "painfacets/synthetic.h"

namespace painfacets {
namespace {

Corpus OneDoc(const std::string& text) { return Corpus({{"D1", CohortLabel::kFM, text}}); }

TEST_CASE("filter keeps sentences containing a selected facet") {
  const Corpus c = OneDoc(
      "It is burning. My feet hurt. Legs ache. Burning again. Cold hands. Night time. "
      "Sleep is hard. More burning here. Nothing else. The end.");
  const auto all = c.sentences_of("D1");
  REQUIRE(all.size() == 10);
  const auto kept = FilterByFacets(all, {"burning"});
  std::vector<std::size_t> idx;
  for (const auto& s : kept) idx.push_back(s.index);
  CHECK(idx == std::vector<std::size_t>{0, 3, 7});
  CHECK(FilterByFacets(all, {}).size() == 10);
}

TEST_CASE("scores follow the frequency formula") {
  const Corpus c = OneDoc("Pain pain sleep. Pain burns. Sleep aches. The of.");
  const auto s = c.sentences_of("D1");
  // Non-stopword tokens: pain x3, sleep x2, burns, aches => 7.
  const auto scores = SentenceScores(s);
  REQUIRE(scores.size() == 4);
  CHECK(scores[0] == doctest::Approx((3.0 + 3.0 + 2.0) / 7.0 / 3.0));
  CHECK(scores[1] == doctest::Approx((3.0 + 1.0) / 7.0 / 2.0));
  CHECK(scores[2] == doctest::Approx((2.0 + 1.0) / 7.0 / 2.0));
  CHECK(scores[3] == 0.0);
  const auto summary = RankAndCompress(s, 0.5);
  REQUIRE(summary.kept.size() == 2);
  CHECK(summary.kept[0].index == 0);
  CHECK(summary.kept[1].index == 1);
}

TEST_CASE("kept count") {
  CHECK(KeptCount(10, 0.3) == 3);
  CHECK(KeptCount(10, 0.25) == 3);
  CHECK(KeptCount(3, 0.1) == 1);
  CHECK(KeptCount(7, 1.0) == 7);
  CHECK(KeptCount(0, 0.5) == 0);
  CHECK_THROWS_AS(KeptCount(10, 0.0), InvalidArgument);
  CHECK_THROWS_AS(KeptCount(10, 1.01), InvalidArgument);
}

TEST_CASE("highlight marks facet tokens") {
  const Corpus c = OneDoc("Burning at night, burning.");
  Summary s = RankAndCompress(c.sentences_of("D1"), 1.0);
  Highlight(s, {"burning", "night"});
  const std::vector<HighlightSpan> want{{0, "burning"}, {2, "night"}, {4, "burning"}};
  CHECK(s.kept[0].highlights == want);
}

TEST_CASE("facov hand case") {
  const Corpus c = OneDoc("The pain is bad. I cannot sleep. It will burn. Poor appetite now.");
  const auto original = c.sentences_of("D1");
  Summary summary;
  summary.kept.push_back({0, original[0].text, {}});
  summary.kept.push_back({3, original[3].text, {}});
  const auto r = Facov(original, summary, FacetSet{"pain", "sleep", "burn"}, {"appetite"});
  CHECK(r.x == FacetSet{"burn", "pain", "sleep"});
  CHECK(r.z == FacetSet{"appetite", "pain"});
  CHECK(r.score == 0.5);
  REQUIRE(r.missing.size() == 2);
  CHECK(r.missing[0] == MissingFacet{"burn", {2}});
  CHECK(r.missing[1] == MissingFacet{"sleep", {1}});
}

TEST_CASE("facov edge cases") {
  const Corpus c = OneDoc("Pain here. Sleep there.");
  const auto original = c.sentences_of("D1");
  const Summary identity = RankAndCompress(original, 1.0);
  CHECK(Facov(original, identity, FacetSet{"pain", "sleep"}, {}).score == 1.0);
  CHECK(Facov(original, Summary{}, FacetSet{"pain"}, {}).score == 0.0);
  CHECK(Facov(original, identity, FacetSet{}, {}).score == 0.0);
  // An expert facet absent from the document cannot be covered.
  CHECK(Facov(original, identity, FacetSet{"pain"}, {"appetite"}).score == 0.5);
}

TEST_CASE("facov matches the set oracle on synthetic documents") {
  const auto spec = DefaultSyntheticSpec();
  const Corpus c = GenerateSynthetic(spec, 8);
  const FacetSet lexicon(spec.fm_keywords.begin(), spec.fm_keywords.end());
  const FacetSet expert = DefaultExpertFacets();
  for (const auto& doc : c.documents()) {
    const auto original = c.sentences_of(doc.id);
    const Summary summary = RankAndCompress(original, 0.3);
    const auto got = Facov(original, summary, lexicon, expert);
    std::vector<std::pair<std::size_t, std::string>> orig;
    for (const auto& s : original) orig.emplace_back(s.index, s.text);
    std::vector<std::string> kept;
    for (const auto& k : summary.kept) kept.push_back(k.text);
    const auto want = oracle::Facov(orig, kept, lexicon, expert);
    CHECK(got.score == doctest::Approx(want.score).epsilon(1e-12));
    CHECK(std::set<std::string>(got.z.begin(), got.z.end()) == want.z);
    std::map<std::string, std::vector<std::size_t>> missing;
    for (const auto& m : got.missing) missing[m.facet] = m.source_sentences;
    CHECK(missing == want.missing);
  }
}

TEST_CASE("bleu hand cases") {
  const auto r = Bleu("the cat sat", "the cat sat on the mat");
  REQUIRE(r.precisions.size() == 4);
  CHECK(r.precisions[0] == 1.0);
  CHECK(r.precisions[1] == 1.0);
  CHECK(r.precisions[2] == 1.0);
  CHECK_FALSE(r.precisions[3].has_value());
  CHECK(r.brevity_penalty == doctest::Approx(std::exp(-1.0)));
  CHECK(std::abs(r.score - 0.3679) <= 1e-4);
  CHECK(Bleu("It burns at night.", "It burns at night.").score == 1.0);
  CHECK(Bleu("", "anything here").score == 0.0);
}

TEST_CASE("bleu smooths zero-match orders") {
  const auto r = Bleu("a b c d", "a c b d");
  // Bigrams: none of ab, bc, cd occur in the reference.
  CHECK(*r.precisions[1] == doctest::Approx(1.0 / 4.0));
  CHECK(r.score == doctest::Approx(oracle::Bleu({"a", "b", "c", "d"}, {"a", "c", "b", "d"})));
}

TEST_CASE("bleu matches the brute-force counter") {
  Rng rng(5);
  const std::vector<std::string> vocab{"a", "b", "c", "d"};
  for (int t = 0; t < 50; ++t) {
    std::vector<std::string> cand(1 + rng.Below(7)), ref(1 + rng.Below(9));
    for (auto& w : cand) w = vocab[rng.Below(vocab.size())];
    for (auto& w : ref) w = vocab[rng.Below(vocab.size())];
    CHECK(Bleu(cand, ref).score == doctest::Approx(oracle::Bleu(cand, ref)).epsilon(1e-9));
  }
}

TEST_CASE("summarize identity scores full coverage") {
  const auto spec = DefaultSyntheticSpec();
  const Corpus c = GenerateSynthetic(spec, 8);
  const FacetSet lexicon(spec.fm_keywords.begin(), spec.fm_keywords.end());
  SummaryRequest req{"FM-000", {}, {}, 1.0};
  const auto r = Summarize(req, c, lexicon);
  CHECK(r.facov.score == 1.0);
  CHECK(r.summary.kept.size() == c.sentences_of("FM-000").size());
  CHECK(r.bleu.score == doctest::Approx(1.0));
  req.ratio = 0.0;
  CHECK_THROWS_AS(Summarize(req, c, lexicon), InvalidArgument);
  req.ratio = 0.5;
  req.doc_id = "nope";
  CHECK_THROWS_AS(Summarize(req, c, lexicon), NotFound);
}

TEST_CASE("ratio parsing") {
  const auto r = ParseRatios("0.1:0.9:0.1");
  REQUIRE(r.size() == 9);
  CHECK(r == DefaultSweepRatios());
  CHECK(r[2] == 0.3);
  CHECK(ParseRatios("0.5,1") == std::vector<double>{0.5, 1.0});
  CHECK_THROWS_AS(ParseRatios("0.1:0.9"), InvalidArgument);
  CHECK_THROWS_AS(ParseRatios("x"), InvalidArgument);
}

TEST_CASE("sweep means equal per-document averages") {
  const auto spec = DefaultSyntheticSpec();
  const Corpus c = GenerateSynthetic(spec, 8);
  const FacetSet lexicon(spec.fm_keywords.begin(), spec.fm_keywords.end());
  std::vector<std::string> docs;
  for (const auto& d : c.documents()) {
    if (d.label == CohortLabel::kFM) docs.push_back(d.id);
  }
  const std::vector<double> ratios{0.1, 0.9};
  const auto rows = RatioSweep(c, docs, lexicon, DefaultExpertFacets(), ratios, {}, 1);
  CHECK(rows == RatioSweep(c, docs, lexicon, DefaultExpertFacets(), ratios, {}, 4));
  for (std::size_t i = 0; i < ratios.size(); ++i) {
    double facov = 0, bleu = 0;
    for (const auto& d : docs) {
      const auto r = Summarize({d, {}, DefaultExpertFacets(), ratios[i]}, c, lexicon);
      facov += r.facov.score;
      bleu += r.bleu.score;
    }
    CHECK(rows[i].mean_facov == doctest::Approx(facov / docs.size()).epsilon(1e-12));
    CHECK(rows[i].mean_bleu == doctest::Approx(bleu / docs.size()).epsilon(1e-12));
  }
  CHECK(rows[1].mean_bleu > rows[0].mean_bleu);
  CHECK_THROWS_AS(RatioSweep(c, {}, lexicon, {}, ratios, {}), InvalidArgument);
}

}  // namespace
}  // namespace painfacets
