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

#ifndef PAINFACETS_SUMMARIZER_H_
#define PAINFACETS_SUMMARIZER_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "painfacets/corpus.h"
#include "painfacets/facets.h"

namespace painfacets {

struct HighlightSpan {
  std::size_t token_index = 0;  // position in Tokenize(text)
  std::string facet;

  friend bool operator==(const HighlightSpan&, const HighlightSpan&) = default;
};

struct KeptSentence {
  std::size_t index = 0;  // ordinal in the original document
  std::string text;
  std::vector<HighlightSpan> highlights;

  friend bool operator==(const KeptSentence&, const KeptSentence&) = default;
};

struct Summary {
  std::vector<KeptSentence> kept;  // strictly increasing index

  std::string Text() const;
  friend bool operator==(const Summary&, const Summary&) = default;
};

// All sentences when `selected` is empty; otherwise those containing at least
// one selected facet. Original order.
std::vector<Sentence> FilterByFacets(std::span<const Sentence> sentences,
                                     const FacetSet& selected);

// Frequency score of each sentence: the mean, over its non-stopword
// normalized tokens, of (occurrences of the token in `sentences` / total
// non-stopword tokens in `sentences`). Zero for a sentence with none.
std::vector<double> SentenceScores(std::span<const Sentence> sentences);

// Number of sentences kept from n at ratio r: ceil(r * n), at least 1 for
// n > 0. Throws InvalidArgument unless r is in (0,1].
std::size_t KeptCount(std::size_t n, double ratio);

// Keeps the KeptCount highest-scoring sentences (ties to the earlier one),
// re-emitted in original order. No highlights.
Summary RankAndCompress(std::span<const Sentence> sentences, double ratio);

// Marks every token of every kept sentence whose normalized form is in
// `facets`.
void Highlight(Summary& summary, const FacetSet& facets);

struct MissingFacet {
  std::string facet;
  std::vector<std::size_t> source_sentences;

  friend bool operator==(const MissingFacet&, const MissingFacet&) = default;
};

struct FaCovReport {
  FacetSet x;  // lexicon facets present in the original
  FacetSet y;  // lexicon or expert facets present in the summary
  FacetSet e;
  FacetSet z;  // (X u E) n Y
  double score = 0.0;  // |Z| / |X u E|, 0 when X u E is empty
  std::vector<MissingFacet> missing;  // (X u E) \ Y, facet ascending

  friend bool operator==(const FaCovReport&, const FaCovReport&) = default;
};

FaCovReport Facov(std::span<const Sentence> original, const Summary& summary,
                  const FacetSet& lexicon_words, const FacetSet& expert);
inline FaCovReport Facov(std::span<const Sentence> original, const Summary& summary,
                         const FacetLexicon& lexicon, const FacetSet& expert) {
  return Facov(original, summary, lexicon.words(), expert);
}

struct BleuReport {
  double score = 0.0;
  // Index n-1 holds order n; nullopt for orders with no candidate n-grams.
  std::vector<std::optional<double>> precisions;
  double brevity_penalty = 0.0;
  std::size_t candidate_length = 0;
  std::size_t reference_length = 0;
};

// Clipped n-gram precisions up to max_order; orders without candidate
// n-grams are left out of the geometric mean, orders without matches are
// add-one smoothed. An empty candidate scores 0.
BleuReport Bleu(std::span<const std::string> candidate, std::span<const std::string> reference,
                std::size_t max_order = 4);
BleuReport Bleu(std::string_view candidate, std::string_view reference,
                std::size_t max_order = 4);

struct SummaryRequest {
  std::string doc_id;
  FacetSet selected;
  FacetSet expert;
  double ratio = 1.0;
};

struct SummaryResult {
  Summary summary;
  FaCovReport facov;
  BleuReport bleu;
};

// Filter, compress, highlight (selected u expert), then score against the
// full original document. Throws NotFound for an unknown document and
// InvalidArgument for a ratio outside (0,1].
SummaryResult Summarize(const SummaryRequest& request, const Corpus& corpus,
                        const FacetSet& lexicon_words);

struct SweepRow {
  double ratio = 0.0;
  double mean_facov = 0.0;
  double mean_bleu = 0.0;

  friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

// 0.1, 0.2, ..., 0.9
std::vector<double> DefaultSweepRatios();

// Expands "start:end:step" (inclusive end) or a comma list. Values are
// rounded to 12 decimals to absorb accumulation error.
std::vector<double> ParseRatios(std::string_view text);

// Summarizes every listed document at every ratio and averages FaCov and
// BLEU per ratio. Throws InvalidArgument for an empty document list, an empty
// ratio list or a ratio outside (0,1].
std::vector<SweepRow> RatioSweep(const Corpus& corpus, std::span<const std::string> doc_ids,
                                 const FacetSet& lexicon_words, const FacetSet& expert,
                                 std::span<const double> ratios, const FacetSet& selected,
                                 std::size_t threads = 1);

}  // namespace painfacets

#endif  // PAINFACETS_SUMMARIZER_H_
