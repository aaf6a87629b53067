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

#ifndef PAINFACETS_JSON_IO_H_
#define PAINFACETS_JSON_IO_H_

// JSON encodings of the library's result types. Keys are emitted in a fixed
// order so equal values serialize to identical bytes.

#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "painfacets/anchors.h"
#include "painfacets/classifier.h"
#include "painfacets/corpus.h"
#include "painfacets/facets.h"
#include "painfacets/metrics.h"
#include "painfacets/summarizer.h"

namespace painfacets {

using Json = nlohmann::ordered_json;

// {"doc_id", "sentence_index", "predicted_label", "anchor": [{"index",
// "surface", "pos"}], "precision_estimate", "precision_lower_bound",
// "saturated"}; failed explanations carry an extra "error" field.
Json ExplanationToJson(const Explanation& e);
// The sentence is looked up in `corpus`. Throws NotFound / InvalidArgument.
Explanation ExplanationFromJson(const Json& j, const Corpus& corpus);
void WriteExplanations(std::span<const Explanation> explanations, std::ostream& out);
// Throws ParseError with the line number.
std::vector<Explanation> ReadExplanations(std::istream& in, const Corpus& corpus);

// {"cohort", "facets": [{"word", "count", "pos"}]}
Json FacetLexiconToJson(const FacetLexicon& lexicon);
FacetLexicon FacetLexiconFromJson(const Json& j);

// Word-cloud feed: [{"pos", "rank", "word", "count"}, ...] grouped NOUN, VERB,
// ADJ.
Json FacetReportToJson(const FacetReport& report);

Json MetricsToJson(const Metrics& m);
Json CvResultToJson(const CvResult& cv);

Json FacetSetToJson(const FacetSet& s);
FacetSet FacetSetFromJson(const Json& j);

Json BleuToJson(const BleuReport& b);
Json FacovToJson(const FaCovReport& r);
// {"doc_id", "ratio", "selected_facets", "kept": [...], "facov": {...},
// "bleu": {...}}
Json SummaryToJson(const SummaryRequest& request, const SummaryResult& result);

// [{"ratio", "mean_facov", "mean_bleu"}, ...]
Json SweepToJson(std::span<const SweepRow> rows);

}  // namespace painfacets

#endif  // PAINFACETS_JSON_IO_H_
