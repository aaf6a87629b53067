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

#include "painfacets/json_io.h"

#include "painfacets/error.h"

namespace painfacets {

Json ExplanationToJson(const Explanation& e) {
  Json j;
  j["doc_id"] = e.sentence.doc_id;
  j["sentence_index"] = e.sentence.index;
  j["predicted_label"] = CohortName(e.predicted.label);
  j["anchor"] = Json::array();
  for (const auto& w : e.anchor) {
    Json a;
    a["index"] = w.index;
    a["surface"] = w.surface;
    a["pos"] = PosName(w.pos);
    j["anchor"].push_back(std::move(a));
  }
  j["precision_estimate"] = e.precision_estimate;
  j["precision_lower_bound"] = e.precision_lower_bound;
  j["saturated"] = e.saturated;
  if (!e.ok()) {
    j["predicted_label"] = nullptr;
    j["error"] = e.error;
  }
  return j;
}

Explanation ExplanationFromJson(const Json& j, const Corpus& corpus) {
  Explanation e;
  const auto doc_id = j.at("doc_id").get<std::string>();
  const auto index = j.at("sentence_index").get<std::size_t>();
  const auto sentences = corpus.sentences_of(doc_id);
  if (index >= sentences.size()) {
    throw NotFound("sentence " + doc_id + "#" + std::to_string(index) + " not in corpus");
  }
  e.sentence = sentences[index];
  if (j.contains("error")) {
    e.error = j.at("error").get<std::string>();
    e.failure = Explanation::Failure::kInvalidSentence;
  } else {
    auto label = ParseCohort(j.at("predicted_label").get<std::string>());
    if (!label) throw InvalidArgument("bad predicted_label");
    e.predicted.label = *label;
    e.predicted.prob_positive = *label == CohortLabel::kFM ? 1.0 : 0.0;
  }
  for (const auto& a : j.at("anchor")) {
    auto pos = ParsePos(a.at("pos").get<std::string>());
    if (!pos) throw InvalidArgument("bad anchor pos");
    e.anchor.push_back({a.at("index").get<std::size_t>(), a.at("surface").get<std::string>(), *pos});
  }
  e.precision_estimate = j.at("precision_estimate").get<double>();
  e.precision_lower_bound = j.at("precision_lower_bound").get<double>();
  e.saturated = j.at("saturated").get<bool>();
  return e;
}

void WriteExplanations(std::span<const Explanation> explanations, std::ostream& out) {
  for (const auto& e : explanations) out << ExplanationToJson(e).dump() << '\n';
}

std::vector<Explanation> ReadExplanations(std::istream& in, const Corpus& corpus) {
  std::vector<Explanation> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(ExplanationFromJson(Json::parse(line), corpus));
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(e.what(), line_no);
    } catch (const Error& e) {
      throw ParseError(e.what(), line_no);
    }
  }
  return out;
}

Json FacetLexiconToJson(const FacetLexicon& lexicon) {
  Json j;
  j["cohort"] = CohortName(lexicon.cohort);
  j["facets"] = Json::array();
  for (const auto& [word, entry] : lexicon.entries) {
    Json f;
    f["word"] = word;
    f["count"] = entry.count;
    f["pos"] = PosName(entry.pos);
    j["facets"].push_back(std::move(f));
  }
  return j;
}

FacetLexicon FacetLexiconFromJson(const Json& j) {
  FacetLexicon lexicon;
  auto cohort = ParseCohort(j.at("cohort").get<std::string>());
  if (!cohort) throw InvalidArgument("facet lexicon has an unknown cohort");
  lexicon.cohort = *cohort;
  for (const auto& f : j.at("facets")) {
    auto pos = ParsePos(f.at("pos").get<std::string>());
    if (!pos) throw InvalidArgument("facet lexicon has an unknown pos");
    const auto count = f.at("count").get<std::size_t>();
    if (count == 0) throw InvalidArgument("facet count must be positive");
    lexicon.entries[Normalize(f.at("word").get<std::string>())] = {count, *pos};
  }
  return lexicon;
}

Json FacetReportToJson(const FacetReport& report) {
  Json out = Json::array();
  auto emit = [&out](std::string_view pos, const std::vector<RankedFacet>& list) {
    for (std::size_t i = 0; i < list.size(); ++i) {
      Json f;
      f["pos"] = pos;
      f["rank"] = i + 1;
      f["word"] = list[i].word;
      f["count"] = list[i].count;
      out.push_back(std::move(f));
    }
  };
  emit("NOUN", report.nouns);
  emit("VERB", report.verbs);
  emit("ADJ", report.adjectives);
  return out;
}

Json MetricsToJson(const Metrics& m) {
  Json j;
  j["auc"] = m.auc;
  j["accuracy"] = m.accuracy;
  j["support"] = m.support;
  j["FM"] = {{"precision", m.fm.precision}, {"recall", m.fm.recall}};
  j["NP"] = {{"precision", m.np.precision}, {"recall", m.np.recall}};
  j["roc"] = Json::array();
  for (const auto& p : m.roc) j["roc"].push_back(Json::array({p.fpr, p.tpr}));
  return j;
}

Json CvResultToJson(const CvResult& cv) {
  Json j;
  j["k"] = cv.k;
  j["fold_auc"] = cv.fold_auc;
  j["mean_auc"] = cv.mean_auc;
  j["std_auc"] = cv.std_auc;
  return j;
}

Json FacetSetToJson(const FacetSet& s) {
  Json j = Json::array();
  for (const auto& w : s) j.push_back(w);
  return j;
}

FacetSet FacetSetFromJson(const Json& j) {
  std::vector<std::string> words;
  for (const auto& w : j) words.push_back(w.get<std::string>());
  return LoadExpertFacets(words);
}

Json BleuToJson(const BleuReport& b) {
  Json j;
  j["score"] = b.score;
  j["precisions"] = Json::array();
  for (const auto& p : b.precisions) {
    if (p) {
      j["precisions"].push_back(*p);
    } else {
      j["precisions"].push_back(nullptr);
    }
  }
  j["brevity_penalty"] = b.brevity_penalty;
  return j;
}

Json FacovToJson(const FaCovReport& r) {
  Json j;
  j["score"] = r.score;
  j["X"] = FacetSetToJson(r.x);
  j["Y"] = FacetSetToJson(r.y);
  j["E"] = FacetSetToJson(r.e);
  j["Z"] = FacetSetToJson(r.z);
  j["missing"] = Json::array();
  for (const auto& m : r.missing) {
    Json item;
    item["facet"] = m.facet;
    item["source_sentences"] = m.source_sentences;
    j["missing"].push_back(std::move(item));
  }
  return j;
}

Json SummaryToJson(const SummaryRequest& request, const SummaryResult& result) {
  Json j;
  j["doc_id"] = request.doc_id;
  j["ratio"] = request.ratio;
  j["selected_facets"] = FacetSetToJson(request.selected);
  j["kept"] = Json::array();
  for (const auto& k : result.summary.kept) {
    Json item;
    item["index"] = k.index;
    item["text"] = k.text;
    item["highlights"] = Json::array();
    for (const auto& h : k.highlights) {
      item["highlights"].push_back({{"token_index", h.token_index}, {"facet", h.facet}});
    }
    j["kept"].push_back(std::move(item));
  }
  j["facov"] = FacovToJson(result.facov);
  j["bleu"] = BleuToJson(result.bleu);
  return j;
}

Json SweepToJson(std::span<const SweepRow> rows) {
  Json j = Json::array();
  for (const auto& r : rows) {
    Json row;
    row["ratio"] = r.ratio;
    row["mean_facov"] = r.mean_facov;
    row["mean_bleu"] = r.mean_bleu;
    j.push_back(std::move(row));
  }
  return j;
}

}  // namespace painfacets
