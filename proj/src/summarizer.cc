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

#include "painfacets/summarizer.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <future>
#include <map>
#include <numeric>
#include <unordered_map>

#include "painfacets/error.h"
#include "painfacets/lexicon.h"

namespace painfacets {

namespace {

void CheckRatio(double ratio) {
  if (!(ratio > 0.0 && ratio <= 1.0)) {
    throw InvalidArgument("ratio must lie in (0,1], got " + std::to_string(ratio));
  }
}

std::vector<std::string> ContentTokens(const Sentence& s) {
  std::vector<std::string> out;
  for (const auto& t : s.tokens) {
    std::string n = Normalize(t);
    if (!n.empty() && !IsStopword(n)) out.push_back(std::move(n));
  }
  return out;
}

double ParseNumber(std::string_view s) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw InvalidArgument("not a number: '" + std::string(s) + "'");
  }
  return v;
}

double Round12(double v) { return std::round(v * 1e12) / 1e12; }

}  // namespace

std::string Summary::Text() const {
  std::string out;
  for (const auto& k : kept) {
    if (!out.empty()) out += ' ';
    out += k.text;
  }
  return out;
}

std::vector<Sentence> FilterByFacets(std::span<const Sentence> sentences,
                                     const FacetSet& selected) {
  if (selected.empty()) return {sentences.begin(), sentences.end()};
  std::vector<Sentence> out;
  for (const auto& s : sentences) {
    const bool hit = std::any_of(s.tokens.begin(), s.tokens.end(), [&](const std::string& t) {
      return selected.contains(Normalize(t));
    });
    if (hit) out.push_back(s);
  }
  return out;
}

std::vector<double> SentenceScores(std::span<const Sentence> sentences) {
  std::vector<std::vector<std::string>> content;
  std::unordered_map<std::string, std::size_t> freq;
  std::size_t total = 0;
  for (const auto& s : sentences) {
    content.push_back(ContentTokens(s));
    for (const auto& w : content.back()) ++freq[w];
    total += content.back().size();
  }
  std::vector<double> scores;
  scores.reserve(sentences.size());
  for (const auto& words : content) {
    if (words.empty()) {
      scores.push_back(0.0);
      continue;
    }
    double sum = 0.0;
    for (const auto& w : words) {
      sum += static_cast<double>(freq[w]) / static_cast<double>(total);
    }
    scores.push_back(sum / static_cast<double>(words.size()));
  }
  return scores;
}

std::size_t KeptCount(std::size_t n, double ratio) {
  CheckRatio(ratio);
  if (n == 0) return 0;
  // 0.3 * 10 evaluates to 3.0000000000000004; do not let that round up.
  const double raw = std::ceil(ratio * static_cast<double>(n) - 1e-9);
  return std::clamp<std::size_t>(static_cast<std::size_t>(std::max(raw, 1.0)), 1, n);
}

Summary RankAndCompress(std::span<const Sentence> sentences, double ratio) {
  const std::size_t keep = KeptCount(sentences.size(), ratio);
  const auto scores = SentenceScores(sentences);
  std::vector<std::size_t> order(sentences.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });
  order.resize(keep);
  std::sort(order.begin(), order.end());
  Summary summary;
  for (std::size_t pos : order) {
    summary.kept.push_back({sentences[pos].index, sentences[pos].text, {}});
  }
  return summary;
}

void Highlight(Summary& summary, const FacetSet& facets) {
  for (auto& k : summary.kept) {
    k.highlights.clear();
    const auto tokens = Tokenize(k.text);
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      std::string n = Normalize(tokens[i]);
      if (!n.empty() && facets.contains(n)) k.highlights.push_back({i, std::move(n)});
    }
  }
}

FaCovReport Facov(std::span<const Sentence> original, const Summary& summary,
                  const FacetSet& lexicon_words, const FacetSet& expert) {
  FaCovReport r;
  r.e = expert;
  for (const auto& s : original) {
    for (auto& f : FacetsInText(s.text, lexicon_words)) r.x.insert(f);
  }
  FacetSet candidates = lexicon_words;
  candidates.insert(expert.begin(), expert.end());
  r.y = FacetsInText(summary.Text(), candidates);

  FacetSet x_or_e = r.x;
  x_or_e.insert(expert.begin(), expert.end());
  for (const auto& f : x_or_e) {
    if (r.y.contains(f)) {
      r.z.insert(f);
      continue;
    }
    MissingFacet m{f, {}};
    const FacetSet probe = {f};
    for (const auto& s : original) {
      if (!FacetsInText(s.text, probe).empty()) m.source_sentences.push_back(s.index);
    }
    r.missing.push_back(std::move(m));
  }
  r.score = x_or_e.empty() ? 0.0
                           : static_cast<double>(r.z.size()) / static_cast<double>(x_or_e.size());
  return r;
}

BleuReport Bleu(std::span<const std::string> candidate, std::span<const std::string> reference,
                std::size_t max_order) {
  BleuReport report;
  report.candidate_length = candidate.size();
  report.reference_length = reference.size();
  report.precisions.assign(max_order, std::nullopt);
  if (candidate.empty()) return report;

  auto count_ngrams = [](std::span<const std::string> tokens, std::size_t n) {
    std::map<std::vector<std::string>, std::size_t> counts;
    for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
      ++counts[std::vector<std::string>(tokens.begin() + i, tokens.begin() + i + n)];
    }
    return counts;
  };

  double log_sum = 0.0;
  std::size_t included = 0;
  for (std::size_t n = 1; n <= max_order; ++n) {
    if (candidate.size() < n) continue;
    const auto cand = count_ngrams(candidate, n);
    const auto ref = count_ngrams(reference, n);
    std::size_t matches = 0;
    std::size_t total = 0;
    for (const auto& [gram, c] : cand) {
      total += c;
      if (auto it = ref.find(gram); it != ref.end()) matches += std::min(c, it->second);
    }
    const double p = matches == 0
                         ? 1.0 / (static_cast<double>(total) + 1.0)
                         : static_cast<double>(matches) / static_cast<double>(total);
    report.precisions[n - 1] = p;
    log_sum += std::log(p);
    ++included;
  }
  const double c = static_cast<double>(candidate.size());
  const double r = static_cast<double>(reference.size());
  report.brevity_penalty = c >= r ? 1.0 : std::exp(1.0 - r / c);
  report.score = report.brevity_penalty * std::exp(log_sum / static_cast<double>(included));
  return report;
}

BleuReport Bleu(std::string_view candidate, std::string_view reference, std::size_t max_order) {
  const auto c = Tokenize(candidate);
  const auto r = Tokenize(reference);
  return Bleu(std::span<const std::string>(c), std::span<const std::string>(r), max_order);
}

SummaryResult Summarize(const SummaryRequest& request, const Corpus& corpus,
                        const FacetSet& lexicon_words) {
  CheckRatio(request.ratio);
  const auto original = corpus.sentences_of(request.doc_id);
  const auto filtered = FilterByFacets(original, request.selected);
  SummaryResult result;
  result.summary = RankAndCompress(filtered, request.ratio);
  FacetSet marks = request.selected;
  marks.insert(request.expert.begin(), request.expert.end());
  Highlight(result.summary, marks);
  result.facov = Facov(original, result.summary, lexicon_words, request.expert);
  result.bleu = Bleu(result.summary.Text(), corpus.document(request.doc_id).text);
  return result;
}

std::vector<double> DefaultSweepRatios() {
  std::vector<double> out;
  for (int i = 1; i <= 9; ++i) out.push_back(Round12(i * 0.1));
  return out;
}

std::vector<double> ParseRatios(std::string_view text) {
  std::vector<double> out;
  if (text.find(':') != std::string_view::npos) {
    const auto a = text.find(':');
    const auto b = text.find(':', a + 1);
    if (b == std::string_view::npos) throw InvalidArgument("range must be start:end:step");
    const double start = ParseNumber(text.substr(0, a));
    const double end = ParseNumber(text.substr(a + 1, b - a - 1));
    const double step = ParseNumber(text.substr(b + 1));
    if (!(step > 0.0)) throw InvalidArgument("range step must be positive");
    if (end < start) throw InvalidArgument("range end precedes start");
    const auto count = static_cast<std::size_t>(std::floor((end - start) / step + 1e-9)) + 1;
    for (std::size_t i = 0; i < count; ++i) {
      out.push_back(Round12(start + static_cast<double>(i) * step));
    }
  } else {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const auto comma = std::min(text.find(',', pos), text.size());
      const auto piece = text.substr(pos, comma - pos);
      if (!piece.empty()) out.push_back(ParseNumber(piece));
      pos = comma + 1;
    }
  }
  if (out.empty()) throw InvalidArgument("no ratios given");
  for (double r : out) CheckRatio(r);
  return out;
}

std::vector<SweepRow> RatioSweep(const Corpus& corpus, std::span<const std::string> doc_ids,
                                 const FacetSet& lexicon_words, const FacetSet& expert,
                                 std::span<const double> ratios, const FacetSet& selected,
                                 std::size_t threads) {
  if (doc_ids.empty()) throw InvalidArgument("ratio sweep needs at least one document");
  if (ratios.empty()) throw InvalidArgument("ratio sweep needs at least one ratio");
  for (double r : ratios) CheckRatio(r);

  // scores[d][r] = {facov, bleu}
  std::vector<std::vector<std::pair<double, double>>> scores(doc_ids.size());
  auto run_doc = [&](std::size_t d) {
    for (double r : ratios) {
      SummaryRequest request{doc_ids[d], selected, expert, r};
      const auto result = Summarize(request, corpus, lexicon_words);
      scores[d].emplace_back(result.facov.score, result.bleu.score);
    }
  };
  threads = std::max<std::size_t>(1, std::min(threads, doc_ids.size()));
  if (threads == 1) {
    for (std::size_t d = 0; d < doc_ids.size(); ++d) run_doc(d);
  } else {
    std::vector<std::future<void>> pending;
    for (std::size_t d = 0; d < doc_ids.size(); ++d) {
      pending.push_back(std::async(std::launch::async, run_doc, d));
      if (pending.size() == threads) {
        for (auto& p : pending) p.get();
        pending.clear();
      }
    }
    for (auto& p : pending) p.get();
  }

  std::vector<SweepRow> rows;
  const double n = static_cast<double>(doc_ids.size());
  for (std::size_t r = 0; r < ratios.size(); ++r) {
    SweepRow row{ratios[r], 0.0, 0.0};
    // Summed in document order so the result does not depend on threading.
    for (std::size_t d = 0; d < doc_ids.size(); ++d) {
      row.mean_facov += scores[d][r].first;
      row.mean_bleu += scores[d][r].second;
    }
    row.mean_facov /= n;
    row.mean_bleu /= n;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace painfacets
