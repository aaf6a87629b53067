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

#include "painfacets/corpus.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <numeric>
#include <unordered_set>

#include <json.hpp>

#include "painfacets/error.h"
#include "painfacets/lexicon.h"
#include "painfacets/rng.h"

namespace painfacets {

namespace {

bool IsSpace(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }
bool IsCloser(char c) { return c == '"' || c == '\'' || c == ')' || c == ']'; }

std::string_view Trim(std::string_view s) {
  while (!s.empty() && IsSpace(s.front())) s.remove_prefix(1);
  while (!s.empty() && IsSpace(s.back())) s.remove_suffix(1);
  return s;
}

std::string Lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

// The whitespace-delimited word that ends at text[end - 1], lowercased, with
// opening quotes/brackets removed.
std::string WordEndingAt(std::string_view text, std::size_t end) {
  std::size_t begin = end;
  while (begin > 0 && !IsSpace(text[begin - 1])) --begin;
  std::string_view word = text.substr(begin, end - begin);
  while (!word.empty() && (word.front() == '"' || word.front() == '\'' ||
                           word.front() == '(' || word.front() == '[')) {
    word.remove_prefix(1);
  }
  return Lower(word);
}

bool IsAbbreviation(const std::string& word) {
  static const auto* set = [] {
    auto* s = new std::unordered_set<std::string>();
    for (const auto& a : Abbreviations()) s->insert(Lower(a));
    return s;
  }();
  return set->contains(word);
}

}  // namespace

const std::vector<std::string>& Abbreviations() {
  static const std::vector<std::string> kList = {
      "Dr.", "Mr.", "Mrs.", "Ms.", "St.", "e.g.", "i.e.", "etc."};
  return kList;
}

std::vector<std::string> SplitSentences(std::string_view text) {
  std::vector<std::string> out;
  auto emit = [&out](std::string_view piece) {
    piece = Trim(piece);
    if (!piece.empty()) out.emplace_back(piece);
  };

  std::size_t start = 0;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c != '.' && c != '?' && c != '!') {
      ++i;
      continue;
    }
    std::size_t end = i + 1;
    while (end < text.size() && (text[end] == '.' || text[end] == '?' ||
                                 text[end] == '!' || IsCloser(text[end]))) {
      ++end;
    }
    std::size_t next = end;
    while (next < text.size() && IsSpace(text[next])) ++next;
    const bool has_space = next > end;
    const bool upper_follows =
        next < text.size() && std::isupper(static_cast<unsigned char>(text[next]));
    bool boundary = has_space && upper_follows;
    if (boundary && c == '.' && end == i + 1 && IsAbbreviation(WordEndingAt(text, end))) {
      boundary = false;
    }
    if (boundary) {
      emit(text.substr(start, end - start));
      start = end;
    }
    i = end;
  }
  emit(text.substr(start));
  return out;
}

Corpus::Corpus(std::vector<Document> documents) : documents_(std::move(documents)) {
  std::unordered_set<std::string> seen;
  for (const auto& doc : documents_) {
    if (doc.id.empty()) throw InvalidArgument("document id is empty");
    if (!seen.insert(doc.id).second) {
      throw InvalidArgument("duplicate document id '" + doc.id + "'");
    }
    const std::size_t begin = sentences_.size();
    std::size_t index = 0;
    for (auto& text : SplitSentences(doc.text)) {
      Sentence s;
      s.doc_id = doc.id;
      s.index = index++;
      s.tokens = Tokenize(text);
      s.text = std::move(text);
      s.label = doc.label;
      sentences_.push_back(std::move(s));
    }
    ranges_.emplace_back(begin, sentences_.size());
  }
}

const Document& Corpus::document(std::string_view id) const {
  for (const auto& doc : documents_) {
    if (doc.id == id) return doc;
  }
  throw NotFound("unknown document '" + std::string(id) + "'");
}

std::span<const Sentence> Corpus::sentences_of(std::string_view id) const {
  for (std::size_t d = 0; d < documents_.size(); ++d) {
    if (documents_[d].id == id) {
      const auto [b, e] = ranges_[d];
      return std::span<const Sentence>(sentences_).subspan(b, e - b);
    }
  }
  throw NotFound("unknown document '" + std::string(id) + "'");
}

Corpus IngestCorpus(std::istream& in) {
  std::vector<Document> docs;
  std::unordered_set<std::string> seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (Trim(line).empty()) continue;
    nlohmann::json record;
    try {
      record = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error&) {
      throw ParseError("record is not valid JSON", line_no);
    }
    if (!record.is_object()) throw ParseError("record is not a JSON object", line_no);
    for (const char* field : {"id", "label", "text"}) {
      if (!record.contains(field) || !record[field].is_string()) {
        throw ParseError(std::string("missing or non-string field '") + field + "'",
                         line_no);
      }
    }
    Document doc;
    doc.id = record["id"].get<std::string>();
    const auto label_name = record["label"].get<std::string>();
    auto label = ParseCohort(label_name);
    if (!label) throw ParseError("unknown label '" + label_name + "'", line_no);
    doc.label = *label;
    doc.text = record["text"].get<std::string>();
    if (doc.id.empty()) throw ParseError("empty id", line_no);
    if (!seen.insert(doc.id).second) {
      throw ParseError("duplicate id '" + doc.id + "'", line_no);
    }
    docs.push_back(std::move(doc));
  }
  return Corpus(std::move(docs));
}

Corpus IngestCorpusFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open corpus file: " + path);
  return IngestCorpus(in);
}

void WriteCorpus(const Corpus& corpus, std::ostream& out) {
  for (const auto& doc : corpus.documents()) {
    nlohmann::ordered_json record;
    record["id"] = doc.id;
    record["label"] = CohortName(doc.label);
    record["text"] = doc.text;
    out << record.dump() << '\n';
  }
}

DatasetSplit MakeSplits(std::size_t n, const SplitSpec& spec) {
  for (double f : {spec.train_frac, spec.val_frac, spec.test_frac}) {
    if (!(f > 0.0 && f < 1.0)) throw InvalidArgument("split fractions must lie in (0,1)");
  }
  if (std::abs(spec.train_frac + spec.val_frac + spec.test_frac - 1.0) > 1e-9) {
    throw InvalidArgument("split fractions must sum to 1");
  }
  if (n < 10) throw InvalidArgument("need at least 10 sentences to split");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  Rng rng(spec.seed);
  Shuffle(std::span(order), rng);

  // The epsilon absorbs representation error (0.15 * 100 = 15.000000000000002
  // is harmless, but 0.7 * 10 = 6.999999999999999 is not).
  const auto n_train = static_cast<std::size_t>(std::floor(n * spec.train_frac + 1e-9));
  const auto n_val = static_cast<std::size_t>(std::floor(n * spec.val_frac + 1e-9));
  DatasetSplit split;
  split.train.assign(order.begin(), order.begin() + n_train);
  split.validation.assign(order.begin() + n_train, order.begin() + n_train + n_val);
  split.test.assign(order.begin() + n_train + n_val, order.end());
  return split;
}

DatasetSplit MakeSplits(const Corpus& corpus, const SplitSpec& spec) {
  return MakeSplits(corpus.sentences().size(), spec);
}

std::vector<std::size_t> FoldPlan::Members(std::size_t fold) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < assignments.size(); ++i) {
    if (assignments[i] == fold) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> FoldPlan::Complement(std::size_t fold) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < assignments.size(); ++i) {
    if (assignments[i] != fold) out.push_back(i);
  }
  return out;
}

FoldPlan MakeFolds(std::size_t n, std::size_t k, std::uint64_t seed) {
  if (k < 2) throw InvalidArgument("fold count must be at least 2");
  if (k > n) {
    throw InvalidArgument("fold count " + std::to_string(k) + " exceeds sentence count " +
                          std::to_string(n));
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  Rng rng(seed);
  Shuffle(std::span(order), rng);

  FoldPlan plan;
  plan.k = k;
  plan.seed = seed;
  plan.assignments.assign(n, 0);
  const std::size_t base = n / k;
  const std::size_t extra = n % k;
  std::size_t pos = 0;
  for (std::size_t fold = 0; fold < k; ++fold) {
    const std::size_t size = base + (fold < extra ? 1 : 0);
    for (std::size_t j = 0; j < size; ++j) plan.assignments[order[pos++]] = fold;
  }
  return plan;
}

FoldPlan MakeFolds(const Corpus& corpus, std::size_t k, std::uint64_t seed) {
  return MakeFolds(corpus.sentences().size(), k, seed);
}

}  // namespace painfacets
