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

#ifndef PAINFACETS_CORPUS_H_
#define PAINFACETS_CORPUS_H_

#include <cstddef>
#include <cstdint>
#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "painfacets/cohort.h"

namespace painfacets {

struct Document {
  std::string id;
  CohortLabel label = CohortLabel::kFM;
  std::string text;

  friend bool operator==(const Document&, const Document&) = default;
};

struct Sentence {
  std::string doc_id;
  std::size_t index = 0;  // 0-based ordinal within the document
  std::string text;
  std::vector<std::string> tokens;
  CohortLabel label = CohortLabel::kFM;

  // Stable identity used for RNG stream derivation and lookups.
  std::string key() const { return doc_id + "#" + std::to_string(index); }

  friend bool operator==(const Sentence&, const Sentence&) = default;
};

// Documents in source order plus their sentences, grouped by document and in
// order. Built once, then treated as immutable.
class Corpus {
 public:
  Corpus() = default;
  // Splits every document into sentences. Throws InvalidArgument on an empty
  // or duplicate id.
  explicit Corpus(std::vector<Document> documents);

  const std::vector<Document>& documents() const { return documents_; }
  const std::vector<Sentence>& sentences() const { return sentences_; }

  // Throws NotFound.
  const Document& document(std::string_view id) const;
  std::span<const Sentence> sentences_of(std::string_view id) const;

  friend bool operator==(const Corpus& a, const Corpus& b) {
    return a.documents_ == b.documents_;
  }

 private:
  std::vector<Document> documents_;
  std::vector<Sentence> sentences_;
  // Per document: [begin, end) into sentences_.
  std::vector<std::pair<std::size_t, std::size_t>> ranges_;
};

// Rule-based sentence boundary detection. A boundary follows '.', '?' or '!'
// (optionally followed by closing quotes/brackets) when the next
// non-whitespace character is an uppercase letter, unless the word ending at
// the period is a listed abbreviation.
std::vector<std::string> SplitSentences(std::string_view text);

const std::vector<std::string>& Abbreviations();

// Line-delimited JSON records {"id", "label", "text"}. Throws ParseError with
// the 1-based line number of a malformed record or duplicate id.
Corpus IngestCorpus(std::istream& in);
Corpus IngestCorpusFile(const std::string& path);
void WriteCorpus(const Corpus& corpus, std::ostream& out);

struct SplitSpec {
  double train_frac = 0.75;
  double val_frac = 0.15;
  double test_frac = 0.10;
  std::uint64_t seed = 42;
};

// Indices into Corpus::sentences().
struct DatasetSplit {
  std::vector<std::size_t> train;
  std::vector<std::size_t> validation;
  std::vector<std::size_t> test;
};

// Shuffles then partitions: train = floor(n*train_frac),
// validation = floor(n*val_frac), test = the rest.
DatasetSplit MakeSplits(const Corpus& corpus, const SplitSpec& spec);
DatasetSplit MakeSplits(std::size_t sentence_count, const SplitSpec& spec);

struct FoldPlan {
  std::size_t k = 4;
  std::uint64_t seed = 42;
  // assignments[i] is the fold of Corpus::sentences()[i].
  std::vector<std::size_t> assignments;

  std::vector<std::size_t> Members(std::size_t fold) const;
  std::vector<std::size_t> Complement(std::size_t fold) const;
};

// Shuffled assignment; the first n % k folds receive one extra sentence.
FoldPlan MakeFolds(const Corpus& corpus, std::size_t k, std::uint64_t seed);
FoldPlan MakeFolds(std::size_t sentence_count, std::size_t k, std::uint64_t seed);

}  // namespace painfacets

#endif  // PAINFACETS_CORPUS_H_
