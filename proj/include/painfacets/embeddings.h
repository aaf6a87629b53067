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

#ifndef PAINFACETS_EMBEDDINGS_H_
#define PAINFACETS_EMBEDDINGS_H_

#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "painfacets/lexicon.h"

namespace painfacets {

struct Neighbor {
  std::string word;
  double similarity = 0.0;

  friend bool operator==(const Neighbor&, const Neighbor&) = default;
};

// Immutable after construction; all queries are const and thread-safe.
class EmbeddingTable {
 public:
  EmbeddingTable() = default;

  // Parses the textual vector format: "word v1 ... vd" per line, with an
  // optional "count dimension" header line. Words are stored normalized.
  // Throws ParseError naming the offending line.
  static EmbeddingTable Load(std::istream& in);
  static EmbeddingTable LoadFile(const std::string& path);

  // Appends a word. Throws InvalidArgument on dimension mismatch or a
  // duplicate (normalized) word.
  void Add(std::string_view word, std::span<const double> vector);

  void Write(std::ostream& out) const;

  bool empty() const { return words_.empty(); }
  std::size_t size() const { return words_.size(); }
  // Undefined (nullopt) for an empty table.
  std::optional<std::size_t> dimension() const {
    if (words_.empty()) return std::nullopt;
    return dim_;
  }

  bool Contains(std::string_view normalized) const {
    return index_.contains(std::string(normalized));
  }
  // Nullptr when absent.
  const double* Find(std::string_view normalized) const;
  std::span<const double> Vector(std::size_t row) const {
    return {data_.data() + row * dim_, dim_};
  }
  const std::vector<std::string>& words() const { return words_; }

  double Cosine(std::string_view a, std::string_view b) const;

  // Up to k most similar words, excluding `word`, optionally restricted to
  // words whose lexicon tag equals `pos_filter`. Sorted by similarity
  // descending, ties by word ascending. Throws NotInVocabulary.
  std::vector<Neighbor> Neighbors(std::string_view word, std::size_t k,
                                  std::optional<PosTag> pos_filter = std::nullopt,
                                  const PosLexicon& lexicon = PosLexicon::Default()) const;

 private:
  double CosineRows(std::size_t a, std::size_t b) const;
  std::size_t RowOf(std::string_view word) const;

  std::size_t dim_ = 0;
  std::vector<std::string> words_;
  std::vector<double> data_;
  std::vector<double> norms_;
  std::unordered_map<std::string, std::size_t> index_;
};

}  // namespace painfacets

#endif  // PAINFACETS_EMBEDDINGS_H_
