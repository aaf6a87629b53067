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

#include "painfacets/embeddings.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "painfacets/error.h"

namespace painfacets {

namespace {

std::vector<std::string_view> SplitFields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) fields.push_back(line.substr(start, i - start));
  }
  return fields;
}

bool IsInteger(std::string_view s) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  return ec == std::errc() && ptr == s.data() + s.size();
}

std::optional<double> ParseDouble(std::string_view s) {
  // from_chars<double> is available in libstdc++ 11.
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v)) {
    return std::nullopt;
  }
  return v;
}

}  // namespace

EmbeddingTable EmbeddingTable::Load(std::istream& in) {
  EmbeddingTable table;
  std::string line;
  std::size_t line_no = 0;
  std::vector<double> values;
  while (std::getline(in, line)) {
    ++line_no;
    auto fields = SplitFields(line);
    if (fields.empty()) continue;
    if (line_no == 1 && fields.size() == 2 && IsInteger(fields[0]) &&
        IsInteger(fields[1])) {
      continue;
    }
    if (fields.size() < 2) throw ParseError("entry has no vector components", line_no);
    values.clear();
    for (std::size_t i = 1; i < fields.size(); ++i) {
      auto v = ParseDouble(fields[i]);
      if (!v) {
        throw ParseError("non-numeric component '" + std::string(fields[i]) + "'",
                         line_no);
      }
      values.push_back(*v);
    }
    try {
      table.Add(fields[0], values);
    } catch (const InvalidArgument& e) {
      throw ParseError(e.what(), line_no);
    }
  }
  return table;
}

EmbeddingTable EmbeddingTable::LoadFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open embedding file: " + path);
  return Load(in);
}

void EmbeddingTable::Add(std::string_view word, std::span<const double> vector) {
  std::string key = Normalize(word);
  if (key.empty()) throw InvalidArgument("empty word after normalization");
  if (vector.empty()) throw InvalidArgument("zero-dimensional vector");
  if (!words_.empty() && vector.size() != dim_) {
    throw InvalidArgument("dimension " + std::to_string(vector.size()) +
                          " differs from table dimension " + std::to_string(dim_));
  }
  if (index_.contains(key)) throw InvalidArgument("duplicate word '" + key + "'");
  dim_ = vector.size();
  index_.emplace(key, words_.size());
  words_.push_back(std::move(key));
  data_.insert(data_.end(), vector.begin(), vector.end());
  double sq = 0.0;
  for (double v : vector) sq += v * v;
  norms_.push_back(std::sqrt(sq));
}

void EmbeddingTable::Write(std::ostream& out) const {
  out << std::setprecision(17);
  for (std::size_t r = 0; r < words_.size(); ++r) {
    out << words_[r];
    for (double v : Vector(r)) out << ' ' << v;
    out << '\n';
  }
}

const double* EmbeddingTable::Find(std::string_view normalized) const {
  auto it = index_.find(std::string(normalized));
  return it == index_.end() ? nullptr : data_.data() + it->second * dim_;
}

std::size_t EmbeddingTable::RowOf(std::string_view word) const {
  if (words_.empty()) throw NotInVocabulary(std::string(word));
  auto it = index_.find(std::string(word));
  if (it == index_.end()) throw NotInVocabulary(std::string(word));
  return it->second;
}

double EmbeddingTable::CosineRows(std::size_t a, std::size_t b) const {
  if (norms_[a] == 0.0 || norms_[b] == 0.0) return 0.0;
  const double* va = data_.data() + a * dim_;
  const double* vb = data_.data() + b * dim_;
  double dot = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) dot += va[i] * vb[i];
  return dot / (norms_[a] * norms_[b]);
}

double EmbeddingTable::Cosine(std::string_view a, std::string_view b) const {
  return CosineRows(RowOf(a), RowOf(b));
}

std::vector<Neighbor> EmbeddingTable::Neighbors(std::string_view word, std::size_t k,
                                                std::optional<PosTag> pos_filter,
                                                const PosLexicon& lexicon) const {
  const std::size_t query = RowOf(word);
  std::vector<std::pair<double, std::size_t>> scored;
  scored.reserve(words_.size());
  for (std::size_t r = 0; r < words_.size(); ++r) {
    if (r == query) continue;
    if (pos_filter && lexicon.Lookup(words_[r]) != *pos_filter) continue;
    scored.emplace_back(CosineRows(query, r), r);
  }
  auto better = [this](const auto& x, const auto& y) {
    if (x.first != y.first) return x.first > y.first;
    return words_[x.second] < words_[y.second];
  };
  const std::size_t n = std::min(k, scored.size());
  std::partial_sort(scored.begin(), scored.begin() + static_cast<std::ptrdiff_t>(n),
                    scored.end(), better);
  std::vector<Neighbor> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back({words_[scored[i].second], scored[i].first});
  }
  return out;
}

}  // namespace painfacets
