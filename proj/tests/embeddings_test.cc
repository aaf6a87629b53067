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

#include <sstream>

#include <doctest.h>

#include "oracles.h"
#include "painfacets/embeddings.h"
#include "painfacets/error.h"

namespace painfacets {
namespace {

EmbeddingTable FiveWords() {
  std::istringstream in(
      "pain 1 0 0\n"
      "ache 0.9 0.1 0\n"
      "hurt 0.7 0.7 0\n"
      "sleep 0 1 0.2\n"
      "Night 0 0.2 1\n");
  return EmbeddingTable::Load(in);
}

TEST_CASE("neighbors match exhaustive cosine") {
  const auto table = FiveWords();
  for (const auto& w : table.words()) {
    for (std::size_t k = 1; k <= 5; ++k) {
      const auto got = table.Neighbors(w, k);
      const auto want = oracle::Neighbors(table, w, k);
      REQUIRE(got.size() == want.size());
      for (std::size_t i = 0; i < got.size(); ++i) {
        CHECK(got[i].word == want[i].first);
        CHECK(got[i].similarity == doctest::Approx(want[i].second).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("words are stored normalized") {
  const auto table = FiveWords();
  CHECK(table.Contains("night"));
  CHECK_FALSE(table.Contains("Night"));
  CHECK(table.dimension() == 3u);
}

TEST_CASE("neighbors throw for unknown words and empty tables") {
  const auto table = FiveWords();
  CHECK_THROWS_AS(table.Neighbors("zorp", 3), NotInVocabulary);
  EmbeddingTable empty;
  CHECK_FALSE(empty.dimension().has_value());
  CHECK_THROWS_AS(empty.Neighbors("pain", 3), NotInVocabulary);
}

TEST_CASE("pos filter restricts neighbors") {
  const auto table = FiveWords();
  const auto nouns = table.Neighbors("pain", 10, PosTag::kNoun);
  for (const auto& n : nouns) CHECK(PosLexicon::Default().Lookup(n.word) == PosTag::kNoun);
}

TEST_CASE("load reports the bad line") {
  std::istringstream in("a 1 2\nb 1\n");
  try {
    EmbeddingTable::Load(in);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  std::istringstream bad_number("a 1 x\n");
  CHECK_THROWS_AS(EmbeddingTable::Load(bad_number), ParseError);
}

TEST_CASE("header line is optional") {
  std::istringstream in("2 2\na 1 0\nb 0 1\n");
  const auto table = EmbeddingTable::Load(in);
  CHECK(table.size() == 2);
  CHECK(table.Cosine("a", "b") == 0.0);
}

TEST_CASE("write then load round trips") {
  const auto table = FiveWords();
  std::stringstream buf;
  table.Write(buf);
  const auto again = EmbeddingTable::Load(buf);
  REQUIRE(again.words() == table.words());
  for (std::size_t r = 0; r < table.size(); ++r) {
    const auto a = table.Vector(r);
    const auto b = again.Vector(r);
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
  }
}

TEST_CASE("add rejects duplicates and dimension mismatch") {
  EmbeddingTable t;
  t.Add("a", std::vector<double>{1, 2});
  CHECK_THROWS_AS(t.Add("A", std::vector<double>{1, 2}), InvalidArgument);
  CHECK_THROWS_AS(t.Add("b", std::vector<double>{1, 2, 3}), InvalidArgument);
}

TEST_CASE("zero vector has zero cosine") {
  EmbeddingTable t;
  t.Add("a", std::vector<double>{0, 0});
  t.Add("b", std::vector<double>{1, 0});
  CHECK(t.Cosine("a", "b") == 0.0);
}

}  // namespace
}  // namespace painfacets
