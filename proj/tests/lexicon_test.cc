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

#include "painfacets/lexicon.h"

namespace painfacets {
namespace {

TEST_CASE("tokenize splits trailing punctuation") {
  const std::vector<std::string> want{"It", "burns", ",", "badly", "."};
  CHECK(Tokenize("It burns, badly.") == want);
}

TEST_CASE("tokenize keeps internal hyphens and apostrophes") {
  CHECK(Tokenize("state-of-the-art") == std::vector<std::string>{"state-of-the-art"});
  CHECK(Tokenize("don't") == std::vector<std::string>{"don't"});
  CHECK(Tokenize("(\"yes\")") == std::vector<std::string>{"(", "\"", "yes", "\"", ")"});
}

TEST_CASE("tokenize of blank text is empty") {
  CHECK(Tokenize("").empty());
  CHECK(Tokenize("  \t\n ").empty());
}

TEST_CASE("normalize lowercases and strips edges") {
  CHECK(Normalize("Burning,") == "burning");
  CHECK(Normalize("...") == "");
  CHECK(Normalize("State-Of") == "state-of");
}

TEST_CASE("punctuation detection") {
  CHECK(IsPunctuation(","));
  CHECK(IsPunctuation("?!"));
  CHECK_FALSE(IsPunctuation(""));
  CHECK_FALSE(IsPunctuation("a."));
}

TEST_CASE("suffix fallback tags unknown words") {
  const auto& lex = PosLexicon::Default();
  CHECK(lex.Lookup("grumbling") == PosTag::kVerb);
  CHECK(lex.Lookup("slowly") == PosTag::kAdv);
  CHECK(lex.Lookup("zorp") == PosTag::kOther);
}

TEST_CASE("lexicon entries beat suffix rules") {
  const auto& lex = PosLexicon::Default();
  CHECK(lex.Lookup("the") == PosTag::kOther);
  CHECK(lex.Lookup("pain") == PosTag::kNoun);
  // "morning" ends in -ing but is listed as a noun.
  CHECK(lex.Lookup("morning") == PosTag::kNoun);
}

TEST_CASE("analyze tags punctuation as other") {
  const auto tokens = Analyze("It burns, badly.");
  REQUIRE(tokens.size() == 5);
  CHECK(tokens[2].pos == PosTag::kOther);
  CHECK(tokens[4].pos == PosTag::kOther);
  CHECK(tokens[3].pos == PosTag::kAdv);
  CHECK(tokens[1].normalized == "burns");
}

TEST_CASE("lexicon load adds entries and rejects nothing blank") {
  PosLexicon lex;
  std::istringstream in("# comment\n\nzorp NOUN\nflib VERB\n");
  lex.Load(in);
  CHECK(lex.Lookup("zorp") == PosTag::kNoun);
  CHECK(lex.Lookup("flib") == PosTag::kVerb);
}

TEST_CASE("pos names round trip") {
  for (auto tag : {PosTag::kNoun, PosTag::kVerb, PosTag::kAdj, PosTag::kAdv, PosTag::kOther}) {
    CHECK(ParsePos(PosName(tag)) == tag);
  }
  CHECK_FALSE(ParsePos("VB").has_value());
}

TEST_CASE("stopwords") {
  CHECK(IsStopword("the"));
  CHECK(IsStopword("and"));
  CHECK_FALSE(IsStopword("pain"));
}

}  // namespace
}  // namespace painfacets
