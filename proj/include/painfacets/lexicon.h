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

#ifndef PAINFACETS_LEXICON_H_
#define PAINFACETS_LEXICON_H_

#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace painfacets {

enum class PosTag { kNoun, kVerb, kAdj, kAdv, kOther };

std::string_view PosName(PosTag tag);
std::optional<PosTag> ParsePos(std::string_view name);

struct Token {
  std::string surface;
  std::string normalized;
  PosTag pos = PosTag::kOther;

  friend bool operator==(const Token&, const Token&) = default;
};

// True when every byte of `s` is ASCII punctuation (and s is nonempty).
bool IsPunctuation(std::string_view s);

// Lowercases ASCII letters and strips leading/trailing ASCII punctuation.
// Internal hyphens and apostrophes survive. Punctuation-only input yields "".
std::string Normalize(std::string_view surface);

// Splits on whitespace. Leading and trailing punctuation characters of each
// whitespace-delimited chunk become their own one-character tokens; internal
// punctuation ("state-of-the-art", "don't") stays attached.
std::vector<std::string> Tokenize(std::string_view text);

// Word -> coarse tag with an ordered suffix fallback. Lookup is total:
// anything unmatched is kOther.
class PosLexicon {
 public:
  PosLexicon() = default;
  PosLexicon(std::unordered_map<std::string, PosTag> words,
             std::vector<std::pair<std::string, PosTag>> suffix_rules);

  // The lexicon shipped with the library (content words of the interview
  // domain, function words as kOther, English derivational suffixes).
  static const PosLexicon& Default();

  // Reads "word TAG" lines; blank lines and '#' comments are skipped.
  // Entries are added on top of the current contents.
  void Load(std::istream& in);

  void Add(std::string_view word, PosTag tag);

  // `normalized` must already be in normalized form.
  PosTag Lookup(std::string_view normalized) const;

  const std::vector<std::pair<std::string, PosTag>>& suffix_rules() const {
    return suffix_rules_;
  }

 private:
  std::unordered_map<std::string, PosTag> words_;
  std::vector<std::pair<std::string, PosTag>> suffix_rules_;
};

// Normalizes and tags each surface. Punctuation is always kOther.
std::vector<Token> TagPos(const std::vector<std::string>& surfaces,
                          const PosLexicon& lexicon = PosLexicon::Default());

inline std::vector<Token> Analyze(std::string_view text,
                                  const PosLexicon& lexicon = PosLexicon::Default()) {
  return TagPos(Tokenize(text), lexicon);
}

// Frozen function-word list used by the summarizer's ranker.
bool IsStopword(std::string_view normalized);

}  // namespace painfacets

#endif  // PAINFACETS_LEXICON_H_
