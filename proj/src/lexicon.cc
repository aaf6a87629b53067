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

#include "painfacets/lexicon.h"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_set>

#include "painfacets/error.h"

namespace painfacets {

namespace {

bool IsPunctByte(unsigned char c) { return c < 0x80 && std::ispunct(c); }
bool IsSpaceByte(unsigned char c) { return c < 0x80 && std::isspace(c); }

constexpr const char* kNouns[] = {
    // interview domain
    "pain", "ache", "aches", "night", "nights", "day", "days", "morning",
    "evening", "week", "weeks", "month", "months", "year", "years", "time",
    "life", "home", "work", "job", "doctor", "doctors", "family", "friends",
    "people", "body", "legs", "leg", "back", "neck", "hands", "hand", "feet",
    "foot", "arm", "arms", "head", "shoulder", "shoulders", "knee", "knees",
    "muscle", "muscles", "joint", "joints", "nerve", "nerves", "surgery",
    "teeth", "tooth", "eye", "eyes", "bowel", "dinner", "situation",
    "problems", "problem", "stress", "massage", "medication", "medicine",
    "pills", "treatment", "therapy", "sleep", "energy", "appetite", "interest",
    "pleasure", "failure", "fatigue", "stiffness", "tenderness", "fog",
    "numbness", "injury", "shock", "spine", "bed", "house", "car", "walk",
    "everything", "nothing", "something", "anything", "heartburn", "anxiety",
    "depression", "migraine", "headache", "headaches", "weather", "rain",
    "cold", "heat", "exercise", "swimming", "kids", "children", "husband",
    "wife", "mother", "father", "hospital", "clinic", "diagnosis", "symptoms",
    "symptom", "feeling", "feelings", "mind", "memory", "concentration",
    "weight", "food", "stomach", "skin", "fingers", "toes", "hip", "hips",
    "flare", "flares", "cramps", "spasms", "tingling", "needles", "pins",
    "sensation", "sensations", "electricity", "current", "accident", "cat",
    "mat", "dog", "state-of-the-art",
};

constexpr const char* kVerbs[] = {
    "feel", "feels", "felt", "hurt", "hurts", "walk", "walked", "try", "tried",
    "go", "went", "get", "got", "take", "took", "need", "needed", "want",
    "wanted", "think", "thought", "thinking", "believed", "believe", "help",
    "helped", "started", "start", "stay", "stayed", "jump", "look", "looked",
    "put", "pull", "sleeping", "burns", "burn", "sat", "sit", "stand", "lie",
    "move", "moved", "cope", "know", "knew", "see", "saw", "say", "said",
    "tell", "told", "come", "came", "make", "made", "keep", "kept", "cry",
    "cried", "rest", "wake", "woke", "carry", "lift", "bend", "cook",
    "overeating", "concentrating", "hurting", "stabs", "shoots", "throbs",
};

constexpr const char* kAdjectives[] = {
    "bad", "hard", "tired", "little", "good", "long", "normal", "worse",
    "better", "constant", "difficult", "whole", "excruciating", "upset",
    "burning", "shooting", "stabbing", "sharp", "dull", "exhausted", "tender",
    "widespread", "stiff", "sore", "numb", "electric", "depressed", "hopeless",
    "fidgety", "restless", "dead", "down", "sick", "weak", "heavy", "awful",
    "terrible", "horrible", "painful", "chronic", "severe", "mild", "hot",
    "swollen", "unbearable", "foggy", "anxious", "sad", "happy", "able",
    "unable", "same", "different", "new", "old", "first", "last",
};

constexpr const char* kAdverbs[] = {
    "really", "very", "sometimes", "always", "often", "usually", "still",
    "just", "never", "again", "also", "mostly", "badly", "well", "even",
    "almost", "already", "quite", "too", "maybe", "now", "then", "today",
    "yesterday", "everywhere", "constantly", "suddenly", "slowly",
};

// Function words. Also the summarizer's stopword list.
constexpr const char* kFunctionWords[] = {
    "a", "about", "above", "after", "again", "against", "all", "am", "an",
    "and", "any", "are", "as", "at", "be", "because", "been", "before",
    "being", "below", "between", "both", "but", "by", "can", "could", "did",
    "do", "does", "doing", "don't", "during", "each", "few", "for", "from",
    "further", "had", "has", "have", "having", "he", "her", "here", "hers",
    "herself", "him", "himself", "his", "how", "i", "i'm", "if", "in", "into",
    "is", "it", "it's", "its", "itself", "me", "more", "most", "my", "myself",
    "no", "nor", "not", "of", "off", "on", "once", "only", "or", "other",
    "ought", "our", "ours", "ourselves", "out", "over", "own", "she", "should",
    "so", "some", "such", "than", "that", "the", "their", "theirs", "them",
    "themselves", "there", "these", "they", "this", "those", "through", "to",
    "under", "until", "up", "was", "we", "were", "what", "when", "where",
    "which", "while", "who", "whom", "why", "will", "with", "would", "you",
    "your", "yours", "yourself", "yourselves", "just", "very", "too",
};

const std::unordered_set<std::string>& Stopwords() {
  static const auto* set = [] {
    auto* s = new std::unordered_set<std::string>();
    for (const char* w : kFunctionWords) s->insert(w);
    return s;
  }();
  return *set;
}

}  // namespace

std::string_view PosName(PosTag tag) {
  switch (tag) {
    case PosTag::kNoun:
      return "NOUN";
    case PosTag::kVerb:
      return "VERB";
    case PosTag::kAdj:
      return "ADJ";
    case PosTag::kAdv:
      return "ADV";
    case PosTag::kOther:
      break;
  }
  return "OTHER";
}

std::optional<PosTag> ParsePos(std::string_view name) {
  if (name == "NOUN") return PosTag::kNoun;
  if (name == "VERB") return PosTag::kVerb;
  if (name == "ADJ") return PosTag::kAdj;
  if (name == "ADV") return PosTag::kAdv;
  if (name == "OTHER") return PosTag::kOther;
  return std::nullopt;
}

bool IsPunctuation(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return IsPunctByte(static_cast<unsigned char>(c));
  });
}

std::string Normalize(std::string_view surface) {
  std::size_t begin = 0;
  std::size_t end = surface.size();
  while (begin < end && IsPunctByte(surface[begin])) ++begin;
  while (end > begin && IsPunctByte(surface[end - 1])) --end;
  std::string out(surface.substr(begin, end - begin));
  for (char& c : out) {
    if (static_cast<unsigned char>(c) < 0x80) {
      c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
  }
  return out;
}

std::vector<std::string> Tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && IsSpaceByte(text[i])) ++i;
    const std::size_t start = i;
    while (i < text.size() && !IsSpaceByte(text[i])) ++i;
    if (start == i) break;
    std::string_view chunk = text.substr(start, i - start);

    std::size_t lead = 0;
    while (lead < chunk.size() && IsPunctByte(chunk[lead])) ++lead;
    std::size_t trail = chunk.size();
    while (trail > lead && IsPunctByte(chunk[trail - 1])) --trail;

    for (std::size_t k = 0; k < lead; ++k) tokens.emplace_back(1, chunk[k]);
    if (trail > lead) tokens.emplace_back(chunk.substr(lead, trail - lead));
    for (std::size_t k = trail; k < chunk.size(); ++k) {
      tokens.emplace_back(1, chunk[k]);
    }
  }
  return tokens;
}

PosLexicon::PosLexicon(std::unordered_map<std::string, PosTag> words,
                       std::vector<std::pair<std::string, PosTag>> suffix_rules)
    : words_(std::move(words)), suffix_rules_(std::move(suffix_rules)) {}

const PosLexicon& PosLexicon::Default() {
  static const PosLexicon* lexicon = [] {
    std::unordered_map<std::string, PosTag> words;
    // Later groups do not override earlier ones.
    for (const char* w : kFunctionWords) words.emplace(w, PosTag::kOther);
    for (const char* w : kAdverbs) words.emplace(w, PosTag::kAdv);
    for (const char* w : kNouns) words.emplace(w, PosTag::kNoun);
    for (const char* w : kVerbs) words.emplace(w, PosTag::kVerb);
    for (const char* w : kAdjectives) words.emplace(w, PosTag::kAdj);
    // Checked in order; first match wins.
    std::vector<std::pair<std::string, PosTag>> rules = {
        {"ly", PosTag::kAdv},     {"ing", PosTag::kVerb},
        {"ed", PosTag::kVerb},    {"ness", PosTag::kNoun},
        {"tion", PosTag::kNoun},  {"sion", PosTag::kNoun},
        {"ment", PosTag::kNoun},  {"ity", PosTag::kNoun},
        {"ism", PosTag::kNoun},   {"ous", PosTag::kAdj},
        {"ful", PosTag::kAdj},    {"less", PosTag::kAdj},
        {"ive", PosTag::kAdj},    {"able", PosTag::kAdj},
        {"ible", PosTag::kAdj},   {"al", PosTag::kAdj},
        {"ic", PosTag::kAdj},     {"ize", PosTag::kVerb},
        {"ise", PosTag::kVerb},   {"ate", PosTag::kVerb},
    };
    return new PosLexicon(std::move(words), std::move(rules));
  }();
  return *lexicon;
}

void PosLexicon::Load(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string word;
    std::string tag;
    if (!(fields >> word) || word[0] == '#') continue;
    if (!(fields >> tag)) throw ParseError("missing POS tag", line_no);
    auto parsed = ParsePos(tag);
    if (!parsed) throw ParseError("unknown POS tag '" + tag + "'", line_no);
    Add(word, *parsed);
  }
}

void PosLexicon::Add(std::string_view word, PosTag tag) {
  words_[Normalize(word)] = tag;
}

PosTag PosLexicon::Lookup(std::string_view normalized) const {
  if (normalized.empty()) return PosTag::kOther;
  if (auto it = words_.find(std::string(normalized)); it != words_.end()) {
    return it->second;
  }
  for (const auto& [suffix, tag] : suffix_rules_) {
    if (normalized.size() > suffix.size() && normalized.ends_with(suffix)) {
      return tag;
    }
  }
  return PosTag::kOther;
}

std::vector<Token> TagPos(const std::vector<std::string>& surfaces,
                          const PosLexicon& lexicon) {
  std::vector<Token> out;
  out.reserve(surfaces.size());
  for (const auto& surface : surfaces) {
    Token token{surface, Normalize(surface), PosTag::kOther};
    if (!IsPunctuation(surface)) token.pos = lexicon.Lookup(token.normalized);
    out.push_back(std::move(token));
  }
  return out;
}

bool IsStopword(std::string_view normalized) {
  return Stopwords().contains(std::string(normalized));
}

}  // namespace painfacets
