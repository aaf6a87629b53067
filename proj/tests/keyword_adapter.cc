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

// Test adapter speaking the line protocol on stdin/stdout.
//   keyword_adapter [--short] [--die-after N] word...
// P(FM) is 1 when a sentence contains any of the words. --short answers with
// one probability too few; --die-after exits after N requests.
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "painfacets/classifier.h"

int main(int argc, char** argv) {
  bool short_reply = false;
  long die_after = -1;
  std::vector<std::string> words;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--short") {
      short_reply = true;
    } else if (arg == "--die-after" && i + 1 < argc) {
      die_after = std::atol(argv[++i]);
    } else {
      words.push_back(arg);
    }
  }
  const auto model = painfacets::KeywordClassifier::AnyOf(words);
  std::string line;
  long served = 0;
  while (std::getline(std::cin, line)) {
    if (die_after >= 0 && served++ >= die_after) return 3;
    const auto request = nlohmann::json::parse(line);
    const auto sentences = request.at("sentences").get<std::vector<std::string>>();
    auto probs = model.PredictProba(sentences);
    if (short_reply && !probs.empty()) probs.pop_back();
    std::cout << nlohmann::json{{"probs", probs}}.dump() << "\n" << std::flush;
  }
  return 0;
}
