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

#ifndef PAINFACETS_WORKSPACE_H_
#define PAINFACETS_WORKSPACE_H_

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "painfacets/anchors.h"
#include "painfacets/corpus.h"
#include "painfacets/facets.h"
#include "painfacets/json_io.h"

namespace painfacets {

// Writes `content` to a sibling temp file and renames it over `path`.
void WriteFileAtomic(const std::filesystem::path& path, std::string_view content);
std::string ReadFile(const std::filesystem::path& path);

// File-per-artifact store under a root directory:
//   corpora/<id>.jsonl            corpus records
//   models/<id>.json              model record (config, weights, metrics)
//   explanations/<corpus>.jsonl   latest explanation batch for a corpus
//   facets/<corpus>.<FM|NP>.json  cohort lexicons derived from that batch
//   expert/<id>.json              expert facet sets
// Thread-safe. Ids are "<prefix>-<n>" with n counting up per kind.
class Workspace {
 public:
  explicit Workspace(std::filesystem::path root);

  const std::filesystem::path& root() const { return root_; }

  std::string AddCorpus(const Corpus& corpus);
  bool HasCorpus(std::string_view id) const;
  // Throws NotFound. Loaded corpora are cached.
  std::shared_ptr<const Corpus> LoadCorpus(std::string_view id) const;

  std::string NewModelId();
  bool HasModel(std::string_view id) const;
  void SaveModel(std::string_view id, const Json& record);
  Json LoadModel(std::string_view id) const;

  // Persists the batch and both lexicons; either all become visible or none.
  void SaveExplanations(std::string_view corpus_id, std::span<const Explanation> explanations,
                        const FacetLexicon& fm, const FacetLexicon& np);
  std::optional<FacetLexicon> LoadLexicon(std::string_view corpus_id, CohortLabel cohort) const;
  std::vector<Explanation> LoadExplanations(std::string_view corpus_id) const;

  std::string AddExpertSet(const FacetSet& facets);
  FacetSet LoadExpertSet(std::string_view id) const;

 private:
  std::filesystem::path Path(std::string_view kind, std::string_view name) const;
  std::string NextId(std::string_view kind, std::string_view prefix);

  std::filesystem::path root_;
  mutable std::mutex mu_;
  std::map<std::string, int, std::less<>> counters_;
  mutable std::map<std::string, std::shared_ptr<const Corpus>, std::less<>> corpus_cache_;
};

}  // namespace painfacets

#endif  // PAINFACETS_WORKSPACE_H_
