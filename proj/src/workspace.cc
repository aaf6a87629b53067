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

#include "painfacets/workspace.h"

#include <atomic>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "painfacets/error.h"

namespace painfacets {

namespace fs = std::filesystem;

namespace {

bool ValidId(std::string_view id) {
  if (id.empty() || id.size() > 128) return false;
  for (char c : id) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_')) return false;
  }
  return true;
}

}  // namespace

void WriteFileAtomic(const fs::path& path, std::string_view content) {
  static std::atomic<unsigned> counter{0};
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  const fs::path tmp = path.string() + ".tmp." + std::to_string(::getpid()) + "." +
                       std::to_string(counter++);
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + tmp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) throw Error("short write to " + tmp.string());
  }
  fs::rename(tmp, path);
}

std::string ReadFile(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw NotFound("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Workspace::Workspace(fs::path root) : root_(std::move(root)) {
  for (const char* kind : {"corpora", "models", "explanations", "facets", "expert"}) {
    fs::create_directories(root_ / kind);
  }
  // Resume id counters past anything already on disk.
  for (const auto& [kind, prefix] : {std::pair{"corpora", "c"}, std::pair{"models", "m"},
                                     std::pair{"expert", "e"}}) {
    int max_seen = 0;
    for (const auto& entry : fs::directory_iterator(root_ / kind)) {
      const std::string stem = entry.path().stem().string();
      const std::string want = std::string(prefix) + "-";
      if (stem.starts_with(want)) {
        try {
          max_seen = std::max(max_seen, std::stoi(stem.substr(want.size())));
        } catch (const std::exception&) {
        }
      }
    }
    counters_[kind] = max_seen;
  }
}

fs::path Workspace::Path(std::string_view kind, std::string_view name) const {
  return root_ / kind / name;
}

std::string Workspace::NextId(std::string_view kind, std::string_view prefix) {
  std::lock_guard<std::mutex> lock(mu_);
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%s-%04d", std::string(prefix).c_str(),
                ++counters_[std::string(kind)]);
  return buf;
}

std::string Workspace::AddCorpus(const Corpus& corpus) {
  const std::string id = NextId("corpora", "c");
  std::ostringstream out;
  WriteCorpus(corpus, out);
  WriteFileAtomic(Path("corpora", id + ".jsonl"), out.str());
  std::lock_guard<std::mutex> lock(mu_);
  corpus_cache_[id] = std::make_shared<const Corpus>(corpus);
  return id;
}

bool Workspace::HasCorpus(std::string_view id) const {
  return ValidId(id) && fs::exists(Path("corpora", std::string(id) + ".jsonl"));
}

std::shared_ptr<const Corpus> Workspace::LoadCorpus(std::string_view id) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    if (auto it = corpus_cache_.find(id); it != corpus_cache_.end()) return it->second;
  }
  if (!HasCorpus(id)) throw NotFound("unknown corpus '" + std::string(id) + "'");
  std::istringstream in(ReadFile(Path("corpora", std::string(id) + ".jsonl")));
  auto corpus = std::make_shared<const Corpus>(IngestCorpus(in));
  std::lock_guard<std::mutex> lock(mu_);
  corpus_cache_.emplace(std::string(id), corpus);
  return corpus;
}

std::string Workspace::NewModelId() { return NextId("models", "m"); }

bool Workspace::HasModel(std::string_view id) const {
  return ValidId(id) && fs::exists(Path("models", std::string(id) + ".json"));
}

void Workspace::SaveModel(std::string_view id, const Json& record) {
  WriteFileAtomic(Path("models", std::string(id) + ".json"), record.dump(2));
}

Json Workspace::LoadModel(std::string_view id) const {
  if (!HasModel(id)) throw NotFound("unknown model '" + std::string(id) + "'");
  return Json::parse(ReadFile(Path("models", std::string(id) + ".json")));
}

void Workspace::SaveExplanations(std::string_view corpus_id,
                                 std::span<const Explanation> explanations,
                                 const FacetLexicon& fm, const FacetLexicon& np) {
  std::ostringstream batch;
  WriteExplanations(explanations, batch);
  const std::string id(corpus_id);
  // Stage everything first so a failure leaves the previous artifacts intact.
  struct Staged {
    fs::path tmp, final;
  };
  std::vector<Staged> staged = {
      {Path("explanations", id + ".jsonl.staged"), Path("explanations", id + ".jsonl")},
      {Path("facets", id + ".FM.json.staged"), Path("facets", id + ".FM.json")},
      {Path("facets", id + ".NP.json.staged"), Path("facets", id + ".NP.json")}};
  try {
    WriteFileAtomic(staged[0].tmp, batch.str());
    WriteFileAtomic(staged[1].tmp, FacetLexiconToJson(fm).dump(2));
    WriteFileAtomic(staged[2].tmp, FacetLexiconToJson(np).dump(2));
  } catch (...) {
    for (const auto& s : staged) fs::remove(s.tmp);
    throw;
  }
  std::lock_guard<std::mutex> lock(mu_);
  for (const auto& s : staged) fs::rename(s.tmp, s.final);
}

std::optional<FacetLexicon> Workspace::LoadLexicon(std::string_view corpus_id,
                                                   CohortLabel cohort) const {
  const fs::path p =
      Path("facets", std::string(corpus_id) + "." + std::string(CohortName(cohort)) + ".json");
  std::lock_guard<std::mutex> lock(mu_);
  if (!ValidId(corpus_id) || !fs::exists(p)) return std::nullopt;
  return FacetLexiconFromJson(Json::parse(ReadFile(p)));
}

std::vector<Explanation> Workspace::LoadExplanations(std::string_view corpus_id) const {
  const auto corpus = LoadCorpus(corpus_id);
  const fs::path p = Path("explanations", std::string(corpus_id) + ".jsonl");
  std::string content;
  {
    std::lock_guard<std::mutex> lock(mu_);
    if (!fs::exists(p)) return {};
    content = ReadFile(p);
  }
  std::istringstream in(content);
  return ReadExplanations(in, *corpus);
}

std::string Workspace::AddExpertSet(const FacetSet& facets) {
  const std::string id = NextId("expert", "e");
  Json j;
  j["expert_facet_set_id"] = id;
  j["facets"] = FacetSetToJson(facets);
  WriteFileAtomic(Path("expert", id + ".json"), j.dump(2));
  return id;
}

FacetSet Workspace::LoadExpertSet(std::string_view id) const {
  const fs::path p = Path("expert", std::string(id) + ".json");
  if (!ValidId(id) || !fs::exists(p)) throw NotFound("unknown expert facet set '" + std::string(id) + "'");
  return FacetSetFromJson(Json::parse(ReadFile(p)).at("facets"));
}

}  // namespace painfacets
