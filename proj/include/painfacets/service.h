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

#ifndef PAINFACETS_SERVICE_H_
#define PAINFACETS_SERVICE_H_

#include <cstddef>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "painfacets/adapter.h"
#include "painfacets/embeddings.h"
#include "painfacets/json_io.h"
#include "painfacets/workspace.h"

namespace httplib {
class Server;
}

namespace painfacets {

struct ServiceConfig {
  std::string host = "127.0.0.1";
  int port = 8080;  // 0 binds an ephemeral port
  std::filesystem::path workspace = "workspace";
  std::optional<std::string> embeddings_path;
  // Used when a request asks for classifier "adapter" without a target.
  std::optional<ClassifierSpec> default_adapter;
  std::size_t threads = 0;  // 0: hardware concurrency
};

enum class JobState { kPending, kRunning, kDone, kFailed };
std::string_view JobStateName(JobState state);

struct JobStatus {
  std::string job_id;
  std::string kind;         // "train" or "explain"
  std::string resource_id;  // model id or corpus id
  JobState state = JobState::kPending;
  double progress = 0.0;
  std::string error;
};

Json JobStatusToJson(const JobStatus& status);

// HTTP/JSON front end over a Workspace. Training and explanation run as
// background jobs (at most one running per resource id); everything else
// answers synchronously.
class Service {
 public:
  explicit Service(ServiceConfig config);
  ~Service();
  Service(const Service&) = delete;
  Service& operator=(const Service&) = delete;

  // Binds and serves on a background thread. Returns the bound port.
  int Start();
  // Blocks serving on the calling thread.
  void Run();
  void Stop();

  std::optional<JobStatus> Job(const std::string& job_id) const;
  // Blocks until every submitted job has finished.
  void WaitForJobs();

  Workspace& workspace() { return workspace_; }
  const EmbeddingTable* embeddings() const { return embeddings_.get(); }

 private:
  void Routes();
  using Progress = std::function<void(double)>;
  std::string Submit(std::string kind, std::string resource_id,
                     std::function<void(const Progress&)> work);
  void Update(const std::string& job_id, const std::function<void(JobStatus&)>& fn);
  std::shared_ptr<std::mutex> ResourceLock(const std::string& resource_id);
  std::unique_ptr<Classifier> LoadClassifier(const Json& model_record) const;
  std::size_t Threads() const;

  ServiceConfig config_;
  Workspace workspace_;
  std::unique_ptr<EmbeddingTable> embeddings_;
  std::unique_ptr<httplib::Server> server_;
  std::thread server_thread_;

  mutable std::mutex jobs_mu_;
  std::map<std::string, JobStatus> jobs_;
  std::map<std::string, std::shared_ptr<std::mutex>> resource_locks_;
  std::vector<std::thread> workers_;
  int job_counter_ = 0;
};

}  // namespace painfacets

#endif  // PAINFACETS_SERVICE_H_
