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

#include "painfacets/service.h"

#include <algorithm>
#include <sstream>

#include <httplib.h>

#include "painfacets/anchors.h"
#include "painfacets/error.h"
#include "painfacets/metrics.h"
#include "painfacets/summarizer.h"

namespace painfacets {

namespace {

constexpr std::size_t kExplainChunk = 64;

void Reply(httplib::Response& res, int status, const Json& body) {
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

void ReplyError(httplib::Response& res, int status, const std::string& message) {
  Json body;
  body["error"] = message;
  Reply(res, status, body);
}

// Parses a request body as a JSON object, replying 400 on failure.
std::optional<Json> ParseBody(const httplib::Request& req, httplib::Response& res) {
  try {
    Json body = Json::parse(req.body);
    if (body.is_object()) return body;
  } catch (const nlohmann::json::exception&) {
  }
  ReplyError(res, 400, "request body must be a JSON object");
  return std::nullopt;
}

std::optional<CohortLabel> CohortParam(const httplib::Request& req, const char* name) {
  if (!req.has_param(name)) return std::nullopt;
  auto cohort = ParseCohort(req.get_param_value(name));
  if (!cohort) throw InvalidArgument(std::string(name) + " must be FM or NP");
  return cohort;
}

AnchorConfig AnchorConfigFromJson(const Json& j) {
  AnchorConfig c;
  if (!j.is_object()) return c;
  if (j.contains("tau")) c.tau = j["tau"].get<double>();
  if (j.contains("n_samples")) c.n_samples = j["n_samples"].get<std::size_t>();
  if (j.contains("p_replace")) c.p_replace = j["p_replace"].get<double>();
  if (j.contains("k_neighbors")) c.k_neighbors = j["k_neighbors"].get<std::size_t>();
  if (j.contains("beam_width")) c.beam_width = j["beam_width"].get<std::size_t>();
  if (j.contains("max_anchor_size") && !j["max_anchor_size"].is_null()) {
    c.max_anchor_size = j["max_anchor_size"].get<std::size_t>();
  }
  if (j.contains("confidence_delta")) c.confidence_delta = j["confidence_delta"].get<double>();
  if (j.contains("max_samples")) c.max_samples = j["max_samples"].get<std::size_t>();
  if (j.contains("seed")) c.seed = j["seed"].get<std::uint64_t>();
  c.Validate();
  return c;
}

TrainConfig TrainConfigFromJson(const Json& j) {
  TrainConfig c;
  if (!j.is_object()) return c;
  if (j.contains("learning_rate")) c.learning_rate = j["learning_rate"].get<double>();
  if (j.contains("epochs")) c.epochs = j["epochs"].get<std::size_t>();
  if (j.contains("seed")) c.seed = j["seed"].get<std::uint64_t>();
  if (j.contains("init_scale")) c.init_scale = j["init_scale"].get<double>();
  if (!(c.learning_rate > 0.0)) throw InvalidArgument("learning_rate must be positive");
  return c;
}

Json TrainConfigToJson(const TrainConfig& c) {
  Json j;
  j["learning_rate"] = c.learning_rate;
  j["epochs"] = c.epochs;
  j["seed"] = c.seed;
  j["init_scale"] = c.init_scale;
  return j;
}

// Borrowed view so one adapter instance can serve every CV fold.
class SharedClassifier : public Classifier {
 public:
  explicit SharedClassifier(const Classifier& inner) : inner_(inner) {}
  std::vector<double> PredictProba(std::span<const std::string> s) const override {
    return inner_.PredictProba(s);
  }

 private:
  const Classifier& inner_;
};

}  // namespace

std::string_view JobStateName(JobState state) {
  switch (state) {
    case JobState::kPending:
      return "pending";
    case JobState::kRunning:
      return "running";
    case JobState::kDone:
      return "done";
    case JobState::kFailed:
      break;
  }
  return "failed";
}

Json JobStatusToJson(const JobStatus& status) {
  Json j;
  j["job_id"] = status.job_id;
  j["kind"] = status.kind;
  j["resource_id"] = status.resource_id;
  j["state"] = JobStateName(status.state);
  j["progress"] = status.progress;
  if (status.state == JobState::kFailed) j["error"] = status.error;
  return j;
}

Service::Service(ServiceConfig config)
    : config_(std::move(config)),
      workspace_(config_.workspace),
      server_(std::make_unique<httplib::Server>()) {
  if (config_.embeddings_path) {
    embeddings_ = std::make_unique<EmbeddingTable>(EmbeddingTable::LoadFile(*config_.embeddings_path));
  }
  Routes();
}

Service::~Service() {
  Stop();
  WaitForJobs();
}

std::size_t Service::Threads() const {
  if (config_.threads > 0) return config_.threads;
  return std::max(1u, std::thread::hardware_concurrency());
}

int Service::Start() {
  int port = config_.port;
  if (port == 0) {
    port = server_->bind_to_any_port(config_.host);
  } else if (!server_->bind_to_port(config_.host, port)) {
    port = -1;
  }
  if (port < 0) throw Error("cannot bind " + config_.host + ":" + std::to_string(config_.port));
  server_thread_ = std::thread([this] { server_->listen_after_bind(); });
  server_->wait_until_ready();
  return port;
}

void Service::Run() {
  if (!server_->listen(config_.host, config_.port)) {
    throw Error("cannot listen on " + config_.host + ":" + std::to_string(config_.port));
  }
}

void Service::Stop() {
  if (server_) server_->stop();
  if (server_thread_.joinable()) server_thread_.join();
}

std::optional<JobStatus> Service::Job(const std::string& job_id) const {
  std::lock_guard<std::mutex> lock(jobs_mu_);
  auto it = jobs_.find(job_id);
  if (it == jobs_.end()) return std::nullopt;
  return it->second;
}

void Service::WaitForJobs() {
  std::vector<std::thread> workers;
  {
    std::lock_guard<std::mutex> lock(jobs_mu_);
    workers.swap(workers_);
  }
  for (auto& w : workers) w.join();
}

std::shared_ptr<std::mutex> Service::ResourceLock(const std::string& resource_id) {
  std::lock_guard<std::mutex> lock(jobs_mu_);
  auto& slot = resource_locks_[resource_id];
  if (!slot) slot = std::make_shared<std::mutex>();
  return slot;
}

void Service::Update(const std::string& job_id, const std::function<void(JobStatus&)>& fn) {
  std::lock_guard<std::mutex> lock(jobs_mu_);
  fn(jobs_.at(job_id));
}

std::string Service::Submit(std::string kind, std::string resource_id,
                            std::function<void(const Progress&)> work) {
  auto resource_lock = ResourceLock(kind + ":" + resource_id);
  std::string job_id;
  {
    std::lock_guard<std::mutex> lock(jobs_mu_);
    char buf[32];
    std::snprintf(buf, sizeof(buf), "j-%04d", ++job_counter_);
    job_id = buf;
    JobStatus status;
    status.job_id = job_id;
    status.kind = kind;
    status.resource_id = resource_id;
    jobs_[job_id] = status;
    workers_.emplace_back([this, job_id, resource_lock, work = std::move(work)] {
      std::lock_guard<std::mutex> serialize(*resource_lock);
      Update(job_id, [](JobStatus& s) { s.state = JobState::kRunning; });
      const Progress progress = [this, &job_id](double p) {
        Update(job_id, [p](JobStatus& s) { s.progress = p; });
      };
      try {
        work(progress);
        Update(job_id, [](JobStatus& s) {
          s.state = JobState::kDone;
          s.progress = 1.0;
        });
      } catch (const ProtocolViolation& e) {
        Update(job_id, [&](JobStatus& s) {
          s.state = JobState::kFailed;
          s.error = std::string("adapter protocol violation: ") + e.what();
        });
      } catch (const std::exception& e) {
        Update(job_id, [&](JobStatus& s) {
          s.state = JobState::kFailed;
          s.error = e.what();
        });
      }
    });
  }
  return job_id;
}

std::unique_ptr<Classifier> Service::LoadClassifier(const Json& record) const {
  const auto spec = ClassifierSpec::Parse(record.at("classifier").get<std::string>());
  if (spec.kind != ClassifierSpec::Kind::kBuiltin) return MakeAdapter(spec);
  if (!embeddings_) throw InvalidArgument("builtin model requires an embedding table");
  return std::make_unique<BuiltinModel>(record.at("weights").get<std::vector<double>>(),
                                        *embeddings_);
}

void Service::Routes() {
  auto& s = *server_;

  // Maps library exceptions onto status codes.
  auto guarded = [](auto handler) {
    return [handler](const httplib::Request& req, httplib::Response& res) {
      try {
        handler(req, res);
      } catch (const NotFound& e) {
        ReplyError(res, 404, e.what());
      } catch (const ParseError& e) {
        ReplyError(res, 400, e.what());
      } catch (const InvalidArgument& e) {
        ReplyError(res, 422, e.what());
      } catch (const nlohmann::json::exception& e) {
        ReplyError(res, 400, e.what());
      } catch (const std::logic_error& e) {
        ReplyError(res, 400, e.what());
      } catch (const std::exception& e) {
        ReplyError(res, 500, e.what());
      }
    };
  };

  s.Get("/health", [](const httplib::Request&, httplib::Response& res) {
    Reply(res, 200, Json{{"status", "ok"}});
  });

  s.Post("/corpora", guarded([this](const httplib::Request& req, httplib::Response& res) {
    std::istringstream in(req.body);
    const Corpus corpus = IngestCorpus(in);
    const std::string id = workspace_.AddCorpus(corpus);
    Json body;
    body["corpus_id"] = id;
    body["documents"] = corpus.documents().size();
    body["sentences"] = corpus.sentences().size();
    Reply(res, 201, body);
  }));

  s.Get(R"(/corpora/([^/]+))",
        guarded([this](const httplib::Request& req, httplib::Response& res) {
          const auto corpus = workspace_.LoadCorpus(req.matches[1].str());
          Json body;
          body["corpus_id"] = req.matches[1].str();
          body["documents"] = Json::array();
          for (const auto& doc : corpus->documents()) {
            Json d;
            d["id"] = doc.id;
            d["label"] = CohortName(doc.label);
            d["sentences"] = Json::array();
            for (const auto& sentence : corpus->sentences_of(doc.id)) {
              d["sentences"].push_back(sentence.text);
            }
            body["documents"].push_back(std::move(d));
          }
          Reply(res, 200, body);
        }));

  s.Get(R"(/jobs/([^/]+))", guarded([this](const httplib::Request& req, httplib::Response& res) {
          auto job = Job(req.matches[1].str());
          if (!job) throw NotFound("unknown job '" + req.matches[1].str() + "'");
          Reply(res, 200, JobStatusToJson(*job));
        }));

  s.Post("/models", guarded([this](const httplib::Request& req, httplib::Response& res) {
    auto body = ParseBody(req, res);
    if (!body) return;
    const std::string corpus_id = body->value("corpus_id", "");
    if (!workspace_.HasCorpus(corpus_id)) throw NotFound("unknown corpus '" + corpus_id + "'");

    ClassifierSpec spec;
    const std::string classifier = body->value("classifier", "builtin");
    if (classifier == "adapter") {
      if (!config_.default_adapter) throw InvalidArgument("no default adapter configured");
      spec = *config_.default_adapter;
    } else {
      spec = ClassifierSpec::Parse(classifier);
    }
    if (spec.kind == ClassifierSpec::Kind::kBuiltin && !embeddings_) {
      throw InvalidArgument("builtin classifier requires the service to load embeddings");
    }
    const TrainConfig train = TrainConfigFromJson(body->value("train", Json::object()));
    const std::size_t folds = body->value("folds", std::size_t{4});
    const std::uint64_t split_seed = body->value("seed", std::uint64_t{42});
    const std::string model_id = workspace_.NewModelId();

    const std::string job_id = Submit(
        "train", model_id, [=, this](const Progress& progress) {
          const auto corpus = workspace_.LoadCorpus(corpus_id);
          SplitSpec split_spec;
          split_spec.seed = split_seed;
          const DatasetSplit split = MakeSplits(*corpus, split_spec);
          std::vector<Sentence> test;
          for (std::size_t i : split.test) test.push_back(corpus->sentences()[i]);

          Json record;
          record["model_id"] = model_id;
          record["corpus_id"] = corpus_id;
          record["classifier"] = spec.ToString();
          record["train"] = TrainConfigToJson(train);
          record["seed"] = split_seed;
          record["folds"] = folds;
          Metrics metrics;
          CvResult cv;
          if (spec.kind == ClassifierSpec::Kind::kBuiltin) {
            const BuiltinModel model = TrainBuiltin(*corpus, split.train, *embeddings_, train);
            progress(0.25);
            metrics = Evaluate(model, test);
            cv = CrossValidate(*corpus, folds, split_seed, *embeddings_, train, Threads());
            record["weights"] = model.weights();
          } else {
            const auto adapter = MakeAdapter(spec);
            metrics = Evaluate(*adapter, test);
            progress(0.25);
            const Classifier& shared = *adapter;
            cv = CrossValidate(*corpus, folds, split_seed,
                               [&shared](std::span<const Sentence>) -> std::unique_ptr<Classifier> {
                                 return std::make_unique<SharedClassifier>(shared);
                               });
          }
          progress(0.9);
          record["metrics"] = MetricsToJson(metrics);
          record["cv"] = CvResultToJson(cv);
          workspace_.SaveModel(model_id, record);
        });
    Json reply = JobStatusToJson(*Job(job_id));
    reply["model_id"] = model_id;
    Reply(res, 202, reply);
  }));

  s.Get(R"(/models/([^/]+)/metrics)",
        guarded([this](const httplib::Request& req, httplib::Response& res) {
          const std::string model_id = req.matches[1].str();
          if (workspace_.HasModel(model_id)) {
            const Json record = workspace_.LoadModel(model_id);
            Json body;
            body["model_id"] = model_id;
            body["corpus_id"] = record["corpus_id"];
            body["classifier"] = record["classifier"];
            body["metrics"] = record["metrics"];
            body["cv"] = record["cv"];
            Reply(res, 200, body);
            return;
          }
          std::optional<JobStatus> job;
          {
            std::lock_guard<std::mutex> lock(jobs_mu_);
            for (const auto& [id, status] : jobs_) {
              if (status.kind == "train" && status.resource_id == model_id) job = status;
            }
          }
          if (!job) throw NotFound("unknown model '" + model_id + "'");
          if (job->state == JobState::kFailed) {
            ReplyError(res, 409, "model training failed: " + job->error);
          } else {
            ReplyError(res, 409, "model '" + model_id + "' is not ready");
          }
        }));

  s.Post("/explanations", guarded([this](const httplib::Request& req, httplib::Response& res) {
    auto body = ParseBody(req, res);
    if (!body) return;
    const std::string model_id = body->value("model_id", "");
    if (!workspace_.HasModel(model_id)) throw NotFound("unknown or unfinished model '" + model_id + "'");
    const Json record = workspace_.LoadModel(model_id);
    const std::string corpus_id = body->value("corpus_id", record["corpus_id"].get<std::string>());
    if (!workspace_.HasCorpus(corpus_id)) throw NotFound("unknown corpus '" + corpus_id + "'");
    if (!embeddings_) throw InvalidArgument("explanations require the service to load embeddings");
    const AnchorConfig config = AnchorConfigFromJson(body->value("anchor", *body));
    auto model = std::shared_ptr<Classifier>(LoadClassifier(record));

    const std::string job_id =
        Submit("explain", corpus_id, [=, this](const Progress& progress) {
          const auto corpus = workspace_.LoadCorpus(corpus_id);
          const AnchorExplainer explainer(*model, *embeddings_, config);
          const auto& sentences = corpus->sentences();
          std::vector<Explanation> all;
          all.reserve(sentences.size());
          for (std::size_t first = 0; first < sentences.size(); first += kExplainChunk) {
            const std::size_t count = std::min(kExplainChunk, sentences.size() - first);
            auto part = explainer.ExplainBatch(
                std::span<const Sentence>(sentences).subspan(first, count), Threads());
            for (auto& e : part) {
              if (e.failure == Explanation::Failure::kPredictionUnavailable) {
                throw PredictionUnavailable("sentence " + e.sentence.key() + ": " + e.error);
              }
              all.push_back(std::move(e));
            }
            progress(static_cast<double>(first + count) / static_cast<double>(sentences.size()));
          }
          workspace_.SaveExplanations(corpus_id, all, CollectFacets(all, CohortLabel::kFM),
                                      CollectFacets(all, CohortLabel::kNP));
        });
    Json reply = JobStatusToJson(*Job(job_id));
    reply["corpus_id"] = corpus_id;
    Reply(res, 202, reply);
  }));

  s.Get(R"(/facets/([^/]+))", guarded([this](const httplib::Request& req, httplib::Response& res) {
          const std::string corpus_id = req.matches[1].str();
          if (!workspace_.HasCorpus(corpus_id)) throw NotFound("unknown corpus '" + corpus_id + "'");
          const auto cohort = CohortParam(req, "cohort");
          if (!cohort) throw InvalidArgument("cohort is required");
          std::size_t n = 50;
          if (req.has_param("n")) n = std::stoul(req.get_param_value("n"));
          FacetLexicon lexicon;
          lexicon.cohort = *cohort;
          if (auto stored = workspace_.LoadLexicon(corpus_id, *cohort)) lexicon = *stored;
          Json body;
          body["corpus_id"] = corpus_id;
          body["cohort"] = CohortName(*cohort);
          body["report"] = FacetReportToJson(TopFacets(lexicon, n));
          body["lexicon"] = FacetLexiconToJson(lexicon);
          Reply(res, 200, body);
        }));

  s.Post("/expert-facets", guarded([this](const httplib::Request& req, httplib::Response& res) {
    auto body = ParseBody(req, res);
    if (!body) return;
    if (!body->contains("facets") || !(*body)["facets"].is_array()) {
      throw InvalidArgument("facets must be a list of words");
    }
    const auto words = (*body)["facets"].get<std::vector<std::string>>();
    const FacetSet facets = LoadExpertFacets(words);
    const std::string id = workspace_.AddExpertSet(facets);
    Json reply;
    reply["expert_set_id"] = id;
    reply["facets"] = FacetSetToJson(facets);
    Reply(res, 201, reply);
  }));

  s.Get(R"(/expert-facets/([^/]+))",
        guarded([this](const httplib::Request& req, httplib::Response& res) {
          const std::string id = req.matches[1].str();
          const FacetSet facets = id == "default" ? DefaultExpertFacets() : workspace_.LoadExpertSet(id);
          Json reply;
          reply["expert_set_id"] = id;
          reply["facets"] = FacetSetToJson(facets);
          Reply(res, 200, reply);
        }));

  // "default", a stored set id, an inline list, or absent (empty).
  auto expert_from = [this](const Json& value) -> FacetSet {
    if (value.is_null()) return {};
    if (value.is_array()) return LoadExpertFacets(value.get<std::vector<std::string>>());
    const std::string id = value.get<std::string>();
    if (id.empty()) return {};
    if (id == "default") return DefaultExpertFacets();
    return workspace_.LoadExpertSet(id);
  };

  auto lexicon_for = [this](const std::string& corpus_id, CohortLabel cohort) -> FacetSet {
    auto stored = workspace_.LoadLexicon(corpus_id, cohort);
    return stored ? stored->words() : FacetSet{};
  };

  s.Post("/summaries", guarded([this, expert_from, lexicon_for](const httplib::Request& req,
                                                                httplib::Response& res) {
    auto body = ParseBody(req, res);
    if (!body) return;
    const std::string corpus_id = body->value("corpus_id", "");
    const auto corpus = workspace_.LoadCorpus(corpus_id);
    SummaryRequest request;
    request.doc_id = body->value("doc_id", "");
    const Document& doc = corpus->document(request.doc_id);
    request.ratio = body->value("ratio", 1.0);
    CohortLabel cohort = doc.label;
    if (body->contains("cohort")) {
      auto parsed = ParseCohort((*body)["cohort"].get<std::string>());
      if (!parsed) throw InvalidArgument("cohort must be FM or NP");
      cohort = *parsed;
    }
    if (body->contains("selected_facets")) {
      request.selected = FacetSetFromJson((*body)["selected_facets"]);
    }
    request.expert = expert_from(body->value("expert_facets", Json()));
    if (body->contains("expert_facet_set_id")) {
      const FacetSet stored = expert_from((*body)["expert_facet_set_id"]);
      request.expert.insert(stored.begin(), stored.end());
    }
    const SummaryResult result = Summarize(request, *corpus, lexicon_for(corpus_id, cohort));
    Reply(res, 200, SummaryToJson(request, result));
  }));

  s.Get("/summaries/sweep", guarded([this, expert_from, lexicon_for](const httplib::Request& req,
                                                                     httplib::Response& res) {
    const std::string corpus_id = req.get_param_value("corpus_id");
    const auto corpus = workspace_.LoadCorpus(corpus_id);
    const auto cohort = CohortParam(req, "cohort");
    if (!cohort) throw InvalidArgument("cohort is required");
    const std::vector<double> ratios = req.has_param("ratios")
                                           ? ParseRatios(req.get_param_value("ratios"))
                                           : DefaultSweepRatios();
    FacetSet selected;
    if (req.has_param("facets")) {
      std::vector<std::string> words;
      std::istringstream in(req.get_param_value("facets"));
      for (std::string w; std::getline(in, w, ',');) words.push_back(w);
      selected = LoadExpertFacets(words);
    }
    const FacetSet expert =
        req.has_param("expert") ? expert_from(Json(req.get_param_value("expert"))) : FacetSet{};
    std::vector<std::string> doc_ids;
    for (const auto& doc : corpus->documents()) {
      if (doc.label == *cohort) doc_ids.push_back(doc.id);
    }
    const auto rows = RatioSweep(*corpus, doc_ids, lexicon_for(corpus_id, *cohort), expert, ratios,
                                 selected, Threads());
    Json body;
    body["corpus_id"] = corpus_id;
    body["cohort"] = CohortName(*cohort);
    body["rows"] = SweepToJson(rows);
    Reply(res, 200, body);
  }));
}

}  // namespace painfacets
