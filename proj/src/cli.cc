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

#include "painfacets/cli.h"

#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "painfacets/adapter.h"
#include "painfacets/anchors.h"
#include "painfacets/corpus.h"
#include "painfacets/embeddings.h"
#include "painfacets/error.h"
#include "painfacets/facets.h"
#include "painfacets/json_io.h"
#include "painfacets/metrics.h"
#include "painfacets/service.h"
#include "painfacets/summarizer.h"
#include "painfacets/synthetic.h"
#include "painfacets/workspace.h"

namespace painfacets {

namespace {

struct Options {
  std::string corpus;
  std::string embeddings;
  std::string classifier = "builtin";
  std::string model;
  std::string explanations;
  std::string lexicon;
  std::string out;
  std::string workspace;
  std::string listen = "127.0.0.1:8080";
  std::string doc;
  std::string cohort;
  std::string facets;
  std::string expert_facets;
  std::string ratios = "0.1:0.9:0.1";
  std::string embeddings_out;
  double tau = 0.95;
  std::size_t samples = 100;
  std::size_t beam = 4;
  double p_replace = 0.5;
  std::size_t k_neighbors = 10;
  std::size_t max_samples = 2000;
  double ratio = 1.0;
  std::size_t folds = 4;
  std::uint64_t seed = 42;
  std::size_t n = 50;
  std::size_t threads = 0;
  double learning_rate = 0.1;
  std::size_t epochs = 200;
  std::size_t docs_per_cohort = 20;
  std::size_t sentences_per_doc = 20;
  double plant_rate = 1.0;
};

std::size_t ThreadCount(const Options& o) {
  if (o.threads > 0) return o.threads;
  return std::max(1u, std::thread::hardware_concurrency());
}

Corpus RequireCorpus(const Options& o) {
  if (o.corpus.empty()) throw InvalidArgument("--corpus is required");
  return IngestCorpusFile(o.corpus);
}

EmbeddingTable RequireEmbeddings(const Options& o) {
  if (o.embeddings.empty()) throw InvalidArgument("--embeddings is required");
  return EmbeddingTable::LoadFile(o.embeddings);
}

CohortLabel RequireCohort(const Options& o) {
  auto cohort = ParseCohort(o.cohort);
  if (!cohort) throw InvalidArgument("--cohort must be FM or NP");
  return *cohort;
}

TrainConfig MakeTrainConfig(const Options& o) {
  TrainConfig c;
  c.learning_rate = o.learning_rate;
  c.epochs = o.epochs;
  c.seed = o.seed;
  return c;
}

AnchorConfig MakeAnchorConfig(const Options& o) {
  AnchorConfig c;
  c.tau = o.tau;
  c.n_samples = o.samples;
  c.beam_width = o.beam;
  c.p_replace = o.p_replace;
  c.k_neighbors = o.k_neighbors;
  c.max_samples = o.max_samples;
  c.seed = o.seed;
  c.Validate();
  return c;
}

std::vector<std::string> SplitList(const std::string& text) {
  std::vector<std::string> items;
  std::string item;
  for (char ch : text) {
    if (ch == ',' || std::isspace(static_cast<unsigned char>(ch))) {
      if (!item.empty()) items.push_back(item);
      item.clear();
    } else {
      item.push_back(ch);
    }
  }
  if (!item.empty()) items.push_back(item);
  return items;
}

FacetSet ExpertFacets(const Options& o) {
  if (o.expert_facets.empty()) return {};
  if (o.expert_facets == "default") return DefaultExpertFacets();
  const std::string text = ReadFile(o.expert_facets);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '[') {
    return LoadExpertFacets(Json::parse(text).get<std::vector<std::string>>());
  }
  return LoadExpertFacets(SplitList(text));
}

FacetSet SelectedFacets(const Options& o) { return LoadExpertFacets(SplitList(o.facets)); }

// The cohort lexicon comes from --lexicon (FacetLexicon JSON) or is derived
// from --explanations.
FacetSet LexiconWords(const Options& o, const Corpus& corpus, CohortLabel cohort) {
  if (!o.lexicon.empty()) return FacetLexiconFromJson(Json::parse(ReadFile(o.lexicon))).words();
  if (!o.explanations.empty()) {
    std::ifstream in(o.explanations);
    if (!in) throw Error("cannot open " + o.explanations);
    return CollectFacets(ReadExplanations(in, corpus), cohort).words();
  }
  return {};
}

void Emit(const Options& o, const std::string& payload, const std::string& human, std::ostream& out) {
  if (o.out.empty()) {
    out << payload;
    return;
  }
  WriteFileAtomic(o.out, payload);
  out << human << "\n";
}

std::string Dump(const Json& j) { return j.dump(2) + "\n"; }

std::vector<Sentence> Pick(const Corpus& corpus, std::span<const std::size_t> indices) {
  std::vector<Sentence> picked;
  picked.reserve(indices.size());
  for (std::size_t i : indices) picked.push_back(corpus.sentences()[i]);
  return picked;
}

// Classifier from --model, or trained on the default split for builtin.
std::unique_ptr<Classifier> ObtainClassifier(const Options& o, const Corpus& corpus,
                                             const EmbeddingTable* table) {
  ClassifierSpec spec;
  Json record;
  if (!o.model.empty()) {
    record = Json::parse(ReadFile(o.model));
    spec = ClassifierSpec::Parse(record.at("classifier").get<std::string>());
  } else {
    spec = ClassifierSpec::Parse(o.classifier);
  }
  if (spec.kind != ClassifierSpec::Kind::kBuiltin) return MakeAdapter(spec);
  if (!table) throw InvalidArgument("builtin classifier requires --embeddings");
  if (!record.is_null()) {
    return std::make_unique<BuiltinModel>(record.at("weights").get<std::vector<double>>(), *table);
  }
  SplitSpec split_spec;
  split_spec.seed = o.seed;
  const DatasetSplit split = MakeSplits(corpus, split_spec);
  return std::make_unique<BuiltinModel>(TrainBuiltin(corpus, split.train, *table, MakeTrainConfig(o)));
}

int Ingest(const Options& o, std::ostream& out) {
  const Corpus corpus = RequireCorpus(o);
  Json body;
  if (!o.workspace.empty()) {
    Workspace ws(o.workspace);
    body["corpus_id"] = ws.AddCorpus(corpus);
  }
  body["documents"] = corpus.documents().size();
  body["sentences"] = corpus.sentences().size();
  out << Dump(body);
  return 0;
}

int Synth(const Options& o, std::ostream& out) {
  SyntheticSpec spec = DefaultSyntheticSpec();
  spec.fm_documents = o.docs_per_cohort;
  spec.np_documents = o.docs_per_cohort;
  spec.sentences_per_document = o.sentences_per_doc;
  spec.plant_rate = o.plant_rate;
  const Corpus corpus = GenerateSynthetic(spec, o.seed);
  std::ostringstream jsonl;
  WriteCorpus(corpus, jsonl);
  if (!o.embeddings_out.empty()) {
    std::ostringstream table;
    SyntheticEmbeddings(spec, o.seed).Write(table);
    WriteFileAtomic(o.embeddings_out, table.str());
  }
  Emit(o, jsonl.str(),
       "wrote " + std::to_string(corpus.documents().size()) + " documents, " +
           std::to_string(corpus.sentences().size()) + " sentences",
       out);
  return 0;
}

int Train(const Options& o, std::ostream& out) {
  const Corpus corpus = RequireCorpus(o);
  const ClassifierSpec spec = ClassifierSpec::Parse(o.classifier);
  SplitSpec split_spec;
  split_spec.seed = o.seed;
  const DatasetSplit split = MakeSplits(corpus, split_spec);
  const auto test = Pick(corpus, split.test);
  const TrainConfig config = MakeTrainConfig(o);

  Json record;
  record["classifier"] = spec.ToString();
  record["train"] = {{"learning_rate", config.learning_rate},
                     {"epochs", config.epochs},
                     {"seed", config.seed},
                     {"init_scale", config.init_scale}};
  record["seed"] = o.seed;
  Metrics metrics;
  if (spec.kind == ClassifierSpec::Kind::kBuiltin) {
    const EmbeddingTable table = RequireEmbeddings(o);
    const BuiltinModel model = TrainBuiltin(corpus, split.train, table, config);
    metrics = Evaluate(model, test);
    record["weights"] = model.weights();
  } else {
    metrics = Evaluate(*MakeAdapter(spec), test);
  }
  record["metrics"] = MetricsToJson(metrics);
  std::ostringstream human;
  human << "test AUC " << metrics.auc << ", accuracy " << metrics.accuracy;
  Emit(o, Dump(record), human.str(), out);
  return 0;
}

int EvaluateCmd(const Options& o, std::ostream& out) {
  const Corpus corpus = RequireCorpus(o);
  const ClassifierSpec spec = ClassifierSpec::Parse(o.classifier);
  CvResult cv;
  if (spec.kind == ClassifierSpec::Kind::kBuiltin) {
    const EmbeddingTable table = RequireEmbeddings(o);
    cv = CrossValidate(corpus, o.folds, o.seed, table, MakeTrainConfig(o), ThreadCount(o));
  } else {
    std::shared_ptr<Classifier> adapter = MakeAdapter(spec);
    cv = CrossValidate(corpus, o.folds, o.seed, [adapter](std::span<const Sentence>) {
      struct Borrowed : Classifier {
        std::shared_ptr<Classifier> inner;
        std::vector<double> PredictProba(std::span<const std::string> s) const override {
          return inner->PredictProba(s);
        }
      };
      auto b = std::make_unique<Borrowed>();
      b->inner = adapter;
      return std::unique_ptr<Classifier>(std::move(b));
    });
  }
  std::ostringstream human;
  human << o.folds << "-fold AUC " << cv.mean_auc << " +/- " << cv.std_auc;
  Emit(o, Dump(CvResultToJson(cv)), human.str(), out);
  return 0;
}

int Explain(const Options& o, std::ostream& out) {
  const Corpus corpus = RequireCorpus(o);
  const EmbeddingTable table = RequireEmbeddings(o);
  const auto model = ObtainClassifier(o, corpus, &table);
  const AnchorExplainer explainer(*model, table, MakeAnchorConfig(o));
  const auto explanations = explainer.ExplainBatch(corpus.sentences(), ThreadCount(o));
  std::size_t failed = 0, saturated = 0;
  for (const auto& e : explanations) {
    if (e.failure == Explanation::Failure::kPredictionUnavailable) {
      throw PredictionUnavailable("sentence " + e.sentence.key() + ": " + e.error);
    }
    if (!e.ok()) ++failed;
    else if (e.saturated) ++saturated;
  }
  std::ostringstream jsonl;
  WriteExplanations(explanations, jsonl);
  Emit(o, jsonl.str(),
       std::to_string(explanations.size()) + " explanations, " + std::to_string(saturated) +
           " saturated, " + std::to_string(failed) + " failed",
       out);
  return 0;
}

int Facets(const Options& o, std::ostream& out) {
  const Corpus corpus = RequireCorpus(o);
  const CohortLabel cohort = RequireCohort(o);
  if (o.explanations.empty()) throw InvalidArgument("--explanations is required");
  std::ifstream in(o.explanations);
  if (!in) throw Error("cannot open " + o.explanations);
  const FacetLexicon lexicon = CollectFacets(ReadExplanations(in, corpus), cohort);
  Json body;
  body["cohort"] = CohortName(cohort);
  body["report"] = FacetReportToJson(TopFacets(lexicon, o.n));
  body["lexicon"] = FacetLexiconToJson(lexicon);
  Emit(o, Dump(body), std::to_string(lexicon.entries.size()) + " facets for " + o.cohort, out);
  return 0;
}

int SummarizeCmd(const Options& o, std::ostream& out) {
  const Corpus corpus = RequireCorpus(o);
  SummaryRequest request;
  request.doc_id = o.doc;
  request.ratio = o.ratio;
  request.selected = SelectedFacets(o);
  request.expert = ExpertFacets(o);
  const Document& doc = corpus.document(o.doc);
  const CohortLabel cohort = o.cohort.empty() ? doc.label : RequireCohort(o);
  const SummaryResult result = Summarize(request, corpus, LexiconWords(o, corpus, cohort));
  std::ostringstream human;
  human << "kept " << result.summary.kept.size() << " sentences, FaCov " << result.facov.score
        << ", BLEU " << result.bleu.score;
  Emit(o, Dump(SummaryToJson(request, result)), human.str(), out);
  return 0;
}

int Sweep(const Options& o, std::ostream& out) {
  const Corpus corpus = RequireCorpus(o);
  const CohortLabel cohort = RequireCohort(o);
  std::vector<std::string> doc_ids;
  for (const auto& doc : corpus.documents()) {
    if (doc.label == cohort) doc_ids.push_back(doc.id);
  }
  const auto ratios = ParseRatios(o.ratios);
  const auto rows = RatioSweep(corpus, doc_ids, LexiconWords(o, corpus, cohort), ExpertFacets(o),
                               ratios, SelectedFacets(o), ThreadCount(o));
  Emit(o, Dump(SweepToJson(rows)), std::to_string(rows.size()) + " ratios", out);
  return 0;
}

int Serve(const Options& o, std::ostream& out) {
  ServiceConfig config;
  const auto colon = o.listen.rfind(':');
  if (colon == std::string::npos) throw InvalidArgument("--listen must be host:port");
  config.host = o.listen.substr(0, colon);
  config.port = std::stoi(o.listen.substr(colon + 1));
  config.workspace = o.workspace.empty() ? "workspace" : o.workspace;
  if (!o.embeddings.empty()) config.embeddings_path = o.embeddings;
  const ClassifierSpec spec = ClassifierSpec::Parse(o.classifier);
  if (spec.kind != ClassifierSpec::Kind::kBuiltin) config.default_adapter = spec;
  config.threads = o.threads;
  Service service(config);
  out << "serving on " << o.listen << std::endl;
  service.Run();
  return 0;
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"painfacets: cohort classification, anchors, facets and summaries"};
  app.require_subcommand(1, 1);

  auto corpus = [&](CLI::App* c) { c->add_option("--corpus", o.corpus, "corpus JSONL"); };
  auto embeddings = [&](CLI::App* c) { c->add_option("--embeddings", o.embeddings, "embedding table"); };
  auto classifier = [&](CLI::App* c) {
    c->add_option("--classifier", o.classifier, "builtin | adapter-cmd=... | adapter-url=...");
  };
  auto common = [&](CLI::App* c) {
    c->add_option("--seed", o.seed, "random seed")->capture_default_str();
    c->add_option("--out", o.out, "output path");
    c->add_option("--threads", o.threads, "worker threads (0: all cores)");
  };
  auto training = [&](CLI::App* c) {
    c->add_option("--learning-rate", o.learning_rate)->capture_default_str();
    c->add_option("--epochs", o.epochs)->capture_default_str();
  };
  auto facet_flags = [&](CLI::App* c) {
    c->add_option("--facets", o.facets, "selected facets, comma separated");
    c->add_option("--expert-facets", o.expert_facets, "word list file or \"default\"");
    c->add_option("--cohort", o.cohort, "FM or NP");
    c->add_option("--lexicon", o.lexicon, "facet lexicon JSON");
    c->add_option("--explanations", o.explanations, "explanations JSONL");
  };

  auto* ingest = app.add_subcommand("ingest", "validate a corpus and store it in a workspace");
  corpus(ingest);
  ingest->add_option("--workspace", o.workspace, "store the corpus in this workspace");

  auto* synth = app.add_subcommand("synth", "generate the synthetic planted-keyword corpus");
  common(synth);
  synth->add_option("--embeddings-out", o.embeddings_out, "also write the matching embedding table");
  synth->add_option("--docs-per-cohort", o.docs_per_cohort)->capture_default_str();
  synth->add_option("--sentences-per-doc", o.sentences_per_doc)->capture_default_str();
  synth->add_option("--plant-rate", o.plant_rate)->capture_default_str();

  auto* train = app.add_subcommand("train", "train on the default split and score the test split");
  corpus(train);
  embeddings(train);
  classifier(train);
  common(train);
  training(train);

  auto* evaluate = app.add_subcommand("evaluate", "k-fold cross-validation");
  corpus(evaluate);
  embeddings(evaluate);
  classifier(evaluate);
  common(evaluate);
  training(evaluate);
  evaluate->add_option("--folds", o.folds)->capture_default_str();

  auto* explain = app.add_subcommand("explain", "anchor explanations for every sentence");
  corpus(explain);
  embeddings(explain);
  classifier(explain);
  common(explain);
  training(explain);
  explain->add_option("--model", o.model, "model record from train");
  explain->add_option("--tau", o.tau)->capture_default_str();
  explain->add_option("--samples", o.samples)->capture_default_str();
  explain->add_option("--beam", o.beam)->capture_default_str();
  explain->add_option("--p-replace", o.p_replace)->capture_default_str();
  explain->add_option("--k-neighbors", o.k_neighbors)->capture_default_str();
  explain->add_option("--max-samples", o.max_samples)->capture_default_str();

  auto* facets = app.add_subcommand("facets", "cohort facet lexicon and top-n report");
  corpus(facets);
  common(facets);
  facets->add_option("--explanations", o.explanations, "explanations JSONL");
  facets->add_option("--cohort", o.cohort, "FM or NP");
  facets->add_option("--n", o.n, "facets per part of speech")->capture_default_str();

  auto* summarize = app.add_subcommand("summarize", "facet-filtered extractive summary");
  corpus(summarize);
  common(summarize);
  facet_flags(summarize);
  summarize->add_option("--doc", o.doc, "document id")->required();
  summarize->add_option("--ratio", o.ratio)->capture_default_str();

  auto* sweep = app.add_subcommand("sweep", "mean FaCov and BLEU per compression ratio");
  corpus(sweep);
  common(sweep);
  facet_flags(sweep);
  sweep->add_option("--ratios", o.ratios, "start:end:step or comma list")->capture_default_str();

  auto* serve = app.add_subcommand("serve", "run the HTTP service");
  embeddings(serve);
  classifier(serve);
  serve->add_option("--workspace", o.workspace, "workspace root (default ./workspace)");
  serve->add_option("--listen", o.listen, "host:port")->capture_default_str();
  serve->add_option("--threads", o.threads);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    return 1;
  }

  try {
    if (ingest->parsed()) return Ingest(o, out);
    if (synth->parsed()) return Synth(o, out);
    if (train->parsed()) return Train(o, out);
    if (evaluate->parsed()) return EvaluateCmd(o, out);
    if (explain->parsed()) return Explain(o, out);
    if (facets->parsed()) return Facets(o, out);
    if (summarize->parsed()) return SummarizeCmd(o, out);
    if (sweep->parsed()) return Sweep(o, out);
    if (serve->parsed()) return Serve(o, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}

int RunCli(int argc, const char* const* argv) { return RunCli(argc, argv, std::cout, std::cerr); }

}  // namespace painfacets
