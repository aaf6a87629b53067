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

#ifndef PAINFACETS_ADAPTER_H_
#define PAINFACETS_ADAPTER_H_

#include <cstdio>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "painfacets/classifier.h"

namespace painfacets {

// Wire format shared by both transports:
//   request  {"sentences": [string, ...]}
//   response {"probs": [number, ...]}   probs[i] = P(FM) in [0,1]
std::string EncodeAdapterRequest(std::span<const std::string> sentences);
// Throws ProtocolViolation on malformed JSON, wrong length, a non-number or
// an out-of-range probability.
std::vector<double> DecodeAdapterResponse(std::string_view body, std::size_t expected);

// Spawns `/bin/sh -c command` and exchanges one request line and one
// response line per PredictProba call over the child's stdin/stdout.
// Calls are serialized. The child is closed and reaped on destruction.
class ProcessAdapter : public Classifier {
 public:
  explicit ProcessAdapter(std::string command);
  ~ProcessAdapter() override;
  ProcessAdapter(const ProcessAdapter&) = delete;
  ProcessAdapter& operator=(const ProcessAdapter&) = delete;

  std::vector<double> PredictProba(std::span<const std::string> sentences) const override;

 private:
  void Close() const;

  std::string command_;
  mutable std::mutex mu_;
  mutable int pid_ = -1;
  mutable int to_child_ = -1;
  mutable std::FILE* from_child_ = nullptr;
};

// POSTs the request body to `url` (http://host[:port]/path).
class HttpAdapter : public Classifier {
 public:
  explicit HttpAdapter(std::string url, int timeout_seconds = 30);

  std::vector<double> PredictProba(std::span<const std::string> sentences) const override;

 private:
  std::string origin_;
  std::string path_;
  int timeout_seconds_;
};

// "builtin", "adapter-cmd=<command>" or "adapter-url=<url>".
struct ClassifierSpec {
  enum class Kind { kBuiltin, kCommand, kUrl };
  Kind kind = Kind::kBuiltin;
  std::string target;

  // Throws InvalidArgument.
  static ClassifierSpec Parse(std::string_view text);
  std::string ToString() const;
};

// Builds an adapter for kCommand/kUrl specs. Throws InvalidArgument for
// kBuiltin, which needs a trained model instead.
std::unique_ptr<Classifier> MakeAdapter(const ClassifierSpec& spec);

}  // namespace painfacets

#endif  // PAINFACETS_ADAPTER_H_
