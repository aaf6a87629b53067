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

#include "painfacets/adapter.h"

#include <fcntl.h>
#include <signal.h>
#include <sys/types.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <cmath>
#include <cstring>

#include <httplib.h>
#include <json.hpp>

#include "painfacets/error.h"

namespace painfacets {

std::string EncodeAdapterRequest(std::span<const std::string> sentences) {
  nlohmann::json body;
  body["sentences"] = nlohmann::json::array();
  for (const auto& s : sentences) body["sentences"].push_back(s);
  return body.dump();
}

std::vector<double> DecodeAdapterResponse(std::string_view body, std::size_t expected) {
  nlohmann::json parsed;
  try {
    parsed = nlohmann::json::parse(body);
  } catch (const nlohmann::json::parse_error& e) {
    throw ProtocolViolation(std::string("adapter response is not JSON: ") + e.what());
  }
  if (!parsed.is_object() || !parsed.contains("probs") || !parsed["probs"].is_array()) {
    throw ProtocolViolation("adapter response lacks a \"probs\" array");
  }
  const auto& probs = parsed["probs"];
  if (probs.size() != expected) {
    throw ProtocolViolation("adapter returned " + std::to_string(probs.size()) +
                            " probabilities for " + std::to_string(expected) + " sentences");
  }
  std::vector<double> out;
  out.reserve(expected);
  for (const auto& p : probs) {
    if (!p.is_number()) throw ProtocolViolation("adapter probability is not a number");
    const double v = p.get<double>();
    if (!(v >= 0.0 && v <= 1.0)) {
      throw ProtocolViolation("adapter probability " + p.dump() + " outside [0,1]");
    }
    out.push_back(v);
  }
  return out;
}

ProcessAdapter::ProcessAdapter(std::string command) : command_(std::move(command)) {
  // A dead child must surface as an error from write(), not kill us.
  ::signal(SIGPIPE, SIG_IGN);
  int in_pipe[2];
  int out_pipe[2];
  if (::pipe(in_pipe) != 0) throw PredictionUnavailable("pipe() failed");
  if (::pipe(out_pipe) != 0) {
    ::close(in_pipe[0]);
    ::close(in_pipe[1]);
    throw PredictionUnavailable("pipe() failed");
  }
  const pid_t pid = ::fork();
  if (pid < 0) {
    for (int fd : {in_pipe[0], in_pipe[1], out_pipe[0], out_pipe[1]}) ::close(fd);
    throw PredictionUnavailable("fork() failed");
  }
  if (pid == 0) {
    ::dup2(in_pipe[0], STDIN_FILENO);
    ::dup2(out_pipe[1], STDOUT_FILENO);
    for (int fd : {in_pipe[0], in_pipe[1], out_pipe[0], out_pipe[1]}) ::close(fd);
    ::execl("/bin/sh", "sh", "-c", command_.c_str(), static_cast<char*>(nullptr));
    ::_exit(127);
  }
  ::close(in_pipe[0]);
  ::close(out_pipe[1]);
  ::fcntl(in_pipe[1], F_SETFD, FD_CLOEXEC);
  ::fcntl(out_pipe[0], F_SETFD, FD_CLOEXEC);
  pid_ = pid;
  to_child_ = in_pipe[1];
  from_child_ = ::fdopen(out_pipe[0], "r");
}

ProcessAdapter::~ProcessAdapter() { Close(); }

void ProcessAdapter::Close() const {
  if (to_child_ >= 0) {
    ::close(to_child_);
    to_child_ = -1;
  }
  if (from_child_ != nullptr) {
    std::fclose(from_child_);
    from_child_ = nullptr;
  }
  if (pid_ > 0) {
    int status = 0;
    ::waitpid(pid_, &status, 0);
    pid_ = -1;
  }
}

std::vector<double> ProcessAdapter::PredictProba(std::span<const std::string> sentences) const {
  if (sentences.empty()) return {};
  std::lock_guard<std::mutex> lock(mu_);
  if (to_child_ < 0 || from_child_ == nullptr) {
    throw PredictionUnavailable("adapter process '" + command_ + "' is not running");
  }
  std::string request = EncodeAdapterRequest(sentences);
  request += '\n';
  std::size_t written = 0;
  while (written < request.size()) {
    const ssize_t n = ::write(to_child_, request.data() + written, request.size() - written);
    if (n < 0) {
      if (errno == EINTR) continue;
      Close();
      throw PredictionUnavailable("adapter process '" + command_ +
                                  "' closed its input: " + std::strerror(errno));
    }
    written += static_cast<std::size_t>(n);
  }
  std::string line;
  char buf[4096];
  while (std::fgets(buf, sizeof(buf), from_child_) != nullptr) {
    line += buf;
    if (!line.empty() && line.back() == '\n') break;
  }
  if (line.empty()) {
    Close();
    throw PredictionUnavailable("adapter process '" + command_ + "' produced no response");
  }
  return DecodeAdapterResponse(line, sentences.size());
}

HttpAdapter::HttpAdapter(std::string url, int timeout_seconds)
    : timeout_seconds_(timeout_seconds) {
  const auto scheme_end = url.find("://");
  if (scheme_end == std::string::npos) throw InvalidArgument("adapter URL lacks a scheme: " + url);
  const auto path_start = url.find('/', scheme_end + 3);
  origin_ = url.substr(0, path_start);
  path_ = path_start == std::string::npos ? "/" : url.substr(path_start);
}

std::vector<double> HttpAdapter::PredictProba(std::span<const std::string> sentences) const {
  if (sentences.empty()) return {};
  httplib::Client client(origin_);
  client.set_connection_timeout(timeout_seconds_, 0);
  client.set_read_timeout(timeout_seconds_, 0);
  auto res = client.Post(path_, EncodeAdapterRequest(sentences), "application/json");
  if (!res) {
    throw PredictionUnavailable("adapter at " + origin_ + path_ +
                                " unreachable: " + httplib::to_string(res.error()));
  }
  if (res->status != 200) {
    throw PredictionUnavailable("adapter at " + origin_ + path_ + " answered HTTP " +
                                std::to_string(res->status));
  }
  return DecodeAdapterResponse(res->body, sentences.size());
}

ClassifierSpec ClassifierSpec::Parse(std::string_view text) {
  constexpr std::string_view kCmd = "adapter-cmd=";
  constexpr std::string_view kUrl = "adapter-url=";
  ClassifierSpec spec;
  if (text == "builtin") return spec;
  if (text.starts_with(kCmd) && text.size() > kCmd.size()) {
    spec.kind = Kind::kCommand;
    spec.target = std::string(text.substr(kCmd.size()));
    return spec;
  }
  if (text.starts_with(kUrl) && text.size() > kUrl.size()) {
    spec.kind = Kind::kUrl;
    spec.target = std::string(text.substr(kUrl.size()));
    return spec;
  }
  throw InvalidArgument("classifier must be builtin, adapter-cmd=... or adapter-url=...: '" +
                        std::string(text) + "'");
}

std::string ClassifierSpec::ToString() const {
  switch (kind) {
    case Kind::kCommand:
      return "adapter-cmd=" + target;
    case Kind::kUrl:
      return "adapter-url=" + target;
    case Kind::kBuiltin:
      break;
  }
  return "builtin";
}

std::unique_ptr<Classifier> MakeAdapter(const ClassifierSpec& spec) {
  switch (spec.kind) {
    case ClassifierSpec::Kind::kCommand:
      return std::make_unique<ProcessAdapter>(spec.target);
    case ClassifierSpec::Kind::kUrl:
      return std::make_unique<HttpAdapter>(spec.target);
    case ClassifierSpec::Kind::kBuiltin:
      break;
  }
  throw InvalidArgument("builtin classifier is not an adapter");
}

}  // namespace painfacets
