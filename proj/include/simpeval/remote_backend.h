// Copyright 2026 The Simpeval Authors.
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

// HTTP client for a model server speaking the backend wire protocol.

#ifndef SIMPEVAL_REMOTE_BACKEND_H_
#define SIMPEVAL_REMOTE_BACKEND_H_

#include <chrono>
#include <functional>
#include <memory>
#include <string>

#include "simpeval/backend.h"

namespace simpeval {

struct HttpResult {
  enum class Status { kOk, kConnectError, kTimeout };
  Status status = Status::kOk;
  int http_status = 0;  // valid when status == kOk
  std::string body;
  std::string detail;  // transport failure description
};

class HttpTransport {
 public:
  virtual ~HttpTransport() = default;
  virtual HttpResult Post(const std::string& path, const std::string& json_body,
                          std::chrono::milliseconds timeout) = 0;
};

// cpp-httplib transport for "http://host[:port][/prefix]" endpoints. Opens a
// connection per request, so it is safe to share across threads.
std::shared_ptr<HttpTransport> MakeHttpTransport(const std::string& endpoint);

struct RetryPolicy {
  int retries = 3;  // attempts = retries + 1
  std::chrono::milliseconds backoff_base{100};
  double backoff_factor = 2.0;
};

using Sleeper = std::function<void(std::chrono::milliseconds)>;

// One logical call: validates the request, POSTs it, retries transport
// failures and 5xx replies with exponential backoff, never retries 4xx.
// Throws kTransport or kTimeout once the budget is spent, kProtocol on a
// rejected request or malformed reply.
BackendResponse RemoteCall(HttpTransport& transport,
                           const BackendRequest& request,
                           std::chrono::milliseconds timeout,
                           const RetryPolicy& retry, const Sleeper& sleep = {});

class RemoteBackend : public Backend {
 public:
  struct Options {
    std::string endpoint;
    std::chrono::milliseconds timeout{30000};
    RetryPolicy retry;
  };

  explicit RemoteBackend(Options options);
  RemoteBackend(Options options, std::shared_ptr<HttpTransport> transport,
                Sleeper sleep = {});

  BackendResponse Call(const BackendRequest& request) override;

 private:
  Options options_;
  std::shared_ptr<HttpTransport> transport_;
  Sleeper sleep_;
};

}  // namespace simpeval

#endif  // SIMPEVAL_REMOTE_BACKEND_H_
