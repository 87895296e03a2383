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

#include "simpeval/remote_backend.h"

#include <thread>
#include <utility>

#include "httplib.h"
#include "json.hpp"
#include "simpeval/error.h"

namespace simpeval {
namespace {

using json = nlohmann::json;

class HttplibTransport : public HttpTransport {
 public:
  explicit HttplibTransport(const std::string& endpoint) {
    const std::size_t scheme = endpoint.find("://");
    const std::size_t host_start = scheme == std::string::npos ? 0 : scheme + 3;
    const std::size_t slash = endpoint.find('/', host_start);
    if (scheme != std::string::npos && endpoint.compare(0, scheme, "http") != 0) {
      throw Error(ErrorCode::kInvalidArgument,
                  "only http:// backend endpoints are supported: " + endpoint);
    }
    base_ = slash == std::string::npos ? endpoint : endpoint.substr(0, slash);
    if (scheme == std::string::npos) base_ = "http://" + base_;
    if (slash != std::string::npos) {
      prefix_ = endpoint.substr(slash);
      while (!prefix_.empty() && prefix_.back() == '/') prefix_.pop_back();
    }
  }

  HttpResult Post(const std::string& path, const std::string& json_body,
                  std::chrono::milliseconds timeout) override {
    httplib::Client client(base_);
    const auto sec = std::chrono::duration_cast<std::chrono::seconds>(timeout);
    const auto usec =
        std::chrono::duration_cast<std::chrono::microseconds>(timeout - sec);
    client.set_connection_timeout(sec.count(), usec.count());
    client.set_read_timeout(sec.count(), usec.count());
    client.set_write_timeout(sec.count(), usec.count());

    const auto start = std::chrono::steady_clock::now();
    httplib::Result res =
        client.Post(prefix_ + path, json_body, "application/json");
    HttpResult out;
    if (!res) {
      const auto elapsed = std::chrono::steady_clock::now() - start;
      const httplib::Error err = res.error();
      out.status = (err == httplib::Error::ConnectionTimeout || elapsed >= timeout)
                       ? HttpResult::Status::kTimeout
                       : HttpResult::Status::kConnectError;
      out.detail = httplib::to_string(err);
      return out;
    }
    out.http_status = res->status;
    out.body = res->body;
    return out;
  }

 private:
  std::string base_;
  std::string prefix_;
};

std::string ServerError(const std::string& body) {
  json doc = json::parse(body, nullptr, /*allow_exceptions=*/false);
  if (doc.is_object() && doc.contains("error") && doc["error"].is_string()) {
    return doc["error"].get<std::string>();
  }
  return body.substr(0, 200);
}

}  // namespace

std::shared_ptr<HttpTransport> MakeHttpTransport(const std::string& endpoint) {
  return std::make_shared<HttplibTransport>(endpoint);
}

BackendResponse RemoteCall(HttpTransport& transport,
                           const BackendRequest& request,
                           std::chrono::milliseconds timeout,
                           const RetryPolicy& retry, const Sleeper& sleep) {
  ValidateRequest(request);
  if (auto trivial = TrivialAnswer(request)) return *trivial;
  const RequestKind kind = KindOf(request);
  const std::string path = EndpointPath(kind);
  const std::string body = RequestBody(request).dump();

  std::chrono::milliseconds delay = retry.backoff_base;
  std::string last_failure;
  bool last_was_timeout = false;
  for (int attempt = 0; attempt <= retry.retries; ++attempt) {
    if (attempt > 0) {
      if (sleep) {
        sleep(delay);
      } else {
        std::this_thread::sleep_for(delay);
      }
      delay = std::chrono::milliseconds(
          static_cast<long>(static_cast<double>(delay.count()) * retry.backoff_factor));
    }
    HttpResult result = transport.Post(path, body, timeout);
    if (result.status != HttpResult::Status::kOk) {
      last_was_timeout = result.status == HttpResult::Status::kTimeout;
      last_failure = result.detail;
      continue;
    }
    if (result.http_status >= 500) {
      last_was_timeout = false;
      last_failure = "HTTP " + std::to_string(result.http_status) + ": " +
                     ServerError(result.body);
      continue;
    }
    if (result.http_status != 200) {
      throw Error(ErrorCode::kProtocol,
                  std::string(RequestKindName(kind)) + " request rejected (HTTP " +
                      std::to_string(result.http_status) +
                      "): " + ServerError(result.body));
    }
    json doc = json::parse(result.body, nullptr, /*allow_exceptions=*/false);
    if (doc.is_discarded()) {
      throw Error(ErrorCode::kProtocol, "backend reply is not JSON");
    }
    BackendResponse response = ParseResponseBody(kind, doc);
    if (const auto* embed = std::get_if<EmbedResponse>(&response)) {
      const auto& texts = std::get<EmbedRequest>(request).texts;
      if (embed->texts.size() != texts.size()) {
        throw Error(ErrorCode::kProtocol,
                    "embed reply covers " + std::to_string(embed->texts.size()) +
                        " texts, request had " + std::to_string(texts.size()));
      }
    }
    return response;
  }
  const std::string summary = std::string(RequestKindName(kind)) + " request failed after " +
                              std::to_string(retry.retries + 1) + " attempt(s): " +
                              last_failure;
  throw Error(last_was_timeout ? ErrorCode::kTimeout : ErrorCode::kTransport, summary);
}

RemoteBackend::RemoteBackend(Options options)
    : RemoteBackend(options, MakeHttpTransport(options.endpoint)) {}

RemoteBackend::RemoteBackend(Options options,
                             std::shared_ptr<HttpTransport> transport,
                             Sleeper sleep)
    : options_(std::move(options)),
      transport_(std::move(transport)),
      sleep_(std::move(sleep)) {}

BackendResponse RemoteBackend::Call(const BackendRequest& request) {
  return RemoteCall(*transport_, request, options_.timeout, options_.retry, sleep_);
}

}  // namespace simpeval
