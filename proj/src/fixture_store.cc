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

#include "simpeval/fixture_store.h"

#include <fstream>
#include <sstream>
#include <system_error>

#include "simpeval/error.h"

namespace simpeval {
namespace {

using json = nlohmann::json;

constexpr char kFormat[] = "simpeval-fixtures/1";

[[noreturn]] void Corrupt(std::string_view origin, const std::string& what) {
  throw Error(ErrorCode::kCorruptStore,
              "corrupt fixture store " + std::string(origin) + ": " + what);
}

}  // namespace

FixtureStore FixtureStore::Load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open fixture store " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return Parse(buf.str(), path.string());
}

FixtureStore FixtureStore::Parse(std::string_view text, std::string_view origin) {
  json doc = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded() || !doc.is_object()) Corrupt(origin, "not a JSON object");
  if (doc.value("format", "") != kFormat) Corrupt(origin, "unknown format tag");
  auto entries = doc.find("entries");
  if (entries == doc.end() || !entries->is_array()) Corrupt(origin, "missing entries");

  FixtureStore store;
  std::size_t index = 0;
  for (const json& e : *entries) {
    const std::string where = "entry " + std::to_string(index++);
    if (!e.is_object() || !e.contains("request") || !e.contains("response")) {
      Corrupt(origin, where + " needs request and response");
    }
    BackendRequest request;
    BackendResponse response;
    try {
      request = RequestFromJson(e["request"]);
      response = ParseResponseBody(KindOf(request), e["response"]);
    } catch (const Error& err) {
      Corrupt(origin, where + ": " + err.what());
    }
    const std::string key = RequestHash(request);
    if (e.contains("key") && e["key"] != key) {
      Corrupt(origin, where + " key does not match its request hash " + key);
    }
    if (store.entries_.count(key)) Corrupt(origin, "duplicate key " + key);
    store.Put(request, response);
  }
  return store;
}

std::string FixtureStore::Serialize() const {
  json entries = json::array();
  for (const auto& [key, entry] : entries_) {
    entries.push_back(
        {{"key", key}, {"request", entry.request}, {"response", entry.response}});
  }
  return json{{"format", kFormat}, {"entries", entries}}.dump(1) + "\n";
}

void FixtureStore::Save(const std::filesystem::path& path) const {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::kIo, "cannot write " + tmp.string());
    out << Serialize();
    if (!out.flush()) throw Error(ErrorCode::kIo, "write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw Error(ErrorCode::kIo, "cannot replace " + path.string() + ": " + ec.message());
}

void FixtureStore::Put(const BackendRequest& request,
                       const BackendResponse& response) {
  entries_[RequestHash(request)] =
      FixtureEntry{json::parse(CanonicalRequest(request)), ResponseBody(response)};
}

BackendResponse FixtureStore::Get(const BackendRequest& request) const {
  const std::string key = RequestHash(request);
  auto it = entries_.find(key);
  if (it == entries_.end()) {
    throw Error(ErrorCode::kFixtureMiss,
                "fixture miss for " + std::string(RequestKindName(KindOf(request))) +
                    " request " + key);
  }
  return ParseResponseBody(KindOf(request), it->second.response);
}

bool FixtureStore::Contains(const BackendRequest& request) const {
  return entries_.count(RequestHash(request)) > 0;
}

std::unique_ptr<ReplayBackend> ReplayBackend::Open(
    const std::filesystem::path& path) {
  return std::make_unique<ReplayBackend>(FixtureStore::Load(path));
}

BackendResponse ReplayBackend::Call(const BackendRequest& request) {
  ValidateRequest(request);
  if (auto trivial = TrivialAnswer(request)) return *trivial;
  return store_.Get(request);
}

RecordingBackend::RecordingBackend(std::shared_ptr<Backend> inner,
                                   std::filesystem::path store_path)
    : inner_(std::move(inner)), store_path_(std::move(store_path)) {
  if (std::filesystem::exists(store_path_)) {
    store_ = FixtureStore::Load(store_path_);
  }
}

BackendResponse RecordingBackend::Call(const BackendRequest& request) {
  ValidateRequest(request);
  if (auto trivial = TrivialAnswer(request)) return *trivial;
  BackendResponse response = inner_->Call(request);
  std::lock_guard<std::mutex> lock(mu_);
  store_.Put(request, response);
  store_.Save(store_path_);
  return response;
}

}  // namespace simpeval
