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

// Record/replay fixtures for backends.
//
// A fixture file is one JSON document:
//
//   {"format": "simpeval-fixtures/1",
//    "entries": [{"key": <RequestHash>, "request": {...}, "response": {...}}]}
//
// "request" is the request body plus "kind"; "response" is the wire
// response body. "key" may be omitted in hand-written files, in which case it
// is computed from the request. Entries are written sorted by key.

#ifndef SIMPEVAL_FIXTURE_STORE_H_
#define SIMPEVAL_FIXTURE_STORE_H_

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "json.hpp"
#include "simpeval/backend.h"

namespace simpeval {

struct FixtureEntry {
  nlohmann::json request;
  nlohmann::json response;
};

class FixtureStore {
 public:
  FixtureStore() = default;

  // Throws kIo or kCorruptStore (bad JSON, duplicate or mismatched keys,
  // responses that fail protocol validation).
  static FixtureStore Load(const std::filesystem::path& path);
  static FixtureStore Parse(std::string_view text, std::string_view origin);

  // Overwrites atomically (write to a sibling temp file, then rename).
  void Save(const std::filesystem::path& path) const;
  std::string Serialize() const;

  void Put(const BackendRequest& request, const BackendResponse& response);
  // Throws kFixtureMiss naming the request hash.
  BackendResponse Get(const BackendRequest& request) const;
  bool Contains(const BackendRequest& request) const;

  const std::map<std::string, FixtureEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

 private:
  std::map<std::string, FixtureEntry> entries_;
};

// Pure lookup against a loaded store. Immutable, so safe to share.
class ReplayBackend : public Backend {
 public:
  explicit ReplayBackend(FixtureStore store) : store_(std::move(store)) {}
  static std::unique_ptr<ReplayBackend> Open(const std::filesystem::path& path);

  BackendResponse Call(const BackendRequest& request) override;

 private:
  const FixtureStore store_;
};

// Forwards every call to `inner` and writes the exchange through to
// `store_path`. Existing entries in the file are kept.
class RecordingBackend : public Backend {
 public:
  RecordingBackend(std::shared_ptr<Backend> inner,
                   std::filesystem::path store_path);

  BackendResponse Call(const BackendRequest& request) override;

 private:
  std::shared_ptr<Backend> inner_;
  std::filesystem::path store_path_;
  std::mutex mu_;
  FixtureStore store_;
};

}  // namespace simpeval

#endif  // SIMPEVAL_FIXTURE_STORE_H_
