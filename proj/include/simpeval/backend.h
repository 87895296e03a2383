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

// Boundary between metric logic and model inference.
//
// A Backend answers three kinds of request: token embedding, question
// generation and question answering. Implementations must tolerate
// concurrent Call()s.

#ifndef SIMPEVAL_BACKEND_H_
#define SIMPEVAL_BACKEND_H_

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "json.hpp"
#include "simpeval/token_embeddings.h"

namespace simpeval {

enum class RequestKind { kEmbed, kQg, kQa };

std::string_view RequestKindName(RequestKind kind);

struct EmbedRequest {
  std::vector<std::string> texts;
};

struct QgRequest {
  std::string text;
  int max_questions = 1;
};

struct QaRequest {
  std::string question;
  std::string context;
};

using BackendRequest = std::variant<EmbedRequest, QgRequest, QaRequest>;

struct EmbedResponse {
  std::vector<TokenEmbeddings> texts;
};

struct QgResponse {
  std::vector<std::string> questions;
};

struct QaResponse {
  std::string answer;
  bool unanswerable = false;
};

using BackendResponse = std::variant<EmbedResponse, QgResponse, QaResponse>;

RequestKind KindOf(const BackendRequest& request);
RequestKind KindOf(const BackendResponse& response);

// Throws kInvalidArgument on empty texts or max_questions < 1. A QA request
// may carry a blank context (see TrivialAnswer).
void ValidateRequest(const BackendRequest& request);

// HTTP path of the wire endpoint, e.g. "/embed".
std::string EndpointPath(RequestKind kind);

// Wire bodies (see README for the protocol).
nlohmann::json RequestBody(const BackendRequest& request);
nlohmann::json ResponseBody(const BackendResponse& response);

// Validates shape and invariants; throws kProtocol on any violation.
BackendResponse ParseResponseBody(RequestKind kind, const nlohmann::json& body);

// Request body plus a "kind" field; inverse of RequestFromJson.
nlohmann::json RequestToJson(const BackendRequest& request);
// Throws kParse on malformed input.
BackendRequest RequestFromJson(const nlohmann::json& doc);

// Serialization with sorted keys and whitespace runs in strings collapsed to
// one space (trimmed). Two requests that differ only in key order or
// whitespace canonicalize identically.
std::string CanonicalRequest(const BackendRequest& request);

// 64-bit FNV-1a of CanonicalRequest, as 16 lowercase hex digits.
std::string RequestHash(const BackendRequest& request);

// Any question asked against a blank context is unanswerable; backends
// return this without consulting a model.
std::optional<QaResponse> TrivialAnswer(const BackendRequest& request);

class Backend {
 public:
  virtual ~Backend() = default;

  // Throws Error; kind of the response always matches the request.
  virtual BackendResponse Call(const BackendRequest& request) = 0;
};

// Typed wrappers. Each checks the response kind (kProtocol otherwise).
TokenEmbeddings EmbedText(Backend& backend, std::string_view text);
std::vector<std::string> GenerateQuestions(Backend& backend,
                                           std::string_view text,
                                           int max_questions);
// A blank context is unanswerable without consulting the backend.
QaResponse AnswerQuestion(Backend& backend, std::string_view question,
                          std::string_view context);

}  // namespace simpeval

#endif  // SIMPEVAL_BACKEND_H_
