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

#include "simpeval/backend.h"

#include <cmath>
#include <cstdint>
#include <cstdio>

#include "simpeval/error.h"

namespace simpeval {
namespace {

using json = nlohmann::json;

bool IsSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

std::string NormalizeWhitespace(std::string_view s) {
  std::string out;
  bool pending_space = false;
  for (char c : s) {
    if (IsSpace(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    out.push_back(c);
  }
  return out;
}

bool Blank(std::string_view s) {
  for (char c : s) {
    if (!IsSpace(c)) return false;
  }
  return true;
}

json Canonicalize(const json& value) {
  if (value.is_string()) return NormalizeWhitespace(value.get<std::string>());
  if (value.is_array()) {
    json out = json::array();
    for (const json& v : value) out.push_back(Canonicalize(v));
    return out;
  }
  if (value.is_object()) {
    json out = json::object();
    for (const auto& [k, v] : value.items()) out[k] = Canonicalize(v);
    return out;
  }
  return value;
}

[[noreturn]] void Protocol(const std::string& what) {
  throw Error(ErrorCode::kProtocol, "malformed backend response: " + what);
}

const json& Field(const json& body, const char* name) {
  if (!body.is_object()) Protocol("body is not an object");
  auto it = body.find(name);
  if (it == body.end()) Protocol(std::string("missing '") + name + "'");
  return *it;
}

EmbedResponse ParseEmbed(const json& body) {
  const json& tokens = Field(body, "tokens");
  const json& vectors = Field(body, "vectors");
  const json& dim = Field(body, "dim");
  if (!tokens.is_array() || !vectors.is_array()) Protocol("tokens/vectors must be arrays");
  if (!dim.is_number_integer() || dim.get<long>() < 1) Protocol("dim must be a positive integer");
  if (tokens.size() != vectors.size()) Protocol("tokens and vectors differ in text count");
  const std::size_t d = dim.get<std::size_t>();
  EmbedResponse out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const json& toks = tokens[i];
    const json& vecs = vectors[i];
    if (!toks.is_array() || !vecs.is_array()) Protocol("per-text entries must be arrays");
    if (toks.size() != vecs.size()) {
      Protocol("text " + std::to_string(i) + " has " + std::to_string(toks.size()) +
               " tokens but " + std::to_string(vecs.size()) + " vectors");
    }
    if (toks.empty()) Protocol("text " + std::to_string(i) + " has no tokens");
    TokenEmbeddings te;
    for (std::size_t j = 0; j < toks.size(); ++j) {
      if (!toks[j].is_string()) Protocol("tokens must be strings");
      const json& vec = vecs[j];
      if (!vec.is_array() || vec.size() != d) Protocol("vector dimension differs from dim");
      std::vector<double> v;
      v.reserve(d);
      for (const json& x : vec) {
        if (!x.is_number()) Protocol("vector components must be numbers");
        double value = x.get<double>();
        if (!std::isfinite(value)) Protocol("vector components must be finite");
        v.push_back(value);
      }
      te.tokens.push_back(toks[j].get<std::string>());
      te.vectors.push_back(std::move(v));
    }
    out.texts.push_back(std::move(te));
  }
  return out;
}

QgResponse ParseQg(const json& body) {
  const json& questions = Field(body, "questions");
  if (!questions.is_array()) Protocol("questions must be an array");
  QgResponse out;
  for (const json& q : questions) {
    if (!q.is_string()) Protocol("questions must be strings");
    out.questions.push_back(q.get<std::string>());
  }
  return out;
}

QaResponse ParseQa(const json& body) {
  const json& answer = Field(body, "answer");
  const json& unanswerable = Field(body, "unanswerable");
  if (!answer.is_string()) Protocol("answer must be a string");
  if (!unanswerable.is_boolean()) Protocol("unanswerable must be a boolean");
  return QaResponse{answer.get<std::string>(), unanswerable.get<bool>()};
}

template <typename T>
const T& Expect(const BackendResponse& response) {
  if (const T* v = std::get_if<T>(&response)) return *v;
  throw Error(ErrorCode::kProtocol, "backend returned a " +
                                        std::string(RequestKindName(KindOf(response))) +
                                        " response to a different request kind");
}

}  // namespace

std::string_view RequestKindName(RequestKind kind) {
  switch (kind) {
    case RequestKind::kEmbed: return "embed";
    case RequestKind::kQg: return "qg";
    case RequestKind::kQa: return "qa";
  }
  return "unknown";
}

RequestKind KindOf(const BackendRequest& request) {
  return static_cast<RequestKind>(request.index());
}

RequestKind KindOf(const BackendResponse& response) {
  return static_cast<RequestKind>(response.index());
}

void ValidateRequest(const BackendRequest& request) {
  auto fail = [](const std::string& what) {
    throw Error(ErrorCode::kInvalidArgument, "invalid backend request: " + what);
  };
  if (const auto* r = std::get_if<EmbedRequest>(&request)) {
    if (r->texts.empty()) fail("embed needs at least one text");
    for (const auto& t : r->texts) {
      if (Blank(t)) fail("embed texts must be non-empty");
    }
  } else if (const auto* r = std::get_if<QgRequest>(&request)) {
    if (Blank(r->text)) fail("qg text must be non-empty");
    if (r->max_questions < 1) fail("max_questions must be >= 1");
  } else if (const auto* r = std::get_if<QaRequest>(&request)) {
    if (Blank(r->question)) fail("qa question must be non-empty");
  }
}

std::string EndpointPath(RequestKind kind) {
  return "/" + std::string(RequestKindName(kind));
}

json RequestBody(const BackendRequest& request) {
  if (const auto* r = std::get_if<EmbedRequest>(&request)) {
    return json{{"texts", r->texts}};
  }
  if (const auto* r = std::get_if<QgRequest>(&request)) {
    return json{{"text", r->text}, {"max_questions", r->max_questions}};
  }
  const auto& r = std::get<QaRequest>(request);
  return json{{"question", r.question}, {"context", r.context}};
}

json ResponseBody(const BackendResponse& response) {
  if (const auto* r = std::get_if<EmbedResponse>(&response)) {
    json tokens = json::array(), vectors = json::array();
    std::size_t dim = 0;
    for (const TokenEmbeddings& te : r->texts) {
      tokens.push_back(te.tokens);
      vectors.push_back(te.vectors);
      if (dim == 0) dim = te.dim();
    }
    return json{{"tokens", tokens}, {"vectors", vectors}, {"dim", dim}};
  }
  if (const auto* r = std::get_if<QgResponse>(&response)) {
    return json{{"questions", r->questions}};
  }
  const auto& r = std::get<QaResponse>(response);
  return json{{"answer", r.answer}, {"unanswerable", r.unanswerable}};
}

BackendResponse ParseResponseBody(RequestKind kind, const json& body) {
  switch (kind) {
    case RequestKind::kEmbed: return ParseEmbed(body);
    case RequestKind::kQg: return ParseQg(body);
    case RequestKind::kQa: return ParseQa(body);
  }
  Protocol("unknown request kind");
}

json RequestToJson(const BackendRequest& request) {
  json doc = RequestBody(request);
  doc["kind"] = std::string(RequestKindName(KindOf(request)));
  return doc;
}

BackendRequest RequestFromJson(const json& doc) {
  auto fail = [](const std::string& what) -> BackendRequest {
    throw Error(ErrorCode::kParse, "malformed backend request: " + what);
  };
  if (!doc.is_object() || !doc.contains("kind") || !doc["kind"].is_string()) {
    return fail("missing kind");
  }
  const std::string kind = doc["kind"].get<std::string>();
  try {
    if (kind == "embed") {
      return EmbedRequest{doc.at("texts").get<std::vector<std::string>>()};
    }
    if (kind == "qg") {
      return QgRequest{doc.at("text").get<std::string>(),
                       doc.at("max_questions").get<int>()};
    }
    if (kind == "qa") {
      return QaRequest{doc.at("question").get<std::string>(),
                       doc.at("context").get<std::string>()};
    }
  } catch (const json::exception& e) {
    return fail(e.what());
  }
  return fail("unknown kind '" + kind + "'");
}

std::string CanonicalRequest(const BackendRequest& request) {
  // nlohmann::json objects are key-sorted, so dump() is order-canonical.
  return Canonicalize(RequestToJson(request)).dump();
}

std::string RequestHash(const BackendRequest& request) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : CanonicalRequest(request)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::optional<QaResponse> TrivialAnswer(const BackendRequest& request) {
  const auto* qa = std::get_if<QaRequest>(&request);
  if (qa && Blank(qa->context)) return QaResponse{"", true};
  return std::nullopt;
}

TokenEmbeddings EmbedText(Backend& backend, std::string_view text) {
  BackendResponse response = backend.Call(EmbedRequest{{std::string(text)}});
  const auto& embed = Expect<EmbedResponse>(response);
  if (embed.texts.size() != 1) {
    throw Error(ErrorCode::kProtocol, "embed response has " +
                                          std::to_string(embed.texts.size()) +
                                          " texts, expected 1");
  }
  return embed.texts.front();
}

std::vector<std::string> GenerateQuestions(Backend& backend,
                                           std::string_view text,
                                           int max_questions) {
  BackendResponse response =
      backend.Call(QgRequest{std::string(text), max_questions});
  return Expect<QgResponse>(response).questions;
}

QaResponse AnswerQuestion(Backend& backend, std::string_view question,
                          std::string_view context) {
  QaRequest request{std::string(question), std::string(context)};
  if (auto trivial = TrivialAnswer(request)) return *trivial;
  BackendResponse response = backend.Call(request);
  return Expect<QaResponse>(response);
}

}  // namespace simpeval
