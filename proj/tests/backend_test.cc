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

#include <chrono>
#include <memory>
#include <string>
#include <thread>
#include <vector>

#include "gtest/gtest.h"
#include "httplib.h"
#include "json.hpp"
#include "simpeval/backend.h"
#include "simpeval/error.h"
#include "simpeval/fixture_store.h"
#include "simpeval/remote_backend.h"
#include "support/local_server.h"
#include "support/test_support.h"

namespace simpeval {
namespace {

using json = nlohmann::json;
using std::chrono::milliseconds;
using testing_support::CountingBackend;
using testing_support::LocalServer;
using testing_support::ReadText;
using testing_support::ScratchDir;
using testing_support::SyntheticBackend;
using testing_support::WriteText;

template <typename Fn>
ErrorCode CodeOf(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::kInvalidArgument;
}

TEST(RequestHashTest, CanonicalUnderWhitespace) {
  EXPECT_EQ(RequestHash(QaRequest{"Who  is\tthere?", " the\ncontext "}),
            RequestHash(QaRequest{"Who is there?", "the context"}));
  EXPECT_NE(RequestHash(QaRequest{"Who?", "a"}), RequestHash(QaRequest{"Who?", "b"}));
  EXPECT_NE(RequestHash(QgRequest{"text", 1}), RequestHash(QgRequest{"text", 2}));
  EXPECT_EQ(RequestHash(EmbedRequest{{"x"}}).size(), 16u);
}

TEST(RequestHashTest, CanonicalFormSortsKeys) {
  EXPECT_EQ(CanonicalRequest(QaRequest{"q", "c"}),
            R"({"context":"c","kind":"qa","question":"q"})");
}

TEST(RequestJsonTest, RoundTrip) {
  std::vector<BackendRequest> requests = {EmbedRequest{{"a", "b"}}, QgRequest{"t", 3},
                                          QaRequest{"q", "c"}};
  for (const auto& r : requests) {
    EXPECT_EQ(RequestHash(RequestFromJson(RequestToJson(r))), RequestHash(r));
  }
  EXPECT_EQ(CodeOf([] { RequestFromJson(json{{"kind", "summarize"}}); }), ErrorCode::kParse);
}

TEST(ValidateRequestTest, RejectsEmptyInputs) {
  EXPECT_EQ(CodeOf([] { ValidateRequest(EmbedRequest{}); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(CodeOf([] { ValidateRequest(EmbedRequest{{" "}}); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(CodeOf([] { ValidateRequest(QgRequest{"", 1}); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(CodeOf([] { ValidateRequest(QgRequest{"x", 0}); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(CodeOf([] { ValidateRequest(QaRequest{"", "c"}); }), ErrorCode::kInvalidArgument);
  ValidateRequest(QaRequest{"q", ""});  // blank context is answered locally
}

TEST(TrivialAnswerTest, BlankContextIsUnanswerable) {
  auto a = TrivialAnswer(QaRequest{"What?", "  "});
  ASSERT_TRUE(a.has_value());
  EXPECT_TRUE(a->unanswerable);
  EXPECT_FALSE(TrivialAnswer(QaRequest{"What?", "x"}).has_value());
  EXPECT_FALSE(TrivialAnswer(QgRequest{"x", 1}).has_value());
}

TEST(ParseResponseTest, ProtocolViolations) {
  auto bad = [](RequestKind k, const char* body) {
    return CodeOf([&] { ParseResponseBody(k, json::parse(body)); });
  };
  EXPECT_EQ(bad(RequestKind::kEmbed, R"({"tokens":[["a"]],"vectors":[[[1,2]]],"dim":3})"),
            ErrorCode::kProtocol);
  EXPECT_EQ(bad(RequestKind::kEmbed, R"({"tokens":[["a","b"]],"vectors":[[[1]]],"dim":1})"),
            ErrorCode::kProtocol);
  EXPECT_EQ(bad(RequestKind::kEmbed, R"({"tokens":[[]],"vectors":[[]],"dim":1})"),
            ErrorCode::kProtocol);
  EXPECT_EQ(bad(RequestKind::kQg, R"({"questions":"q?"})"), ErrorCode::kProtocol);
  EXPECT_EQ(bad(RequestKind::kQa, R"({"answer":"x"})"), ErrorCode::kProtocol);
  EXPECT_EQ(bad(RequestKind::kQa, R"({"answer":"x","unanswerable":"no"})"), ErrorCode::kProtocol);
  auto ok = ParseResponseBody(RequestKind::kQa, json::parse(R"({"answer":"","unanswerable":true})"));
  EXPECT_TRUE(std::get<QaResponse>(ok).unanswerable);
}

TEST(ResponseBodyTest, RoundTrip) {
  EmbedResponse e{{TokenEmbeddings{{"a", "b"}, {{1, 0}, {0.5, 0.25}}}}};
  auto back = ParseResponseBody(RequestKind::kEmbed, ResponseBody(e));
  EXPECT_EQ(std::get<EmbedResponse>(back).texts, e.texts);
}

TEST(FixtureStoreTest, PutGetAndMiss) {
  FixtureStore store;
  store.Put(QaRequest{"q", "c"}, QaResponse{"a", false});
  EXPECT_TRUE(store.Contains(QaRequest{"q", " c "}));
  EXPECT_EQ(std::get<QaResponse>(store.Get(QaRequest{"q", "c"})).answer, "a");
  EXPECT_EQ(CodeOf([&] { store.Get(QaRequest{"q", "other"}); }), ErrorCode::kFixtureMiss);
}

TEST(FixtureStoreTest, SaveLoadRoundTripIsByteStable) {
  ScratchDir dir;
  FixtureStore store;
  store.Put(QgRequest{"text", 2}, QgResponse{{"A?", "B?"}});
  store.Put(EmbedRequest{{"x y"}}, EmbedResponse{{TokenEmbeddings{{"x", "y"}, {{1}, {2}}}}});
  store.Save(dir / "f.json");
  FixtureStore back = FixtureStore::Load(dir / "f.json");
  EXPECT_EQ(back.size(), 2u);
  EXPECT_EQ(back.Serialize(), ReadText(dir / "f.json"));
  EXPECT_FALSE(std::filesystem::exists(dir / "f.json.tmp"));
}

TEST(FixtureStoreTest, KeylessEntriesLoad) {
  auto store = FixtureStore::Parse(
      R"({"format":"simpeval-fixtures/1","entries":[
          {"request":{"kind":"qa","question":"q","context":"c"},
           "response":{"answer":"a","unanswerable":false}}]})",
      "inline");
  EXPECT_TRUE(store.Contains(QaRequest{"q", "c"}));
}

TEST(FixtureStoreTest, CorruptStores) {
  auto parse = [](const std::string& text) {
    return CodeOf([&] { FixtureStore::Parse(text, "inline"); });
  };
  const std::string entry =
      R"({"request":{"kind":"qa","question":"q","context":"c"},"response":{"answer":"a","unanswerable":false}})";
  EXPECT_EQ(parse("not json"), ErrorCode::kCorruptStore);
  EXPECT_EQ(parse(R"({"format":"other","entries":[]})"), ErrorCode::kCorruptStore);
  EXPECT_EQ(parse(R"({"format":"simpeval-fixtures/1","entries":[)" + entry + "," + entry + "]}"),
            ErrorCode::kCorruptStore);
  EXPECT_EQ(parse(R"({"format":"simpeval-fixtures/1","entries":[{"key":"0000000000000000",)" +
                  entry.substr(1) + "]}"),
            ErrorCode::kCorruptStore);
  EXPECT_EQ(parse(R"({"format":"simpeval-fixtures/1","entries":[{"request":{"kind":"qa","question":"q","context":"c"},"response":{"questions":[]}}]})"),
            ErrorCode::kCorruptStore);
  EXPECT_EQ(CodeOf([] { FixtureStore::Load("/nonexistent/fixtures.json"); }), ErrorCode::kIo);
}

TEST(ReplayBackendTest, BlankContextNeedsNoFixture) {
  ReplayBackend replay{FixtureStore{}};
  auto r = replay.Call(QaRequest{"q", ""});
  EXPECT_TRUE(std::get<QaResponse>(r).unanswerable);
}

TEST(RecordingBackendTest, RecordThenReplay) {
  ScratchDir dir;
  auto counting = std::make_shared<CountingBackend>(std::make_shared<SyntheticBackend>());
  std::vector<BackendRequest> requests = {QgRequest{"Several interesting words here", 3},
                                          QaRequest{"What about words?", "some words there"},
                                          EmbedRequest{{"hello world"}},
                                          QaRequest{"What about words?", ""}};
  std::vector<std::string> recorded;
  {
    RecordingBackend recorder(counting, dir / "rec.json");
    for (const auto& r : requests) recorded.push_back(ResponseBody(recorder.Call(r)).dump());
  }
  EXPECT_EQ(counting->total(), 3);  // blank context never reaches the model
  auto replay = ReplayBackend::Open(dir / "rec.json");
  for (std::size_t i = 0; i < requests.size(); ++i) {
    EXPECT_EQ(ResponseBody(replay->Call(requests[i])).dump(), recorded[i]);
  }
  // Re-opening the recorder keeps earlier entries.
  RecordingBackend again(counting, dir / "rec.json");
  again.Call(QaRequest{"What about here?", "here we go"});
  EXPECT_EQ(FixtureStore::Load(dir / "rec.json").size(), 4u);
}

// Scripted transport: replies from a queue and counts calls.
class FakeTransport : public HttpTransport {
 public:
  std::vector<HttpResult> replies;
  int calls = 0;
  std::string last_path, last_body;

  HttpResult Post(const std::string& path, const std::string& body, milliseconds) override {
    last_path = path;
    last_body = body;
    const HttpResult r = replies.at(std::min<std::size_t>(calls, replies.size() - 1));
    ++calls;
    return r;
  }
};

HttpResult Reply(int status, std::string body) {
  HttpResult r;
  r.http_status = status;
  r.body = std::move(body);
  return r;
}

HttpResult Failure(HttpResult::Status status) {
  HttpResult r;
  r.status = status;
  r.detail = "simulated";
  return r;
}

TEST(RemoteCallTest, RetriesServerErrorsWithBackoff) {
  FakeTransport t;
  t.replies = {Reply(503, R"({"error":"busy"})"), Failure(HttpResult::Status::kConnectError),
               Reply(200, R"({"answer":"two","unanswerable":false})")};
  std::vector<milliseconds> sleeps;
  auto r = RemoteCall(t, QaRequest{"How many?", "two cats"}, milliseconds(1000), RetryPolicy{},
                      [&](milliseconds d) { sleeps.push_back(d); });
  EXPECT_EQ(std::get<QaResponse>(r).answer, "two");
  EXPECT_EQ(t.calls, 3);
  EXPECT_EQ(t.last_path, "/qa");
  EXPECT_EQ(json::parse(t.last_body), json::parse(R"({"question":"How many?","context":"two cats"})"));
  EXPECT_EQ(sleeps, (std::vector<milliseconds>{milliseconds(100), milliseconds(200)}));
}

TEST(RemoteCallTest, GivesUpAfterRetries) {
  FakeTransport t;
  t.replies = {Reply(500, "boom")};
  std::vector<milliseconds> sleeps;
  RetryPolicy policy;
  EXPECT_EQ(CodeOf([&] {
              RemoteCall(t, QgRequest{"x", 1}, milliseconds(10), policy,
                         [&](milliseconds d) { sleeps.push_back(d); });
            }),
            ErrorCode::kTransport);
  EXPECT_EQ(t.calls, policy.retries + 1);
  EXPECT_EQ(sleeps.back(), milliseconds(400));
}

TEST(RemoteCallTest, TimeoutIsReportedAsTimeout) {
  FakeTransport t;
  t.replies = {Failure(HttpResult::Status::kTimeout)};
  EXPECT_EQ(CodeOf([&] {
              RemoteCall(t, QgRequest{"x", 1}, milliseconds(10), RetryPolicy{1}, [](milliseconds) {});
            }),
            ErrorCode::kTimeout);
  EXPECT_EQ(t.calls, 2);
}

TEST(RemoteCallTest, ClientErrorIsNotRetried) {
  FakeTransport t;
  t.replies = {Reply(400, R"({"error":"empty text"})")};
  try {
    RemoteCall(t, QgRequest{"x", 1}, milliseconds(10), RetryPolicy{}, [](milliseconds) {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kProtocol);
    EXPECT_NE(std::string(e.what()).find("empty text"), std::string::npos);
  }
  EXPECT_EQ(t.calls, 1);
}

TEST(RemoteCallTest, MalformedReplyIsProtocolError) {
  FakeTransport t;
  t.replies = {Reply(200, "<html>")};
  EXPECT_EQ(CodeOf([&] { RemoteCall(t, QgRequest{"x", 1}, milliseconds(10), RetryPolicy{}); }),
            ErrorCode::kProtocol);
  t.replies = {Reply(200, R"({"tokens":[["a"],["b"]],"vectors":[[[1]],[[1]]],"dim":1})")};
  EXPECT_EQ(CodeOf([&] { RemoteCall(t, EmbedRequest{{"a"}}, milliseconds(10), RetryPolicy{}); }),
            ErrorCode::kProtocol);
}

TEST(RemoteCallTest, BlankContextSkipsTransport) {
  FakeTransport t;
  t.replies = {Reply(500, "")};
  auto r = RemoteCall(t, QaRequest{"q", " "}, milliseconds(10), RetryPolicy{});
  EXPECT_TRUE(std::get<QaResponse>(r).unanswerable);
  EXPECT_EQ(t.calls, 0);
}

TEST(RemoteBackendTest, TalksToLocalServer) {
  LocalServer server;
  RemoteBackend backend({server.url(), milliseconds(5000), RetryPolicy{0}});
  SyntheticBackend local;
  const std::vector<BackendRequest> requests = {
      QgRequest{"Several interesting words appear here", 2},
      QaRequest{"What about words?", "many words here"}, EmbedRequest{{"hello there"}}};
  for (const auto& r : requests) {
    EXPECT_EQ(ResponseBody(backend.Call(r)), ResponseBody(local.Call(r)));
  }
  EXPECT_EQ(server.hits.load(), 3);
}

TEST(RemoteBackendTest, EndpointPathPrefix) {
  LocalServer server("/v1");
  RemoteBackend backend({server.url("/v1/"), milliseconds(5000), RetryPolicy{0}});
  auto r = backend.Call(QgRequest{"Several interesting words", 1});
  EXPECT_EQ(std::get<QgResponse>(r).questions.size(), 1u);
}

TEST(RemoteBackendTest, SlowServerTimesOut) {
  LocalServer server("", milliseconds(600));
  RemoteBackend backend({server.url(), milliseconds(150), RetryPolicy{0}});
  EXPECT_EQ(CodeOf([&] { backend.Call(QgRequest{"Several interesting words", 1}); }),
            ErrorCode::kTimeout);
}

TEST(RemoteBackendTest, ConnectionRefusedIsTransportError) {
  std::string url;
  {
    LocalServer server;
    url = server.url();
  }
  RemoteBackend backend({url, milliseconds(1000), RetryPolicy{1, milliseconds(1)}});
  EXPECT_EQ(CodeOf([&] { backend.Call(QgRequest{"text", 1}); }), ErrorCode::kTransport);
}

TEST(RemoteBackendTest, RejectsNonHttpScheme) {
  EXPECT_EQ(CodeOf([] { MakeHttpTransport("https://example.com"); }),
            ErrorCode::kInvalidArgument);
}

}  // namespace
}  // namespace simpeval
