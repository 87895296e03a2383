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

#include "simpeval/cli.h"

#include <filesystem>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "json.hpp"
#include "simpeval/corpus.h"
#include "simpeval/fixture_store.h"
#include "simpeval/questeval.h"
#include "support/local_server.h"
#include "support/test_support.h"

namespace simpeval {
namespace {

using json = nlohmann::json;
using testing_support::LocalServer;
using testing_support::ReadText;
using testing_support::ScratchDir;
using testing_support::SyntheticBackend;
using testing_support::WriteText;

struct CliRun {
  int code = 0;
  std::string out, err;
};

CliRun Cli(std::vector<std::string> args, std::map<std::string, std::string> env = {}) {
  args.insert(args.begin(), "simpeval");
  std::ostringstream out, err;
  CliRun r;
  r.code = RunCli(args, out, err, [&](const std::string& k) -> std::optional<std::string> {
    auto it = env.find(k);
    if (it == env.end()) return std::nullopt;
    return it->second;
  });
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::vector<json> Lines(const std::string& text) {
  std::vector<json> v;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty()) v.push_back(json::parse(line));
  }
  return v;
}

const std::vector<Instance> kThree = {
    {"i1", "The committee postponed the decision indefinitely.", "The committee delayed the decision.",
     {"The group delayed the decision.", "The committee put off the decision."}, Origin::kSystem},
    {"i2", "Numerous residents complained about persistent noise.", "Many residents complained about noise.",
     {"Many people complained about the noise."}, Origin::kHuman},
    {"i3", "The physician administered the medication promptly.", "The doctor gave the medicine quickly.",
     {"The doctor quickly gave the medicine."}, Origin::kSystem},
};

std::filesystem::path WriteInstances(const ScratchDir& dir, const std::vector<Instance>& v,
                                     const std::string& name = "in.jsonl") {
  std::string text;
  for (const auto& inst : v) text += SerializeInstance(inst) + "\n";
  WriteText(dir / name, text);
  return dir / name;
}

TEST(CliScoreTest, FkglOnThreeInstances) {
  ScratchDir dir;
  CliRun r = Cli({"score", "--input", WriteInstances(dir, kThree).string(), "--metrics", "fkgl"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  auto recs = Lines(r.out);
  ASSERT_EQ(recs.size(), 3u);
  EXPECT_EQ(recs[0]["instance_id"], "i1");
  EXPECT_EQ(recs[0]["metric"], "fkgl");
  EXPECT_EQ(recs[0]["higher_is_better"], false);
  EXPECT_TRUE(recs[0]["value"].is_number());
  EXPECT_FALSE(recs[0].contains("error"));
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')),
            R"({"instance_id":"i1","metric":"fkgl","value":)" + recs[0]["value"].dump() +
                R"(,"higher_is_better":false})");
}

TEST(CliScoreTest, OutputIsOrderedByInstanceThenMetric) {
  ScratchDir dir;
  std::vector<Instance> shuffled = {kThree[2], kThree[0], kThree[1]};
  CliRun r = Cli({"score", "--input", WriteInstances(dir, shuffled).string(), "--metrics",
               "bleu,fkgl,sari", "--workers", "3"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  auto recs = Lines(r.out);
  ASSERT_EQ(recs.size(), 9u);
  const char* metrics[] = {"fkgl", "sari", "bleu"};
  for (int i = 0; i < 9; ++i) {
    EXPECT_EQ(recs[i]["instance_id"], "i" + std::to_string(i / 3 + 1));
    EXPECT_EQ(recs[i]["metric"], metrics[i % 3]);
  }
}

TEST(CliScoreTest, MissingReferencesFailThatInstance) {
  ScratchDir dir;
  auto v = kThree;
  v[1].references.clear();
  CliRun r = Cli({"score", "--input", WriteInstances(dir, v).string(), "--metrics", "sari"});
  EXPECT_EQ(r.code, kExitPartial);
  auto recs = Lines(r.out);
  ASSERT_EQ(recs.size(), 3u);
  EXPECT_TRUE(recs[1]["value"].is_null());
  EXPECT_EQ(recs[1]["error"].get<std::string>().rfind("reference-required", 0), 0u)
      << recs[1]["error"];
  EXPECT_TRUE(recs[0]["value"].is_number());
}

TEST(CliScoreTest, QuestEvalFixtureMissOnOneInstance) {
  ScratchDir dir;
  {
    auto backend = std::make_shared<RecordingBackend>(std::make_shared<SyntheticBackend>(),
                                                      dir / "fx.json");
    for (int i : {0, 2}) {
      QuestEvalScore(kThree[i].source, kThree[i].candidate, QuestEvalConfig{},
                     {backend, backend, backend});
    }
  }
  CliRun r = Cli({"score", "--input", WriteInstances(dir, kThree).string(), "--metrics", "questeval",
               "--fixtures", (dir / "fx.json").string()});
  EXPECT_EQ(r.code, kExitPartial) << r.err;
  auto recs = Lines(r.out);
  ASSERT_EQ(recs.size(), 3u);
  EXPECT_TRUE(recs[0]["value"].is_number());
  EXPECT_TRUE(recs[1]["value"].is_null());
  EXPECT_EQ(recs[1]["error"].get<std::string>().rfind("fixture-miss", 0), 0u);
  EXPECT_TRUE(recs[2]["value"].is_number());
  EXPECT_NE(r.err.find("2 ok, 1 failed"), std::string::npos) << r.err;
}

TEST(CliScoreTest, NothingSucceedsIsFatal) {
  ScratchDir dir;
  auto v = kThree;
  for (auto& inst : v) inst.references.clear();
  CliRun r = Cli({"score", "--input", WriteInstances(dir, v).string(), "--metrics", "bleu"});
  EXPECT_EQ(r.code, kExitFatal);
  EXPECT_EQ(Lines(r.out).size(), 3u);
}

TEST(CliScoreTest, UsageErrors) {
  ScratchDir dir;
  const std::string in = WriteInstances(dir, kThree).string();
  EXPECT_EQ(Cli({"score", "--input", in, "--metrics", "questeval"}).code, kExitUsage);
  EXPECT_EQ(Cli({"score", "--input", in, "--metrics", "bertscore"}).code, kExitUsage);
  EXPECT_EQ(Cli({"score", "--input", in, "--metrics", "rouge"}).code, kExitUsage);
  EXPECT_EQ(Cli({"score", "--input", in, "--resume"}).code, kExitUsage);
  EXPECT_EQ(Cli({"score", "--input", in, "--questeval-directions", "sideways"}).code, kExitUsage);
  EXPECT_EQ(Cli({"score"}).code, kExitUsage);
  EXPECT_EQ(Cli({"score", "--input", (dir / "missing.jsonl").string()}).code, kExitUsage);
  EXPECT_EQ(Cli({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(Cli({}).code, kExitUsage);
  EXPECT_EQ(Cli({"--help"}).code, kExitOk);
}

TEST(CliScoreTest, UnreadableInputIsFatal) {
  ScratchDir dir;
  WriteText(dir / "bad.jsonl", "{\"id\": 1}\n");
  CliRun r = Cli({"score", "--input", (dir / "bad.jsonl").string()});
  EXPECT_EQ(r.code, kExitFatal);
  EXPECT_NE(r.err.find("parse"), std::string::npos) << r.err;
}

TEST(CliScoreTest, BackendUrlFromEnvironment) {
  ScratchDir dir;
  LocalServer server;
  const std::string in = WriteInstances(dir, kThree).string();
  CliRun r = Cli({"score", "--input", in, "--metrics", "bertscore"},
              {{kBackendUrlEnv, server.url()}});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(Lines(r.out).size(), 3u);
  EXPECT_GT(server.hits.load(), 0);
  // An explicit flag wins over the environment.
  CliRun flagged = Cli({"score", "--input", in, "--metrics", "bertscore", "--backend-url",
                     server.url()},
                    {{kBackendUrlEnv, "http://127.0.0.1:1"}});
  EXPECT_EQ(flagged.code, kExitOk) << flagged.err;
  EXPECT_EQ(flagged.out, r.out);
}

TEST(CliScoreTest, RecordThenReplayMatches) {
  ScratchDir dir;
  LocalServer server;
  const std::string in = WriteInstances(dir, kThree).string();
  const std::string fx = (dir / "rec.json").string();
  CliRun live = Cli({"score", "--input", in, "--metrics", "bertscore,questeval", "--backend-url",
                  server.url(), "--fixtures", fx});
  ASSERT_EQ(live.code, kExitOk) << live.err;
  CliRun replay = Cli({"score", "--input", in, "--metrics", "bertscore,questeval", "--fixtures", fx});
  ASSERT_EQ(replay.code, kExitOk) << replay.err;
  EXPECT_EQ(live.out, replay.out);
}

TEST(CliScoreTest, ResumeSkipsCompletedPairs) {
  ScratchDir dir;
  auto v = kThree;
  v[1].references.clear();
  const std::string in = WriteInstances(dir, v).string();
  const std::string out = (dir / "scores.jsonl").string();
  CliRun first = Cli({"score", "--input", in, "--metrics", "fkgl,bleu", "--out", out});
  EXPECT_EQ(first.code, kExitPartial);
  EXPECT_EQ(Lines(ReadText(out)).size(), 6u);
  // Give i2 its references back; only the failed pair is recomputed.
  v[1].references = kThree[1].references;
  WriteInstances(dir, v);
  CliRun second = Cli({"score", "--input", in, "--metrics", "fkgl,bleu", "--out", out, "--resume"});
  EXPECT_EQ(second.code, kExitOk) << second.err;
  auto recs = Lines(ReadText(out));
  ASSERT_EQ(recs.size(), 7u);
  EXPECT_EQ(recs[6]["instance_id"], "i2");
  EXPECT_EQ(recs[6]["metric"], "bleu");
  EXPECT_TRUE(recs[6]["value"].is_number());
  CliRun third = Cli({"score", "--input", in, "--metrics", "fkgl,bleu", "--out", out, "--resume"});
  EXPECT_EQ(third.code, kExitOk);
  EXPECT_EQ(Lines(ReadText(out)).size(), 7u);
}

// Ratings where every dimension equals a per-instance level; scores follow.
struct CorrelateFiles {
  std::string scores, ratings, instances;
};

CorrelateFiles PerfectCorpus(const ScratchDir& dir, int n = 8) {
  std::string ratings, scores, instances;
  const char* dims[] = {"fluency", "simplicity", "meaning"};
  for (int i = 0; i < n; ++i) {
    const std::string id = "x" + std::to_string(i);
    Instance inst{id, "Source sentence here.", "Candidate sentence.", {"Ref."},
                  i % 2 ? Origin::kHuman : Origin::kSystem};
    instances += SerializeInstance(inst) + "\n";
    for (const char* d : dims) {
      for (int w = 0; w < 3; ++w) {
        ratings += json{{"instance_id", id}, {"dimension", d},
                        {"annotator_id", "w" + std::to_string(w)}, {"score", 1 + i % 5}}
                       .dump() +
                   "\n";
      }
    }
    scores += json{{"instance_id", id}, {"metric", "sari"}, {"value", 10.0 * (i % 5)},
                   {"higher_is_better", true}}
                  .dump() +
              "\n";
    scores += json{{"instance_id", id}, {"metric", "fkgl"}, {"value", 8.0 - (i % 5)},
                   {"higher_is_better", false}}
                  .dump() +
              "\n";
  }
  scores += R"({"instance_id":"x0","metric":"bleu","value":null,"higher_is_better":true,"error":"x"})"
            "\n";
  WriteText(dir / "scores.jsonl", scores);
  WriteText(dir / "ratings.jsonl", ratings);
  WriteText(dir / "instances.jsonl", instances);
  return {(dir / "scores.jsonl").string(), (dir / "ratings.jsonl").string(),
          (dir / "instances.jsonl").string()};
}

TEST(CliCorrelateTest, PerfectCorrelationTable) {
  ScratchDir dir;
  auto f = PerfectCorpus(dir);
  CliRun r = Cli({"correlate", "--scores", f.scores, "--ratings", f.ratings, "--scale-min", "1",
               "--scale-max", "5"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("| FKGL | ✓ | 100.0** | 100.0** | 100.0** |"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("| SARI | ✗ | 100.0** | 100.0** | 100.0** |"), std::string::npos) << r.out;
  EXPECT_EQ(r.out.find("BLEU"), std::string::npos);
}

TEST(CliCorrelateTest, WritesTwinAndPlots) {
  ScratchDir dir;
  auto f = PerfectCorpus(dir);
  const std::string out = (dir / "table.csv").string();
  CliRun r = Cli({"correlate", "--scores", f.scores, "--ratings", f.ratings, "--scale-min", "1",
               "--scale-max", "5", "--format", "csv", "--out", out, "--plots",
               (dir / "plots").string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(ReadText(out).rfind("row,ref_less", 0), 0u);
  auto twin = json::parse(ReadText(out + ".json"));
  EXPECT_EQ(twin["rows"].size(), 5u);
  EXPECT_TRUE(std::filesystem::exists(dir / "plots" / "all_sari_simplicity.svg"));
  EXPECT_TRUE(std::filesystem::exists(dir / "plots" / "all_fluency_meaning.svg"));
  EXPECT_NE(ReadText(dir / "plots" / "all_fkgl_fluency.svg").find("<svg"), std::string::npos);
}

TEST(CliCorrelateTest, SplitsByOrigin) {
  ScratchDir dir;
  auto f = PerfectCorpus(dir, 12);
  CliRun r = Cli({"correlate", "--scores", f.scores, "--ratings", f.ratings, "--input", f.instances,
               "--scale-min", "1", "--scale-max", "5", "--split", "human", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  auto doc = json::parse(r.out);
  EXPECT_EQ(doc["split"], "human");
  EXPECT_EQ(doc["rows"][3]["cells"]["fluency"]["n"], 6);
  EXPECT_EQ(Cli({"correlate", "--scores", f.scores, "--ratings", f.ratings, "--scale-min", "1",
                 "--scale-max", "5", "--split", "human"})
                .code,
            kExitUsage);
}

TEST(CliCorrelateTest, ManifestSuppliesScaleAndPaths) {
  ScratchDir dir;
  auto f = PerfectCorpus(dir);
  WriteText(dir / "m.json",
            R"({"scale":{"min":1,"max":5},"ratings":"ratings.jsonl","instances":"instances.jsonl",)"
            R"("expected_ratings_per_cell":4})");
  CliRun r = Cli({"correlate", "--scores", f.scores, "--manifest", (dir / "m.json").string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.err.find("expected 4"), std::string::npos) << r.err;
}

TEST(CliCorrelateTest, EmptyJoinIsFatal) {
  ScratchDir dir;
  auto f = PerfectCorpus(dir);
  WriteText(dir / "other.jsonl",
            R"({"instance_id":"nope","metric":"sari","value":1,"higher_is_better":true})" "\n");
  CliRun r = Cli({"correlate", "--scores", (dir / "other.jsonl").string(), "--ratings", f.ratings,
               "--scale-min", "1", "--scale-max", "5"});
  EXPECT_EQ(r.code, kExitFatal);
  EXPECT_NE(r.err.find("empty-join"), std::string::npos) << r.err;
}

TEST(CliCorrelateTest, ScaleIsRequiredAndEnforced) {
  ScratchDir dir;
  auto f = PerfectCorpus(dir);
  EXPECT_EQ(Cli({"correlate", "--scores", f.scores, "--ratings", f.ratings}).code, kExitUsage);
  CliRun r = Cli({"correlate", "--scores", f.scores, "--ratings", f.ratings, "--scale-min", "1",
               "--scale-max", "3"});
  EXPECT_EQ(r.code, kExitFatal);
  EXPECT_NE(r.err.find("out-of-bounds"), std::string::npos) << r.err;
}

const char kSource[] =
    "In the Soviet years, the Bolsheviks demolished two of Rostov's principal landmarks- St "
    "Alexander Nevsky cathedral (1908) and St George cathedral in Nakhichevan (1783-1807).";
const char kSimplification[] =
    "The Bolsheviks destroyed St. Alexander Nevsky cathedral and St. George cathedral in "
    "Nakhichevan during the Soviet years.";

std::string WorkedExampleFixture() {
  return std::string(SIMPEVAL_DATA_DIR) + "/fixtures/worked_example.json";
}

TEST(CliAuditTest, WorkedExampleRows) {
  CliRun r = Cli({"audit", "--source", kSource, "--candidate", kSimplification, "--fixtures",
               WorkedExampleFixture(), "--questeval-directions", "source"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("| When did the Bolsheviks demolish St George cathedral? | the Soviet years | "
                       "Soviet years | 0.8 | 0.89 |"),
            std::string::npos)
      << r.out;
  EXPECT_NE(r.out.find("| What cathedral was demolished in 1908? | Rostov | Unanswerable | 0.0 | 0.0 |"),
            std::string::npos);
  EXPECT_NE(r.out.find("QuestEval (embedding): 0.4275\n"), std::string::npos);
}

TEST(CliAuditTest, JsonFormat) {
  CliRun r = Cli({"audit", "--source", kSource, "--candidate", kSimplification, "--fixtures",
               WorkedExampleFixture(), "--questeval-directions", "source", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  auto doc = json::parse(r.out);
  EXPECT_NEAR(doc["score"].get<double>(), 0.4275, 1e-12);
}

TEST(CliAuditTest, IdenticalTextsViaFixtures) {
  ScratchDir dir;
  const std::string text = "Rostov preserved several remarkable cathedrals despite turbulent years.";
  {
    auto rec = std::make_shared<RecordingBackend>(std::make_shared<SyntheticBackend>(),
                                                  dir / "fx.json");
    QuestEvalConfig config;
    config.score_all_similarities = true;
    QuestEvalScore(text, text, config, {rec, rec, rec});
  }
  CliRun r = Cli({"audit", "--source", text, "--candidate", text, "--fixtures",
               (dir / "fx.json").string(), "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  auto doc = json::parse(r.out);
  ASSERT_FALSE(doc["probes"].empty());
  for (const auto& p : doc["probes"]) {
    EXPECT_EQ(p["answer_on_source"], p["answer_on_candidate"]);
    EXPECT_EQ(p["f1"], 1.0);
  }
}

TEST(CliAuditTest, BackendErrorsSurfaceVerbatim) {
  CliRun r = Cli({"audit", "--source", kSource, "--candidate", kSimplification, "--fixtures",
               WorkedExampleFixture()});
  EXPECT_EQ(r.code, kExitFatal);
  EXPECT_NE(r.err.find("fixture-miss"), std::string::npos) << r.err;
}

TEST(CliAuditTest, NoBackendIsUsageError) {
  CliRun r = Cli({"audit", "--source", "a", "--candidate", "b"});
  EXPECT_EQ(r.code, kExitUsage);
}

TEST(CliFixturesTest, ListAndCheck) {
  CliRun list = Cli({"fixtures", "list", WorkedExampleFixture()});
  ASSERT_EQ(list.code, kExitOk) << list.err;
  EXPECT_EQ(std::count(list.out.begin(), list.out.end(), '\n'), 13);
  CliRun check = Cli({"fixtures", "check", "--fixtures", WorkedExampleFixture()});
  EXPECT_EQ(check.code, kExitOk);
  EXPECT_NE(check.out.find("13 entries, embed=4, qa=8, qg=1"), std::string::npos) << check.out;
  ScratchDir dir;
  WriteText(dir / "bad.json", "{}");
  CliRun bad = Cli({"fixtures", "check", (dir / "bad.json").string()});
  EXPECT_EQ(bad.code, kExitFatal);
  EXPECT_NE(bad.err.find("corrupt-store"), std::string::npos) << bad.err;
}

}  // namespace
}  // namespace simpeval
