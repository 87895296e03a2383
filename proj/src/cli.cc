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

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "simpeval/backend.h"
#include "simpeval/corpus.h"
#include "simpeval/correlation_table.h"
#include "simpeval/embed_metrics.h"
#include "simpeval/error.h"
#include "simpeval/fixture_store.h"
#include "simpeval/lexical_metrics.h"
#include "simpeval/metric_score.h"
#include "simpeval/parallel.h"
#include "simpeval/questeval.h"
#include "simpeval/remote_backend.h"
#include "simpeval/scatter_plot.h"
#include "simpeval/textproc.h"

namespace simpeval {
namespace {

namespace fs = std::filesystem;
using ojson = nlohmann::ordered_json;

// Raised for flag combinations CLI11 cannot express.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool IsBlank(const std::string& s) {
  return s.find_first_not_of(" \t\r\n") == std::string::npos;
}

std::vector<std::string> SplitCsv(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b != std::string::npos) out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

std::string ReadFile(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteFile(const fs::path& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path.string());
  out << data;
  if (!out.flush()) throw Error(ErrorCode::kIo, "write failed: " + path.string());
}

// Shortest decimal with at most 4 places, keeping one: 0.8, 0.89, 0.0, 0.4275.
std::string FormatScore(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  std::string s = buf;
  while (s.size() > 1 && s.back() == '0' && s[s.size() - 2] != '.') s.pop_back();
  if (s == "-0.0") s = "0.0";
  return s;
}

// Backend flags shared by score and audit.
struct BackendFlags {
  std::string url;
  std::string fixtures;
  int timeout_ms = 30000;
  int retries = 3;
};

void AddBackendFlags(CLI::App* cmd, BackendFlags& flags) {
  cmd->add_option("--backend-url", flags.url,
                  "Model server endpoint (default: $SIMPEVAL_BACKEND_URL)");
  cmd->add_option("--fixtures", flags.fixtures,
                  "Fixture file; replayed alone, recorded with --backend-url");
  cmd->add_option("--timeout-ms", flags.timeout_ms, "Per-request timeout")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--retries", flags.retries, "Retries on transient failures")
      ->check(CLI::NonNegativeNumber);
}

// Returns null when neither a URL nor fixtures are configured.
std::shared_ptr<Backend> MakeBackend(BackendFlags flags, const EnvLookup& env) {
  if (flags.url.empty() && env) {
    if (auto v = env(kBackendUrlEnv)) flags.url = *v;
  }
  if (flags.url.empty() && flags.fixtures.empty()) return nullptr;
  if (flags.url.empty()) return ReplayBackend::Open(flags.fixtures);
  RemoteBackend::Options options;
  options.endpoint = flags.url;
  options.timeout = std::chrono::milliseconds(flags.timeout_ms);
  options.retry.retries = flags.retries;
  auto remote = std::make_shared<RemoteBackend>(options);
  if (flags.fixtures.empty()) return remote;
  return std::make_shared<RecordingBackend>(remote, flags.fixtures);
}

struct QuestEvalFlags {
  std::string directions = "source,candidate";
  std::string similarity = "embedding";
  int questions = 10;
  int max_in_flight = 8;
};

void AddQuestEvalFlags(CLI::App* cmd, QuestEvalFlags& flags) {
  cmd->add_option("--questeval-directions", flags.directions,
                  "Comma list of source,candidate")
      ->capture_default_str();
  cmd->add_option("--questeval-similarity", flags.similarity,
                  "Answer similarity: embedding or token_f1")
      ->capture_default_str();
  cmd->add_option("--questeval-questions", flags.questions,
                  "Questions generated per text")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--max-in-flight", flags.max_in_flight,
                  "Concurrent backend requests per instance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

QuestEvalConfig ToConfig(const QuestEvalFlags& flags) {
  QuestEvalConfig config;
  const auto sim = ParseSimilarity(flags.similarity);
  if (!sim) throw UsageError("unknown similarity: " + flags.similarity);
  config.similarity = *sim;
  config.directions.clear();
  for (const std::string& name : SplitCsv(flags.directions)) {
    const auto dir = ParseDirection(name);
    if (!dir) throw UsageError("unknown direction: " + name);
    if (std::find(config.directions.begin(), config.directions.end(), *dir) ==
        config.directions.end()) {
      config.directions.push_back(*dir);
    }
  }
  if (config.directions.empty()) throw UsageError("no QuestEval direction selected");
  config.questions_per_text = flags.questions;
  config.max_in_flight = flags.max_in_flight;
  return config;
}

// ---------------------------------------------------------------- score

struct ScoreFlags {
  std::string input;
  std::string metrics = "fkgl,sari,bleu";
  std::string out;
  bool resume = false;
  int workers = 0;
  BackendFlags backend;
  QuestEvalFlags questeval;
};

struct ScoreRecord {
  std::string instance_id;
  Metric metric = Metric::kFkgl;
  std::optional<double> value;
  std::string error;
};

std::string RecordLine(const ScoreRecord& r) {
  ojson doc;
  doc["instance_id"] = r.instance_id;
  doc["metric"] = MetricName(r.metric);
  doc["value"] = r.value ? ojson(*r.value) : ojson(nullptr);
  doc["higher_is_better"] = HigherIsBetter(r.metric);
  if (!r.value) doc["error"] = r.error;
  return doc.dump();
}

// Successful (instance, metric) pairs already in a scores file.
std::set<std::pair<std::string, Metric>> CompletedPairs(const fs::path& path) {
  std::set<std::pair<std::string, Metric>> done;
  if (!fs::exists(path)) return done;
  std::istringstream in(ReadFile(path));
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (IsBlank(line)) continue;
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception&) {
      // A torn final line from an interrupted run is tolerated.
      if (in.peek() == EOF) break;
      throw Error(ErrorCode::kParse,
                  path.string() + ":" + std::to_string(line_no) + ": invalid JSON");
    }
    const auto metric = ParseMetric(doc.value("metric", ""));
    if (!metric || !doc.contains("instance_id")) {
      throw Error(ErrorCode::kParse,
                  path.string() + ":" + std::to_string(line_no) + ": not a score record");
    }
    if (doc.contains("value") && doc["value"].is_number()) {
      done.emplace(doc["instance_id"].get<std::string>(), *metric);
    }
  }
  return done;
}

double ComputeMetric(Metric metric, const Instance& inst, Backend* backend,
                     const QuestEvalConfig& qe) {
  if (!IsReferenceLess(metric) && inst.references.empty()) {
    throw Error(ErrorCode::kReferenceRequired,
                std::string(MetricName(metric)) + " needs references");
  }
  switch (metric) {
    case Metric::kFkgl:
      return Fkgl(inst.candidate).value;
    case Metric::kSari:
      return Sari(inst.source, inst.candidate, inst.references).value;
    case Metric::kBleu:
      return Bleu(inst.candidate, inst.references).value;
    case Metric::kBertScore: {
      EmbedOptions options;
      options.max_in_flight = qe.max_in_flight;
      return BertScore(inst.candidate, inst.references, *backend, options).value;
    }
    case Metric::kQuestEval: {
      std::shared_ptr<Backend> shared(backend, [](Backend*) {});
      QuestEvalBackends backends{shared, shared, shared};
      return QuestEvalScore(inst.source, inst.candidate, qe, backends).score;
    }
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown metric");
}

int CmdScore(const ScoreFlags& flags, std::ostream& out, std::ostream& err,
             const EnvLookup& env) {
  std::vector<Metric> metrics;
  for (const std::string& name : SplitCsv(flags.metrics)) {
    const auto m = ParseMetric(name);
    if (!m) throw UsageError("unknown metric: " + name);
    if (std::find(metrics.begin(), metrics.end(), *m) == metrics.end()) {
      metrics.push_back(*m);
    }
  }
  if (metrics.empty()) throw UsageError("no metric selected");
  std::sort(metrics.begin(), metrics.end());
  if (flags.resume && flags.out.empty()) throw UsageError("--resume needs --out");

  const bool needs_backend =
      std::find(metrics.begin(), metrics.end(), Metric::kBertScore) != metrics.end() ||
      std::find(metrics.begin(), metrics.end(), Metric::kQuestEval) != metrics.end();
  const QuestEvalConfig qe = ToConfig(flags.questeval);
  std::shared_ptr<Backend> backend;
  if (needs_backend) {
    backend = MakeBackend(flags.backend, env);
    if (!backend) {
      throw UsageError("bertscore and questeval need --backend-url or --fixtures");
    }
  }

  std::vector<Instance> instances = LoadInstances(flags.input);
  std::sort(instances.begin(), instances.end(),
            [](const Instance& a, const Instance& b) { return a.id < b.id; });
  std::set<std::pair<std::string, Metric>> done;
  if (flags.resume) done = CompletedPairs(flags.out);

  std::vector<std::vector<ScoreRecord>> results(instances.size());
  std::size_t workers = flags.workers > 0
                            ? static_cast<std::size_t>(flags.workers)
                            : std::max(1u, std::thread::hardware_concurrency());
  ParallelFor(instances.size(), workers, [&](std::size_t i) {
    const Instance& inst = instances[i];
    for (Metric m : metrics) {
      if (done.count({inst.id, m})) continue;
      ScoreRecord rec{inst.id, m, std::nullopt, {}};
      try {
        rec.value = ComputeMetric(m, inst, backend.get(), qe);
      } catch (const Error& e) {
        rec.error = std::string(ErrorCodeName(e.code())) + ": " + e.what();
      } catch (const std::exception& e) {
        rec.error = e.what();
      }
      results[i].push_back(std::move(rec));
    }
  });

  std::string payload;
  int attempted = 0, succeeded = 0, failed = 0;
  for (const auto& recs : results) {
    if (recs.empty()) continue;
    ++attempted;
    bool ok = true;
    for (const ScoreRecord& r : recs) {
      payload += RecordLine(r) + "\n";
      if (!r.value) {
        ok = false;
        err << "warning: " << r.instance_id << " " << MetricName(r.metric) << ": "
            << r.error << "\n";
      }
    }
    ok ? ++succeeded : ++failed;
  }
  if (flags.out.empty()) {
    out << payload;
  } else {
    std::ofstream file(flags.out, std::ios::binary | std::ios::app);
    if (!file) throw Error(ErrorCode::kIo, "cannot open " + flags.out);
    file << payload;
    if (!file.flush()) throw Error(ErrorCode::kIo, "write failed: " + flags.out);
  }
  err << "scored " << attempted << " instances: " << succeeded << " ok, " << failed
      << " failed";
  if (flags.resume) err << ", " << instances.size() - attempted << " already done";
  err << "\n";
  if (attempted > 0 && succeeded == 0) {
    err << "error: no instance scored successfully\n";
    return kExitFatal;
  }
  return failed > 0 ? kExitPartial : kExitOk;
}

// ------------------------------------------------------------ correlate

struct CorrelateFlags {
  std::string scores;
  std::string ratings;
  std::string manifest;
  std::string input;
  std::optional<double> scale_min;
  std::optional<double> scale_max;
  std::string split = "all";
  std::string format = "markdown";
  std::string out;
  std::string plots;
};

ScoreTable LoadScores(const fs::path& path) {
  ScoreTable table;
  std::istringstream in(ReadFile(path));
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (IsBlank(line)) continue;
    const std::string where = path.string() + ":" + std::to_string(line_no);
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception&) {
      throw Error(ErrorCode::kParse, where + ": invalid JSON");
    }
    if (!doc.is_object() || !doc.contains("instance_id") ||
        !doc["instance_id"].is_string() || !doc.contains("metric") ||
        !doc["metric"].is_string()) {
      throw Error(ErrorCode::kParse, where + ": not a score record");
    }
    const auto metric = ParseMetric(doc["metric"].get<std::string>());
    if (!metric) throw Error(ErrorCode::kParse, where + ": unknown metric");
    if (!doc.contains("value") || !doc["value"].is_number()) continue;  // failure entry
    table[*metric][doc["instance_id"].get<std::string>()] = doc["value"].get<double>();
  }
  return table;
}

std::string Slug(std::string_view label) {
  std::string s;
  for (char c : label) {
    if (std::isalnum(static_cast<unsigned char>(c))) {
      s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    } else if (!s.empty() && s.back() != '_') {
      s += '_';
    }
  }
  while (!s.empty() && s.back() == '_') s.pop_back();
  return s;
}

int CmdCorrelate(const CorrelateFlags& flags, std::ostream& out, std::ostream& err) {
  const auto split = ParseSplit(flags.split);
  if (!split) throw UsageError("unknown split: " + flags.split);
  const auto format = ParseTableFormat(flags.format);
  if (!format) throw UsageError("unknown format: " + flags.format);

  CorpusManifest manifest;
  bool have_scale = false;
  if (!flags.manifest.empty()) {
    manifest = LoadManifest(flags.manifest);
    have_scale = true;
  }
  if (flags.scale_min || flags.scale_max) {
    if (!flags.scale_min || !flags.scale_max) {
      throw UsageError("--scale-min and --scale-max go together");
    }
    manifest.scale = Scale{*flags.scale_min, *flags.scale_max};
    have_scale = true;
  }
  if (!have_scale) throw UsageError("rating scale unknown: pass --manifest or --scale-min/--scale-max");
  if (!(manifest.scale.min < manifest.scale.max)) throw UsageError("empty rating scale");
  if (!flags.ratings.empty()) manifest.ratings = flags.ratings;
  if (!flags.input.empty()) manifest.instances = flags.input;
  if (manifest.ratings.empty()) throw UsageError("no ratings: pass --ratings or --manifest");
  if (*split != Split::kAll && manifest.instances.empty()) {
    throw UsageError("--split " + flags.split + " needs --input to know instance origins");
  }

  const ScoreTable scores = LoadScores(flags.scores);
  std::vector<Rating> ratings = LoadRatings(manifest.ratings, manifest.scale);
  MeansResult means;
  std::set<std::string> allowed;
  if (!manifest.instances.empty()) {
    std::vector<Instance> instances = LoadInstances(manifest.instances);
    for (const Instance& inst : instances) {
      if (*split == Split::kAll ||
          (*split == Split::kSystem && inst.origin == Origin::kSystem) ||
          (*split == Split::kHuman && inst.origin == Origin::kHuman)) {
        allowed.insert(inst.id);
      }
    }
    RatedCorpus corpus(std::move(instances), std::move(ratings), manifest.scale,
                       manifest.expected_ratings_per_cell);
    for (const std::string& w : corpus.warnings()) err << "warning: " << w << "\n";
    means = ComputeDimensionMeans(corpus);
  } else {
    means = ComputeDimensionMeans(ratings);
  }
  for (const std::string& w : means.warnings) err << "warning: " << w << "\n";

  std::vector<DimensionMeans> kept;
  std::set<std::string> scored_ids;
  for (const auto& [metric, by_id] : scores) {
    for (const auto& [id, value] : by_id) scored_ids.insert(id);
  }
  for (DimensionMeans& m : means.means) {
    if (!allowed.empty() || !manifest.instances.empty()) {
      if (!allowed.count(m.instance_id)) continue;
    }
    if (scored_ids.count(m.instance_id)) kept.push_back(std::move(m));
  }
  if (kept.empty()) {
    throw Error(ErrorCode::kEmptyJoin,
                "no instance id appears in both the scores and the ratings");
  }

  const CorrelationTable table = BuildTable(kept, scores, *split);
  for (const TableRow& row : table.rows) {
    for (Dimension d : kAllDimensions) {
      const auto& cell = row.cells[static_cast<int>(d)];
      if (cell && cell->status != CellStatus::kOk) {
        err << "warning: " << row.label << " x " << DimensionName(d) << ": "
            << (cell->status == CellStatus::kInsufficient ? "fewer than 3 pairs"
                                                          : "zero variance")
            << "\n";
      }
    }
  }

  const std::string rendered = RenderTable(table, *format);
  if (flags.out.empty()) {
    out << rendered;
  } else {
    WriteFile(flags.out, rendered);
    if (*format != TableFormat::kJson) {
      WriteFile(flags.out + ".json", RenderTable(table, TableFormat::kJson));
    }
  }

  if (!flags.plots.empty()) {
    fs::create_directories(flags.plots);
    for (const TableRow& row : table.rows) {
      for (Dimension d : kAllDimensions) {
        const auto& cell = row.cells[static_cast<int>(d)];
        if (!cell || cell->status != CellStatus::kOk) continue;
        const std::string name = std::string(SplitName(table.split)) + "_" +
                                 Slug(row.label) + "_" +
                                 Slug(DimensionName(d)) + ".svg";
        const std::string title = row.label + " vs " + std::string(DimensionName(d)) +
                                  " (r = " + FormatScore(cell->stats.r) + ")";
        WriteFile(fs::path(flags.plots) / name,
                  RenderScatterSvg(cell->pairs, row.label, DimensionName(d), title));
      }
    }
  }
  return kExitOk;
}

// ---------------------------------------------------------------- audit

struct AuditFlags {
  std::string source;
  std::string candidate;
  std::string format = "text";
  BackendFlags backend;
  QuestEvalFlags questeval;
};

std::string Cell(const std::optional<ProbeAnswer>& a) {
  if (!a) return "-";
  if (a->unanswerable) return "Unanswerable";
  return a->text;
}

std::string EscapePipes(std::string s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += '\\';
    out += c;
  }
  return out;
}

int CmdAudit(const AuditFlags& flags, std::ostream& out, const EnvLookup& env) {
  if (flags.format != "text" && flags.format != "json") {
    throw UsageError("unknown format: " + flags.format);
  }
  QuestEvalConfig config = ToConfig(flags.questeval);
  config.score_all_similarities = true;
  std::shared_ptr<Backend> backend = MakeBackend(flags.backend, env);
  if (!backend) throw UsageError("audit needs --backend-url or --fixtures");

  const QuestEvalReport report =
      QuestEvalScore(flags.source, flags.candidate, config, {backend, backend, backend});
  if (flags.format == "json") {
    out << ReportToJson(report).dump(2) << "\n";
    return kExitOk;
  }
  const bool both = config.directions.size() > 1;
  out << "Source: " << flags.source << "\n";
  out << "Simplification: " << flags.candidate << "\n\n";
  out << "| Generated question |" << (both ? " Direction |" : "")
      << " On source | On simplification | F1 | Embedding |\n";
  out << "|---|" << (both ? "---|" : "") << "---|---|---:|---:|\n";
  for (const QAProbe& p : report.probes) {
    out << "| " << EscapePipes(p.question) << " |";
    if (both) out << " " << DirectionName(p.direction) << " |";
    out << " " << EscapePipes(Cell(p.on_source)) << " | "
        << EscapePipes(Cell(p.on_candidate)) << " | " << FormatScore(p.sim_f1) << " | "
        << (p.sim_embed ? FormatScore(*p.sim_embed) : std::string("-")) << " |\n";
  }
  out << "\n";
  for (const auto& [dir, score] : report.per_direction_score) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g", score);
    out << "QuestEval " << DirectionName(dir) << " (" << SimilarityName(report.similarity)
        << "): " << buf << "\n";
  }
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", report.score);
  out << "QuestEval (" << SimilarityName(report.similarity) << "): " << buf << "\n";
  return kExitOk;
}

// ------------------------------------------------------------- fixtures

std::string Summarize(const nlohmann::json& request) {
  const std::string kind = request.value("kind", "?");
  std::string text;
  if (kind == "qa") {
    text = request.value("question", "") + " @ " + request.value("context", "");
  } else if (kind == "qg") {
    text = request.value("text", "");
  } else if (request.contains("texts")) {
    for (const auto& t : request["texts"]) {
      if (!text.empty()) text += " | ";
      text += t.get<std::string>();
    }
  }
  if (text.size() > 72) text = text.substr(0, 69) + "...";
  return kind + "\t" + text;
}

int CmdFixturesList(const std::string& path, std::ostream& out) {
  const FixtureStore store = FixtureStore::Load(path);
  for (const auto& [key, entry] : store.entries()) {
    out << key << "\t" << Summarize(entry.request) << "\n";
  }
  return kExitOk;
}

int CmdFixturesCheck(const std::string& path, std::ostream& out) {
  const FixtureStore store = FixtureStore::Load(path);
  std::map<std::string, int> by_kind;
  for (const auto& [key, entry] : store.entries()) {
    ++by_kind[entry.request.value("kind", "?")];
  }
  out << path << ": " << store.size() << " entries";
  for (const auto& [kind, n] : by_kind) out << ", " << kind << "=" << n;
  out << "\n";
  return kExitOk;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err, const EnvLookup& env) {
  CLI::App app{"Sentence simplification evaluation toolkit", "simpeval"};
  app.require_subcommand(1);

  ScoreFlags score;
  CLI::App* score_cmd = app.add_subcommand("score", "Score instances with metrics");
  score_cmd->add_option("--input", score.input, "Instances (JSON lines)")
      ->required()
      ->check(CLI::ExistingFile);
  score_cmd->add_option("--metrics", score.metrics,
                        "Comma list of fkgl,sari,bleu,bertscore,questeval")
      ->capture_default_str();
  score_cmd->add_option("--out", score.out, "Scores file to append to (default stdout)");
  score_cmd->add_flag("--resume", score.resume,
                      "Skip (instance, metric) pairs already scored in --out");
  score_cmd->add_option("--workers", score.workers,
                        "Worker threads (default: logical CPUs)")
      ->check(CLI::NonNegativeNumber);
  AddBackendFlags(score_cmd, score.backend);
  AddQuestEvalFlags(score_cmd, score.questeval);

  CorrelateFlags corr;
  CLI::App* corr_cmd =
      app.add_subcommand("correlate", "Correlate metric scores with human ratings");
  corr_cmd->add_option("--scores", corr.scores, "Scores file (JSON lines)")
      ->required()
      ->check(CLI::ExistingFile);
  corr_cmd->add_option("--ratings", corr.ratings, "Ratings (JSON lines)")
      ->check(CLI::ExistingFile);
  corr_cmd->add_option("--manifest", corr.manifest, "Corpus manifest (JSON)")
      ->check(CLI::ExistingFile);
  corr_cmd->add_option("--input", corr.input, "Instances, for origins and id checks")
      ->check(CLI::ExistingFile);
  corr_cmd->add_option("--scale-min", corr.scale_min, "Lowest valid rating");
  corr_cmd->add_option("--scale-max", corr.scale_max, "Highest valid rating");
  corr_cmd->add_option("--split", corr.split, "system, human or all")
      ->capture_default_str();
  corr_cmd->add_option("--format", corr.format, "markdown, csv or json")
      ->capture_default_str();
  corr_cmd->add_option("--out", corr.out,
                       "Output file; a .json twin is written next to it");
  corr_cmd->add_option("--plots", corr.plots, "Directory for SVG scatter plots");

  AuditFlags audit;
  CLI::App* audit_cmd =
      app.add_subcommand("audit", "Per-question QuestEval report for one pair");
  audit_cmd->add_option("--source", audit.source, "Source sentence")->required();
  audit_cmd->add_option("--candidate", audit.candidate, "Simplification")->required();
  audit_cmd->add_option("--format", audit.format, "text or json")->capture_default_str();
  AddBackendFlags(audit_cmd, audit.backend);
  AddQuestEvalFlags(audit_cmd, audit.questeval);

  std::string fixtures_path;
  CLI::App* fx_cmd = app.add_subcommand("fixtures", "Inspect fixture files");
  fx_cmd->require_subcommand(1);
  CLI::App* fx_list = fx_cmd->add_subcommand("list", "List entries");
  fx_list->add_option("--fixtures,path", fixtures_path, "Fixture file")
      ->required()
      ->check(CLI::ExistingFile);
  CLI::App* fx_check = fx_cmd->add_subcommand("check", "Validate and count entries");
  fx_check->add_option("--fixtures,path", fixtures_path, "Fixture file")
      ->required()
      ->check(CLI::ExistingFile);

  std::vector<std::string> rest(args.size() > 1 ? args.begin() + 1 : args.end(),
                                args.end());
  std::reverse(rest.begin(), rest.end());
  try {
    app.parse(rest);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*score_cmd) return CmdScore(score, out, err, env);
    if (*corr_cmd) return CmdCorrelate(corr, out, err);
    if (*audit_cmd) return CmdAudit(audit, out, env);
    if (*fx_list) return CmdFixturesList(fixtures_path, out);
    if (*fx_check) return CmdFixturesCheck(fixtures_path, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << ErrorCodeName(e.code()) << ": " << e.what() << "\n";
    return kExitFatal;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFatal;
  }
  return kExitUsage;
}

}  // namespace simpeval
