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

#include "simpeval/questeval.h"

#include <algorithm>
#include <set>

#include "simpeval/embed_metrics.h"
#include "simpeval/error.h"
#include "simpeval/parallel.h"
#include "simpeval/textproc.h"

namespace simpeval {
namespace {

bool Blank(std::string_view s) { return Tokenize(s).empty(); }

bool Unanswerable(const QAProbe& p) {
  return !p.on_source || !p.on_candidate || p.on_source->unanswerable ||
         p.on_candidate->unanswerable;
}

double Selected(const QAProbe& p, Similarity s) {
  if (s == Similarity::kTokenF1) return p.sim_f1;
  if (!p.sim_embed) {
    throw Error(ErrorCode::kInvalidArgument,
                "embedding similarity requested but probes were not embedded");
  }
  return *p.sim_embed;
}

}  // namespace

std::string_view DirectionName(Direction d) {
  return d == Direction::kFromSource ? "from_source" : "from_candidate";
}

std::optional<Direction> ParseDirection(std::string_view name) {
  const std::string lower = AsciiLower(name);
  if (lower == "from_source" || lower == "source") return Direction::kFromSource;
  if (lower == "from_candidate" || lower == "candidate") return Direction::kFromCandidate;
  return std::nullopt;
}

std::string_view SimilarityName(Similarity s) {
  return s == Similarity::kTokenF1 ? "token_f1" : "embedding";
}

std::optional<Similarity> ParseSimilarity(std::string_view name) {
  const std::string lower = AsciiLower(name);
  if (lower == "token_f1" || lower == "f1") return Similarity::kTokenF1;
  if (lower == "embedding" || lower == "bertscore") return Similarity::kEmbedding;
  return std::nullopt;
}

void ValidateConfig(const QuestEvalConfig& config) {
  if (config.directions.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "QuestEval needs at least one direction");
  }
  if (config.questions_per_text < 1) {
    throw Error(ErrorCode::kInvalidArgument, "questions_per_text must be >= 1");
  }
  if (config.max_in_flight < 1) {
    throw Error(ErrorCode::kInvalidArgument, "max_in_flight must be >= 1");
  }
}

std::vector<QAProbe> GenerateProbes(std::string_view source,
                                    std::string_view candidate,
                                    const QuestEvalConfig& config, Backend& qg) {
  ValidateConfig(config);
  if (Blank(source) || Blank(candidate)) {
    throw Error(ErrorCode::kEmptyText, "QuestEval needs non-empty source and candidate");
  }
  // A direction listed twice is generated once.
  std::set<Direction> enabled(config.directions.begin(), config.directions.end());
  std::vector<QAProbe> probes;
  for (Direction dir : enabled) {
    std::string_view text = dir == Direction::kFromSource ? source : candidate;
    std::vector<std::string> questions;
    try {
      questions = GenerateQuestions(qg, text, config.questions_per_text);
    } catch (const Error& e) {
      throw Error(e.code(), "question generation (" + std::string(DirectionName(dir)) +
                                "): " + e.what());
    }
    std::set<std::string> seen;
    int kept = 0;
    for (std::string& q : questions) {
      if (kept == config.questions_per_text) break;
      if (Blank(q) || !seen.insert(q).second) continue;
      QAProbe probe;
      probe.question = std::move(q);
      probe.direction = dir;
      probes.push_back(std::move(probe));
      ++kept;
    }
  }
  if (probes.empty()) {
    throw Error(ErrorCode::kNoProbes, "question generation produced no questions");
  }
  return probes;
}

std::vector<QAProbe> AnswerProbes(std::vector<QAProbe> probes,
                                  std::string_view source,
                                  std::string_view candidate, Backend& qa,
                                  int max_in_flight) {
  // Task 2i answers probe i on the source, 2i+1 on the candidate.
  ParallelFor(probes.size() * 2, static_cast<std::size_t>(std::max(1, max_in_flight)),
              [&](std::size_t task) {
                QAProbe& probe = probes[task / 2];
                const bool on_source = task % 2 == 0;
                try {
                  QaResponse r = AnswerQuestion(qa, probe.question,
                                                on_source ? source : candidate);
                  ProbeAnswer answer{r.unanswerable ? std::string() : r.answer,
                                     r.unanswerable};
                  (on_source ? probe.on_source : probe.on_candidate) = std::move(answer);
                } catch (const Error& e) {
                  throw Error(e.code(), "answering probe " + std::to_string(task / 2) +
                                            " on " + (on_source ? "source" : "candidate") +
                                            ": " + e.what());
                }
              });
  return probes;
}

double AnswerSimilarityF1(std::string_view answer_a, std::string_view answer_b) {
  std::vector<std::string> a = NormalizeAnswer(answer_a).tokens;
  std::vector<std::string> b = NormalizeAnswer(answer_b).tokens;
  if (a.empty() && b.empty()) return 0.0;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::vector<std::string> common;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(common));
  return 2.0 * static_cast<double>(common.size()) /
         static_cast<double>(a.size() + b.size());
}

void ScoreProbes(std::vector<QAProbe>& probes, Backend* embed) {
  for (std::size_t i = 0; i < probes.size(); ++i) {
    QAProbe& p = probes[i];
    if (Unanswerable(p)) {
      p.sim_f1 = 0.0;
      if (embed) p.sim_embed = 0.0;
      continue;
    }
    p.sim_f1 = AnswerSimilarityF1(p.on_source->text, p.on_candidate->text);
    if (embed) {
      try {
        p.sim_embed = AnswerSimilarityEmbed(p.on_source->text, p.on_candidate->text, *embed);
      } catch (const Error& e) {
        throw Error(e.code(), "embedding answers of probe " + std::to_string(i) + ": " +
                                  e.what());
      }
    }
  }
}

QuestEvalReport Aggregate(std::vector<QAProbe> probes, Similarity similarity) {
  if (probes.empty()) throw Error(ErrorCode::kNoProbes, "no probes to aggregate");
  QuestEvalReport report;
  report.similarity = similarity;
  std::map<Direction, std::pair<double, int>> sums;
  for (const QAProbe& p : probes) {
    auto& [sum, n] = sums[p.direction];
    sum += Selected(p, similarity);
    ++n;
  }
  double total = 0.0;
  for (const auto& [dir, acc] : sums) {
    const double mean = acc.first / acc.second;
    report.per_direction_score[dir] = mean;
    total += mean;
  }
  report.score = total / static_cast<double>(sums.size());
  report.probes = std::move(probes);
  return report;
}

QuestEvalReport QuestEvalScore(std::string_view source, std::string_view candidate,
                               const QuestEvalConfig& config,
                               const QuestEvalBackends& backends) {
  ValidateConfig(config);
  if (!backends.qg || !backends.qa) {
    throw Error(ErrorCode::kInvalidArgument, "QuestEval needs QG and QA backends");
  }
  const bool need_embed =
      config.similarity == Similarity::kEmbedding || config.score_all_similarities;
  if (need_embed && !backends.embed) {
    throw Error(ErrorCode::kInvalidArgument,
                "embedding similarity needs an embedding backend");
  }
  std::vector<QAProbe> probes = GenerateProbes(source, candidate, config, *backends.qg);
  probes = AnswerProbes(std::move(probes), source, candidate, *backends.qa,
                        config.max_in_flight);
  ScoreProbes(probes, need_embed ? backends.embed.get() : nullptr);
  return Aggregate(std::move(probes), config.similarity);
}

nlohmann::ordered_json ReportToJson(const QuestEvalReport& report) {
  using ojson = nlohmann::ordered_json;
  auto answer = [](const std::optional<ProbeAnswer>& a) -> ojson {
    if (!a || a->unanswerable) return nullptr;
    return a->text;
  };
  ojson probes = ojson::array();
  for (const QAProbe& p : report.probes) {
    ojson row;
    row["question"] = p.question;
    row["direction"] = DirectionName(p.direction);
    row["answer_on_source"] = answer(p.on_source);
    row["answer_on_candidate"] = answer(p.on_candidate);
    row["f1"] = p.sim_f1;
    row["embedding"] = p.sim_embed ? ojson(*p.sim_embed) : ojson(nullptr);
    probes.push_back(std::move(row));
  }
  ojson per_direction = ojson::object();
  for (const auto& [dir, score] : report.per_direction_score) {
    per_direction[std::string(DirectionName(dir))] = score;
  }
  ojson doc;
  doc["similarity"] = SimilarityName(report.similarity);
  doc["score"] = report.score;
  doc["per_direction"] = per_direction;
  doc["probes"] = probes;
  return doc;
}

}  // namespace simpeval
