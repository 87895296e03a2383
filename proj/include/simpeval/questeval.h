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

// Reference-less meaning preservation via question generation and answering.
//
// Questions are generated on one text, answered against both the source and
// the candidate, and the two answers compared with a pluggable similarity:
// SQuAD-style token F1 or greedy embedding matching. A probe whose answer is
// unanswerable on either side scores 0 under both similarities.

#ifndef SIMPEVAL_QUESTEVAL_H_
#define SIMPEVAL_QUESTEVAL_H_

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "simpeval/backend.h"

namespace simpeval {

enum class Direction { kFromSource, kFromCandidate };
enum class Similarity { kTokenF1, kEmbedding };

std::string_view DirectionName(Direction d);
// Accepts "from_source"/"source" and "from_candidate"/"candidate".
std::optional<Direction> ParseDirection(std::string_view name);
std::string_view SimilarityName(Similarity s);
// Accepts "token_f1"/"f1" and "embedding"/"bertscore".
std::optional<Similarity> ParseSimilarity(std::string_view name);

struct QuestEvalConfig {
  Similarity similarity = Similarity::kEmbedding;
  std::vector<Direction> directions = {Direction::kFromSource,
                                       Direction::kFromCandidate};
  int questions_per_text = 10;
  // Also fill sim_embed when scoring with token F1 (and vice versa the F1
  // column is always filled). Used by the audit report.
  bool score_all_similarities = false;
  int max_in_flight = 8;
};

// Throws kInvalidArgument.
void ValidateConfig(const QuestEvalConfig& config);

struct ProbeAnswer {
  std::string text;
  bool unanswerable = false;
};

struct QAProbe {
  std::string question;
  Direction direction = Direction::kFromSource;
  std::optional<ProbeAnswer> on_source;
  std::optional<ProbeAnswer> on_candidate;
  double sim_f1 = 0.0;
  std::optional<double> sim_embed;  // unset without an embedding backend
};

struct QuestEvalBackends {
  std::shared_ptr<Backend> qg;
  std::shared_ptr<Backend> qa;
  std::shared_ptr<Backend> embed;  // required for Similarity::kEmbedding
};

struct QuestEvalReport {
  std::vector<QAProbe> probes;
  std::map<Direction, double> per_direction_score;
  double score = 0.0;
  Similarity similarity = Similarity::kEmbedding;
};

// Up to questions_per_text questions per enabled direction, exact duplicates
// and blank questions removed. Throws kEmptyText on blank input and kNoProbes
// when nothing was generated.
std::vector<QAProbe> GenerateProbes(std::string_view source,
                                    std::string_view candidate,
                                    const QuestEvalConfig& config,
                                    Backend& qg);

// Answers every question against both texts. Failures carry the probe index.
std::vector<QAProbe> AnswerProbes(std::vector<QAProbe> probes,
                                  std::string_view source,
                                  std::string_view candidate, Backend& qa,
                                  int max_in_flight = 8);

// 2 * |multiset overlap| / (|a| + |b|) over NormalizeAnswer tokens; 0 when
// both are empty.
double AnswerSimilarityF1(std::string_view answer_a, std::string_view answer_b);

// Fills sim_f1 and, when `embed` is given, sim_embed.
void ScoreProbes(std::vector<QAProbe>& probes, Backend* embed);

// Per-direction means of the configured similarity, and their mean.
// Directions that produced no probes are left out.
QuestEvalReport Aggregate(std::vector<QAProbe> probes, Similarity similarity);

QuestEvalReport QuestEvalScore(std::string_view source,
                               std::string_view candidate,
                               const QuestEvalConfig& config,
                               const QuestEvalBackends& backends);

// {"similarity", "score", "per_direction": {...}, "probes": [{"question",
// "direction", "answer_on_source", "answer_on_candidate", "f1", "embedding"}]}
// with null answers for UNANSWERABLE.
nlohmann::ordered_json ReportToJson(const QuestEvalReport& report);

}  // namespace simpeval

#endif  // SIMPEVAL_QUESTEVAL_H_
