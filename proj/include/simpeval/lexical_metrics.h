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

// Sentence-level lexical metrics: FKGL, BLEU and SARI.

#ifndef SIMPEVAL_LEXICAL_METRICS_H_
#define SIMPEVAL_LEXICAL_METRICS_H_

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "simpeval/metric_score.h"
#include "simpeval/textproc.h"

namespace simpeval {

struct ReadabilityCounts {
  int sentences = 0;
  int words = 0;
  int syllables = 0;
};

// Words are tokens with at least one alphanumeric byte; punctuation tokens
// are not counted.
ReadabilityCounts CountReadability(std::string_view text);

// 0.39 * words/sentences + 11.8 * syllables/words - 15.59.
double FkglFromCounts(const ReadabilityCounts& counts);

// Throws kDegenerateInput when the text has no words.
MetricScore Fkgl(std::string_view text);

inline constexpr int kMaxNGramOrder = 4;

// BLEU-4 on pre-tokenized input. Zero n-gram matches for n >= 2 are
// smoothed to 1 / (total + 1). Brevity penalty uses the closest reference
// length, preferring the shorter one on ties.
double SentenceBleu(const std::vector<std::string>& candidate,
                    const std::vector<std::vector<std::string>>& references);

// Tokenizes with Tokenize(). Throws kInvalidArgument without references.
// An empty candidate scores 0.
MetricScore Bleu(std::string_view candidate,
                 const std::vector<std::string>& references);

// How a component whose predicted and gold n-gram sets are both empty is
// scored. kScoreOne treats it as vacuously correct; kScoreZero reproduces the
// original reference script, which scores every 0/0 as 0.
enum class VacuousSets { kScoreOne, kScoreZero };

struct SariOptions {
  VacuousSets vacuous = VacuousSets::kScoreOne;
};

struct SariBreakdown {
  // Per n-gram order (index 0 is unigrams), each in [0, 1].
  std::array<double, kMaxNGramOrder> add_f1{};
  std::array<double, kMaxNGramOrder> keep_f1{};
  std::array<double, kMaxNGramOrder> del_precision{};
  // 100 * mean over orders of (add + keep + del) / 3.
  double score = 0.0;
};

SariBreakdown SentenceSari(
    const std::vector<std::string>& source,
    const std::vector<std::string>& candidate,
    const std::vector<std::vector<std::string>>& references,
    const SariOptions& options = {});

// Tokenizes with Tokenize(). Throws kEmptyText for an empty source and
// kInvalidArgument without references.
MetricScore Sari(std::string_view source, std::string_view candidate,
                 const std::vector<std::string>& references,
                 const SariOptions& options = {});

}  // namespace simpeval

#endif  // SIMPEVAL_LEXICAL_METRICS_H_
