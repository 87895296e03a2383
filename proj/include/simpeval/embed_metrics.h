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

// Greedy cosine matching over contextual token embeddings (BERTScore-style).
// No IDF weighting and no baseline rescaling; negative cosines clamp to 0.

#ifndef SIMPEVAL_EMBED_METRICS_H_
#define SIMPEVAL_EMBED_METRICS_H_

#include <string>
#include <string_view>
#include <vector>

#include "simpeval/backend.h"
#include "simpeval/metric_score.h"
#include "simpeval/token_embeddings.h"

namespace simpeval {

struct PrfScore {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

// Cosine similarity clamped to [0, 1]; 0 when either vector is all zeros.
double ClampedCosine(const std::vector<double>& a, const std::vector<double>& b);

// Recall averages, over reference tokens, the best clamped cosine against any
// candidate token; precision is the mirror image. Throws kDegenerateInput on
// an empty side and kInvalidArgument on a dimension mismatch.
PrfScore GreedyMatch(const TokenEmbeddings& candidate,
                     const TokenEmbeddings& reference);

struct EmbedOptions {
  // Bound on concurrent backend calls.
  int max_in_flight = 8;
};

// Max over references of the greedy-match F1. Each distinct text is embedded
// once, one text per backend request. Throws kInvalidArgument without
// references; backend errors propagate with context.
MetricScore BertScore(std::string_view candidate,
                      const std::vector<std::string>& references,
                      Backend& backend, const EmbedOptions& options = {});

// Greedy-match F1 between the embeddings of two short answers. A blank answer
// on either side scores 0 without a backend call.
double AnswerSimilarityEmbed(std::string_view answer_a,
                             std::string_view answer_b, Backend& backend);

}  // namespace simpeval

#endif  // SIMPEVAL_EMBED_METRICS_H_
