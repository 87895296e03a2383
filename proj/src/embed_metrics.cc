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

#include "simpeval/embed_metrics.h"

#include <algorithm>
#include <cmath>
#include <map>

#include "simpeval/error.h"
#include "simpeval/parallel.h"

namespace simpeval {
namespace {

double PairF1(double p, double r) { return p + r > 0 ? 2 * p * r / (p + r) : 0.0; }

bool Blank(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
  });
}

}  // namespace

double ClampedCosine(const std::vector<double>& a, const std::vector<double>& b) {
  double dot = 0, na = 0, nb = 0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    dot += a[k] * b[k];
    na += a[k] * a[k];
    nb += b[k] * b[k];
  }
  if (na == 0 || nb == 0) return 0.0;
  // sqrt(na * nb) rather than sqrt(na) * sqrt(nb): identical vectors then
  // give exactly 1.
  return std::clamp(dot / std::sqrt(na * nb), 0.0, 1.0);
}

PrfScore GreedyMatch(const TokenEmbeddings& candidate,
                     const TokenEmbeddings& reference) {
  if (candidate.empty() || reference.empty()) {
    throw Error(ErrorCode::kDegenerateInput, "greedy matching needs tokens on both sides");
  }
  const std::size_t d = candidate.dim();
  auto check = [d](const TokenEmbeddings& e) {
    if (e.vectors.size() != e.tokens.size()) {
      throw Error(ErrorCode::kInvalidArgument, "token and vector counts differ");
    }
    for (const auto& v : e.vectors) {
      if (v.size() != d) {
        throw Error(ErrorCode::kInvalidArgument, "embedding dimensions differ");
      }
    }
  };
  check(candidate);
  check(reference);

  const std::size_t nc = candidate.size(), nr = reference.size();
  std::vector<double> best_for_cand(nc, 0.0), best_for_ref(nr, 0.0);
  for (std::size_t i = 0; i < nc; ++i) {
    for (std::size_t j = 0; j < nr; ++j) {
      const double sim = ClampedCosine(candidate.vectors[i], reference.vectors[j]);
      best_for_cand[i] = std::max(best_for_cand[i], sim);
      best_for_ref[j] = std::max(best_for_ref[j], sim);
    }
  }
  PrfScore out;
  for (double s : best_for_cand) out.precision += s;
  for (double s : best_for_ref) out.recall += s;
  out.precision /= static_cast<double>(nc);
  out.recall /= static_cast<double>(nr);
  out.f1 = PairF1(out.precision, out.recall);
  return out;
}

MetricScore BertScore(std::string_view candidate,
                      const std::vector<std::string>& references,
                      Backend& backend, const EmbedOptions& options) {
  if (references.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "BERTScore needs at least one reference");
  }
  std::vector<std::string> texts{std::string(candidate)};
  for (const std::string& r : references) {
    if (std::find(texts.begin(), texts.end(), r) == texts.end()) texts.push_back(r);
  }
  std::vector<TokenEmbeddings> embedded(texts.size());
  ParallelFor(texts.size(), static_cast<std::size_t>(std::max(1, options.max_in_flight)),
              [&](std::size_t i) {
                try {
                  embedded[i] = EmbedText(backend, texts[i]);
                } catch (const Error& e) {
                  throw Error(e.code(), "embedding " +
                                            std::string(i == 0 ? "candidate" : "reference") +
                                            " for BERTScore: " + e.what());
                }
              });
  std::map<std::string, const TokenEmbeddings*> by_text;
  for (std::size_t i = 0; i < texts.size(); ++i) by_text[texts[i]] = &embedded[i];

  double best = 0.0;
  for (const std::string& r : references) {
    best = std::max(best, GreedyMatch(embedded[0], *by_text.at(r)).f1);
  }
  return MakeScore(Metric::kBertScore, best);
}

double AnswerSimilarityEmbed(std::string_view answer_a,
                             std::string_view answer_b, Backend& backend) {
  if (Blank(answer_a) || Blank(answer_b)) return 0.0;
  TokenEmbeddings a = EmbedText(backend, answer_a);
  TokenEmbeddings b = EmbedText(backend, answer_b);
  return GreedyMatch(a, b).f1;
}

}  // namespace simpeval
