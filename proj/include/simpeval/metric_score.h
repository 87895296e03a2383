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

#ifndef SIMPEVAL_METRIC_SCORE_H_
#define SIMPEVAL_METRIC_SCORE_H_

#include <array>
#include <optional>
#include <string_view>

namespace simpeval {

// Row order of the correlation tables.
enum class Metric { kFkgl, kSari, kBleu, kBertScore, kQuestEval };
inline constexpr std::array<Metric, 5> kAllMetrics = {
    Metric::kFkgl, Metric::kSari, Metric::kBleu, Metric::kBertScore,
    Metric::kQuestEval};

std::string_view MetricName(Metric metric);
std::optional<Metric> ParseMetric(std::string_view name);

// FKGL is lower-is-better; every other metric is higher-is-better.
bool HigherIsBetter(Metric metric);
// Needs only source and candidate.
bool IsReferenceLess(Metric metric);

struct MetricScore {
  Metric metric = Metric::kBleu;
  double value = 0.0;
  bool higher_is_better = true;
};

inline MetricScore MakeScore(Metric metric, double value) {
  return MetricScore{metric, value, HigherIsBetter(metric)};
}

}  // namespace simpeval

#endif  // SIMPEVAL_METRIC_SCORE_H_
