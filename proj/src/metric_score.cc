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

#include "simpeval/metric_score.h"

#include "simpeval/textproc.h"

namespace simpeval {

std::string_view MetricName(Metric metric) {
  switch (metric) {
    case Metric::kFkgl: return "fkgl";
    case Metric::kSari: return "sari";
    case Metric::kBleu: return "bleu";
    case Metric::kBertScore: return "bertscore";
    case Metric::kQuestEval: return "questeval";
  }
  return "unknown";
}

std::optional<Metric> ParseMetric(std::string_view name) {
  const std::string lower = AsciiLower(name);
  for (Metric m : kAllMetrics) {
    if (MetricName(m) == lower) return m;
  }
  return std::nullopt;
}

bool HigherIsBetter(Metric metric) { return metric != Metric::kFkgl; }

bool IsReferenceLess(Metric metric) {
  return metric == Metric::kFkgl || metric == Metric::kQuestEval;
}

}  // namespace simpeval
