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

// Metric x dimension correlation tables in the layout of the usual
// human-judgement study: inter-dimension rows first, then one row per
// metric, columns Fluency / Simplicity / Meaning.

#ifndef SIMPEVAL_CORRELATION_TABLE_H_
#define SIMPEVAL_CORRELATION_TABLE_H_

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "simpeval/corpus.h"
#include "simpeval/metric_score.h"
#include "simpeval/stats.h"

namespace simpeval {

enum class Split { kSystem, kHuman, kAll };

std::string_view SplitName(Split split);
std::optional<Split> ParseSplit(std::string_view name);

enum class CellStatus { kOk, kInsufficient, kDegenerate };

struct TableCell {
  CellStatus status = CellStatus::kOk;
  CorrelationCell stats;  // meaningful only when status == kOk
  // Complete (x, y) pairs, in instance-id order.
  std::vector<std::pair<double, double>> pairs;
};

struct TableRow {
  std::string label;
  std::optional<Dimension> dimension;  // set for inter-dimension rows
  std::optional<Metric> metric;        // set for metric rows
  bool reference_less = false;
  // Lower-is-better metrics are correlated raw and shown negated.
  bool negate_for_display = false;
  // Indexed by Dimension; empty on the diagonal of inter-dimension rows.
  std::array<std::optional<TableCell>, 3> cells;
};

struct CorrelationTable {
  Split split = Split::kAll;
  std::vector<TableRow> rows;
};

// metric -> instance id -> value.
using ScoreTable = std::map<Metric, std::map<std::string, double>>;

// Correlates each metric with each dimension mean over the instances that
// have both, and each pair of dimensions with each other. Cells with fewer
// than 3 pairs are kInsufficient; constant series are kDegenerate. Throws
// kDegenerateInput when no cell could be computed.
CorrelationTable BuildTable(const std::vector<DimensionMeans>& means,
                            const ScoreTable& scores, Split split);

// r x 100 with one decimal and significance stars, e.g. "66.5**". Sign is
// flipped for negate_for_display rows. "---" on the diagonal, "n/a" for
// cells that could not be computed.
std::string DisplayCell(const TableRow& row, Dimension column);

enum class TableFormat { kMarkdown, kCsv, kJson };

std::optional<TableFormat> ParseTableFormat(std::string_view name);

std::string RenderTable(const CorrelationTable& table, TableFormat format);

}  // namespace simpeval

#endif  // SIMPEVAL_CORRELATION_TABLE_H_
