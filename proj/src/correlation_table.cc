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

#include "simpeval/correlation_table.h"

#include <cstdio>
#include <sstream>

#include "json.hpp"
#include "simpeval/error.h"
#include "simpeval/textproc.h"

namespace simpeval {
namespace {

std::string_view DimensionLabel(Dimension d) {
  switch (d) {
    case Dimension::kFluency: return "Fluency";
    case Dimension::kSimplicity: return "Simplicity";
    case Dimension::kMeaning: return "Meaning";
  }
  return "";
}

std::string_view MetricLabel(Metric m) {
  switch (m) {
    case Metric::kFkgl: return "FKGL";
    case Metric::kSari: return "SARI";
    case Metric::kBleu: return "BLEU";
    case Metric::kBertScore: return "BERTScore";
    case Metric::kQuestEval: return "QuestEval";
  }
  return "";
}

TableCell Correlate(std::vector<std::pair<double, double>> pairs,
                    std::string_view x_label, std::string_view y_label) {
  TableCell cell;
  cell.pairs = std::move(pairs);
  if (cell.pairs.size() < 3) {
    cell.status = CellStatus::kInsufficient;
    cell.stats.n = static_cast<long>(cell.pairs.size());
    return cell;
  }
  try {
    cell.stats = Pearson({std::string(x_label), std::string(y_label), cell.pairs});
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kDegenerateInput) throw;
    cell.status = CellStatus::kDegenerate;
    cell.stats.n = static_cast<long>(cell.pairs.size());
  }
  return cell;
}

std::string_view StatusName(CellStatus s) {
  switch (s) {
    case CellStatus::kOk: return "ok";
    case CellStatus::kInsufficient: return "insufficient";
    case CellStatus::kDegenerate: return "degenerate";
  }
  return "";
}

std::string CsvField(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string RenderMarkdown(const CorrelationTable& table) {
  std::ostringstream out;
  out << "| " << SplitName(table.split) << " | Ref-less";
  for (Dimension d : kAllDimensions) out << " | " << DimensionLabel(d);
  out << " |\n|---|:---:|---:|---:|---:|\n";
  for (const TableRow& row : table.rows) {
    out << "| " << row.label << " | ";
    if (row.metric) out << (row.reference_less ? "✓" : "✗");
    for (Dimension d : kAllDimensions) out << " | " << DisplayCell(row, d);
    out << " |\n";
  }
  if (!table.rows.empty()) {
    out << "\nPearson r x 100. FKGL is reported as -FKGL so higher is better. "
           "* p < 0.01, ** p < 0.001 (two-tailed).\n";
  }
  return out.str();
}

std::string RenderCsv(const CorrelationTable& table) {
  std::ostringstream out;
  out << "row,ref_less";
  for (Dimension d : kAllDimensions) out << "," << DimensionName(d);
  out << "\r\n";
  for (const TableRow& row : table.rows) {
    out << CsvField(row.label) << ","
        << (row.metric ? (row.reference_less ? "yes" : "no") : "");
    for (Dimension d : kAllDimensions) out << "," << CsvField(DisplayCell(row, d));
    out << "\r\n";
  }
  return out.str();
}

std::string RenderJson(const CorrelationTable& table) {
  using ojson = nlohmann::ordered_json;
  ojson rows = ojson::array();
  for (const TableRow& row : table.rows) {
    ojson r;
    r["label"] = row.label;
    r["kind"] = row.metric ? "metric" : "dimension";
    if (row.metric) {
      r["metric"] = MetricName(*row.metric);
      r["reference_less"] = row.reference_less;
      r["negated_for_display"] = row.negate_for_display;
    } else {
      r["dimension"] = DimensionName(*row.dimension);
    }
    ojson cells = ojson::object();
    for (Dimension d : kAllDimensions) {
      const auto& cell = row.cells[static_cast<int>(d)];
      if (!cell) continue;
      ojson c;
      c["status"] = StatusName(cell->status);
      c["n"] = cell->stats.n;
      if (cell->status == CellStatus::kOk) {
        c["r"] = cell->stats.r;
        c["p"] = cell->stats.p;
        c["stars"] = StarsText(cell->stats.stars);
      }
      c["display"] = DisplayCell(row, d);
      cells[std::string(DimensionName(d))] = std::move(c);
    }
    r["cells"] = std::move(cells);
    rows.push_back(std::move(r));
  }
  ojson doc;
  doc["split"] = SplitName(table.split);
  doc["rows"] = std::move(rows);
  return doc.dump(2) + "\n";
}

}  // namespace

std::string_view SplitName(Split split) {
  switch (split) {
    case Split::kSystem: return "system";
    case Split::kHuman: return "human";
    case Split::kAll: return "all";
  }
  return "";
}

std::optional<Split> ParseSplit(std::string_view name) {
  const std::string lower = AsciiLower(name);
  if (lower == "system") return Split::kSystem;
  if (lower == "human") return Split::kHuman;
  if (lower == "all") return Split::kAll;
  return std::nullopt;
}

std::optional<TableFormat> ParseTableFormat(std::string_view name) {
  const std::string lower = AsciiLower(name);
  if (lower == "markdown" || lower == "md") return TableFormat::kMarkdown;
  if (lower == "csv") return TableFormat::kCsv;
  if (lower == "json") return TableFormat::kJson;
  return std::nullopt;
}

CorrelationTable BuildTable(const std::vector<DimensionMeans>& means,
                            const ScoreTable& scores, Split split) {
  std::map<std::string, const DimensionMeans*> by_id;
  for (const DimensionMeans& dm : means) by_id[dm.instance_id] = &dm;

  CorrelationTable table;
  table.split = split;
  bool any_ok = false;
  auto note = [&](const TableCell& c) { any_ok = any_ok || c.status == CellStatus::kOk; };

  // Inter-dimension rows; each unordered pair is computed once and mirrored.
  std::map<std::pair<int, int>, TableCell> dim_cells;
  for (Dimension a : kAllDimensions) {
    for (Dimension b : kAllDimensions) {
      if (static_cast<int>(a) >= static_cast<int>(b)) continue;
      std::vector<std::pair<double, double>> pairs;
      for (const auto& [id, dm] : by_id) {
        if (dm->Get(a) && dm->Get(b)) pairs.emplace_back(*dm->Get(a), *dm->Get(b));
      }
      TableCell cell = Correlate(std::move(pairs), DimensionName(a), DimensionName(b));
      note(cell);
      dim_cells[{static_cast<int>(a), static_cast<int>(b)}] = std::move(cell);
    }
  }
  for (Dimension row_dim : kAllDimensions) {
    TableRow row;
    row.label = DimensionLabel(row_dim);
    row.dimension = row_dim;
    for (Dimension col : kAllDimensions) {
      const int r = static_cast<int>(row_dim), c = static_cast<int>(col);
      if (r == c) continue;
      row.cells[c] = dim_cells.at({std::min(r, c), std::max(r, c)});
    }
    table.rows.push_back(std::move(row));
  }

  for (Metric metric : kAllMetrics) {
    auto it = scores.find(metric);
    if (it == scores.end()) continue;
    TableRow row;
    row.label = MetricLabel(metric);
    row.metric = metric;
    row.reference_less = IsReferenceLess(metric);
    row.negate_for_display = !HigherIsBetter(metric);
    for (Dimension col : kAllDimensions) {
      std::vector<std::pair<double, double>> pairs;
      for (const auto& [id, value] : it->second) {
        auto m = by_id.find(id);
        if (m != by_id.end() && m->second->Get(col)) {
          pairs.emplace_back(value, *m->second->Get(col));
        }
      }
      TableCell cell = Correlate(std::move(pairs), MetricName(metric), DimensionName(col));
      note(cell);
      row.cells[static_cast<int>(col)] = std::move(cell);
    }
    table.rows.push_back(std::move(row));
  }
  if (!any_ok) {
    throw Error(ErrorCode::kDegenerateInput,
                "no correlation cell has 3 or more complete, non-constant pairs");
  }
  return table;
}

std::string DisplayCell(const TableRow& row, Dimension column) {
  const auto& cell = row.cells[static_cast<int>(column)];
  if (!cell) return "---";
  if (cell->status != CellStatus::kOk) return "n/a";
  const double shown = (row.negate_for_display ? -cell->stats.r : cell->stats.r) * 100.0;
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.1f", shown);
  std::string text = buf;
  if (text == "-0.0") text = "0.0";
  return text + std::string(StarsText(cell->stats.stars));
}

std::string RenderTable(const CorrelationTable& table, TableFormat format) {
  switch (format) {
    case TableFormat::kMarkdown: return RenderMarkdown(table);
    case TableFormat::kCsv: return RenderCsv(table);
    case TableFormat::kJson: return RenderJson(table);
  }
  return "";
}

}  // namespace simpeval
