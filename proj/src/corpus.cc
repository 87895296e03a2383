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

#include "simpeval/corpus.h"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <tuple>
#include <utility>

#include "json.hpp"
#include "simpeval/error.h"
#include "simpeval/textproc.h"  // AsciiLower, Join

namespace simpeval {
namespace {

using json = nlohmann::json;

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool IsBlank(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n';
  });
}

// Calls fn(line_number, record) for every non-blank line.
template <typename Fn>
void ForEachRecord(std::string_view jsonl, std::string_view origin, Fn&& fn) {
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= jsonl.size()) {
    std::size_t nl = jsonl.find('\n', pos);
    if (nl == std::string_view::npos) nl = jsonl.size();
    std::string_view line = jsonl.substr(pos, nl - pos);
    ++line_no;
    pos = nl + 1;
    if (IsBlank(line)) continue;
    json record = json::parse(line, nullptr, /*allow_exceptions=*/false);
    if (record.is_discarded() || !record.is_object()) {
      throw Error(ErrorCode::kParse, std::string(origin) + ":" +
                                         std::to_string(line_no) +
                                         ": malformed JSON record");
    }
    fn(line_no, record);
  }
}

std::string Where(std::string_view origin, int line_no) {
  return std::string(origin) + ":" + std::to_string(line_no) + ": ";
}

std::string RequireString(const json& record, const char* field,
                          std::string_view origin, int line_no) {
  auto it = record.find(field);
  if (it == record.end() || !it->is_string()) {
    throw Error(ErrorCode::kParse, Where(origin, line_no) + "missing string field '" +
                                       field + "'");
  }
  return it->get<std::string>();
}

std::vector<Instance> ParseInstancesImpl(std::string_view jsonl,
                                         std::string_view origin_name) {
  std::vector<Instance> out;
  std::set<std::string> seen;
  ForEachRecord(jsonl, origin_name, [&](int line_no, const json& record) {
    Instance inst;
    inst.id = RequireString(record, "id", origin_name, line_no);
    inst.source = RequireString(record, "source", origin_name, line_no);
    inst.candidate = RequireString(record, "candidate", origin_name, line_no);
    if (inst.id.empty()) {
      throw Error(ErrorCode::kParse, Where(origin_name, line_no) + "empty id");
    }
    if (IsBlank(inst.source) || IsBlank(inst.candidate)) {
      throw Error(ErrorCode::kEmptyText,
                  Where(origin_name, line_no) + "instance '" + inst.id +
                      "' has empty source or candidate");
    }
    if (auto it = record.find("references"); it != record.end()) {
      if (!it->is_array()) {
        throw Error(ErrorCode::kParse,
                    Where(origin_name, line_no) + "'references' must be an array");
      }
      for (const json& ref : *it) {
        if (!ref.is_string()) {
          throw Error(ErrorCode::kParse, Where(origin_name, line_no) +
                                             "references must be strings");
        }
        std::string text = ref.get<std::string>();
        if (IsBlank(text)) {
          throw Error(ErrorCode::kEmptyText, Where(origin_name, line_no) +
                                                 "instance '" + inst.id +
                                                 "' has an empty reference");
        }
        inst.references.push_back(std::move(text));
      }
    }
    if (auto it = record.find("origin"); it != record.end() && !it->is_null()) {
      std::optional<Origin> origin =
          it->is_string() ? ParseOrigin(it->get<std::string>()) : std::nullopt;
      if (!origin) {
        throw Error(ErrorCode::kParse,
                    Where(origin_name, line_no) + "unknown origin value");
      }
      inst.origin = *origin;
    }
    if (!seen.insert(inst.id).second) {
      throw Error(ErrorCode::kDuplicateId, Where(origin_name, line_no) +
                                               "duplicate instance id '" +
                                               inst.id + "'");
    }
    out.push_back(std::move(inst));
  });
  return out;
}

std::vector<Rating> ParseRatingsImpl(std::string_view jsonl, const Scale& scale,
                                     std::string_view origin_name) {
  std::vector<Rating> out;
  std::set<std::tuple<std::string, Dimension, std::string>> seen;
  ForEachRecord(jsonl, origin_name, [&](int line_no, const json& record) {
    Rating r;
    r.instance_id = RequireString(record, "instance_id", origin_name, line_no);
    std::string dim = RequireString(record, "dimension", origin_name, line_no);
    r.annotator_id = RequireString(record, "annotator_id", origin_name, line_no);
    auto score = record.find("score");
    if (score == record.end() || !score->is_number()) {
      throw Error(ErrorCode::kParse,
                  Where(origin_name, line_no) + "missing numeric field 'score'");
    }
    r.score = score->get<double>();
    std::optional<Dimension> parsed = ParseDimension(dim);
    if (!parsed) {
      throw Error(ErrorCode::kUnknownDimension,
                  Where(origin_name, line_no) + "unknown dimension '" + dim + "'");
    }
    r.dimension = *parsed;
    if (!scale.Contains(r.score)) {
      std::ostringstream msg;
      msg << Where(origin_name, line_no) << "score " << r.score
          << " outside scale [" << scale.min << ", " << scale.max << "]";
      throw Error(ErrorCode::kOutOfBounds, msg.str());
    }
    if (!seen.emplace(r.instance_id, r.dimension, r.annotator_id).second) {
      throw Error(ErrorCode::kDuplicateId,
                  Where(origin_name, line_no) + "duplicate rating for (" +
                      r.instance_id + ", " + std::string(DimensionName(r.dimension)) +
                      ", " + r.annotator_id + ")");
    }
    out.push_back(std::move(r));
  });
  return out;
}

}  // namespace

std::string_view OriginName(Origin origin) {
  switch (origin) {
    case Origin::kSystem: return "system";
    case Origin::kHuman: return "human";
    case Origin::kUnknown: return "unknown";
  }
  return "unknown";
}

std::optional<Origin> ParseOrigin(std::string_view name) {
  std::string lower = AsciiLower(name);
  if (lower == "system") return Origin::kSystem;
  if (lower == "human") return Origin::kHuman;
  if (lower == "unknown") return Origin::kUnknown;
  return std::nullopt;
}

std::string_view DimensionName(Dimension dim) {
  switch (dim) {
    case Dimension::kFluency: return "fluency";
    case Dimension::kSimplicity: return "simplicity";
    case Dimension::kMeaning: return "meaning";
  }
  return "unknown";
}

std::optional<Dimension> ParseDimension(std::string_view name) {
  std::string lower = AsciiLower(name);
  if (lower == "fluency") return Dimension::kFluency;
  if (lower == "simplicity") return Dimension::kSimplicity;
  if (lower == "meaning") return Dimension::kMeaning;
  return std::nullopt;
}

std::vector<Instance> LoadInstances(const std::filesystem::path& path) {
  return ParseInstancesImpl(ReadFile(path), path.string());
}

std::vector<Instance> ParseInstances(std::string_view jsonl) {
  return ParseInstancesImpl(jsonl, "<instances>");
}

std::string SerializeInstance(const Instance& instance) {
  json record = {
      {"id", instance.id},
      {"source", instance.source},
      {"candidate", instance.candidate},
      {"references", instance.references},
      {"origin", std::string(OriginName(instance.origin))},
  };
  return record.dump();
}

std::vector<Rating> LoadRatings(const std::filesystem::path& path,
                                const Scale& scale) {
  return ParseRatingsImpl(ReadFile(path), scale, path.string());
}

std::vector<Rating> ParseRatings(std::string_view jsonl, const Scale& scale) {
  return ParseRatingsImpl(jsonl, scale, "<ratings>");
}

CorpusManifest LoadManifest(const std::filesystem::path& path) {
  json doc = json::parse(ReadFile(path), nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded() || !doc.is_object()) {
    throw Error(ErrorCode::kParse, path.string() + ": malformed manifest");
  }
  auto scale = doc.find("scale");
  if (scale == doc.end() || !scale->is_object() ||
      !scale->contains("min") || !scale->contains("max") ||
      !(*scale)["min"].is_number() || !(*scale)["max"].is_number()) {
    throw Error(ErrorCode::kParse,
                path.string() + ": manifest needs scale {min, max}");
  }
  CorpusManifest m;
  m.scale.min = (*scale)["min"].get<double>();
  m.scale.max = (*scale)["max"].get<double>();
  if (!(m.scale.min < m.scale.max)) {
    throw Error(ErrorCode::kParse, path.string() + ": scale min must be < max");
  }
  const std::filesystem::path base = path.parent_path();
  auto resolve = [&](const char* key) -> std::filesystem::path {
    auto it = doc.find(key);
    if (it == doc.end() || !it->is_string()) return {};
    std::filesystem::path p = it->get<std::string>();
    return p.is_absolute() ? p : base / p;
  };
  m.instances = resolve("instances");
  m.ratings = resolve("ratings");
  if (auto it = doc.find("expected_ratings_per_cell");
      it != doc.end() && it->is_number_integer()) {
    m.expected_ratings_per_cell = it->get<int>();
  }
  return m;
}

RatedCorpus::RatedCorpus(std::vector<Instance> instances,
                         std::vector<Rating> ratings, Scale scale,
                         std::optional<int> expected_per_cell)
    : instances_(std::move(instances)),
      ratings_(std::move(ratings)),
      scale_(scale) {
  std::set<std::string> ids;
  for (const Instance& inst : instances_) ids.insert(inst.id);
  std::map<std::pair<std::string, Dimension>, int> per_cell;
  for (const Rating& r : ratings_) {
    if (!ids.count(r.instance_id)) {
      throw Error(ErrorCode::kParse,
                  "rating references unknown instance '" + r.instance_id + "'");
    }
    if (!scale_.Contains(r.score)) {
      throw Error(ErrorCode::kOutOfBounds,
                  "rating for '" + r.instance_id + "' outside declared scale");
    }
    ++per_cell[{r.instance_id, r.dimension}];
  }
  if (expected_per_cell) {
    for (const auto& [key, count] : per_cell) {
      if (count != *expected_per_cell) {
        warnings_.push_back("instance '" + key.first + "' has " +
                            std::to_string(count) + " " +
                            std::string(DimensionName(key.second)) +
                            " ratings, expected " +
                            std::to_string(*expected_per_cell));
      }
    }
  }
}

MeansResult ComputeDimensionMeans(const std::vector<Rating>& ratings) {
  std::map<std::string, std::array<std::vector<double>, 3>> cells;
  for (const Rating& r : ratings) {
    cells[r.instance_id][static_cast<int>(r.dimension)].push_back(r.score);
  }
  MeansResult result;
  for (auto& [id, per_dim] : cells) {
    DimensionMeans dm;
    dm.instance_id = id;
    std::vector<std::string> missing;
    for (Dimension d : kAllDimensions) {
      std::vector<double>& values = per_dim[static_cast<int>(d)];
      if (values.empty()) {
        missing.emplace_back(DimensionName(d));
        continue;
      }
      // Summing in sorted order makes the mean independent of rating order.
      std::sort(values.begin(), values.end());
      double sum = 0.0;
      for (double v : values) sum += v;
      dm.mean[static_cast<int>(d)] = sum / static_cast<double>(values.size());
      dm.count[static_cast<int>(d)] = static_cast<int>(values.size());
    }
    if (!missing.empty()) {
      result.warnings.push_back("instance '" + id + "' has no ratings for " +
                                Join(missing, ", "));
    }
    result.means.push_back(std::move(dm));
  }
  return result;
}

MeansResult ComputeDimensionMeans(const RatedCorpus& corpus) {
  MeansResult result = ComputeDimensionMeans(corpus.ratings());
  std::set<std::string> rated;
  for (const DimensionMeans& dm : result.means) rated.insert(dm.instance_id);
  for (const Instance& inst : corpus.instances()) {
    if (!rated.count(inst.id)) {
      result.warnings.push_back("instance '" + inst.id +
                                "' has no ratings and is dropped");
    }
  }
  return result;
}

}  // namespace simpeval
