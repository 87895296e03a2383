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

// Evaluation instances, human ratings and per-instance dimension means.
//
// On disk a corpus is two JSON-lines files joined by instance id:
//
//   instances: {"id", "source", "candidate", "references"?, "origin"?}
//   ratings:   {"instance_id", "dimension", "annotator_id", "score"}
//
// plus an optional manifest declaring the rating scale.

#ifndef SIMPEVAL_CORPUS_H_
#define SIMPEVAL_CORPUS_H_

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace simpeval {

enum class Origin { kSystem, kHuman, kUnknown };

std::string_view OriginName(Origin origin);
std::optional<Origin> ParseOrigin(std::string_view name);

// Order matches the columns of the correlation tables.
enum class Dimension { kFluency = 0, kSimplicity = 1, kMeaning = 2 };
inline constexpr std::array<Dimension, 3> kAllDimensions = {
    Dimension::kFluency, Dimension::kSimplicity, Dimension::kMeaning};

std::string_view DimensionName(Dimension dim);
// Case-insensitive.
std::optional<Dimension> ParseDimension(std::string_view name);

struct Instance {
  std::string id;
  std::string source;
  std::string candidate;
  std::vector<std::string> references;
  Origin origin = Origin::kUnknown;
};

struct Scale {
  double min = 1.0;
  double max = 5.0;

  bool Contains(double v) const { return v >= min && v <= max; }
};

struct Rating {
  std::string instance_id;
  Dimension dimension = Dimension::kFluency;
  std::string annotator_id;
  double score = 0.0;
};

struct CorpusManifest {
  Scale scale;
  std::filesystem::path instances;  // may be empty
  std::filesystem::path ratings;    // may be empty
  // Ratings per (instance, dimension) the collection was designed for;
  // deviations are reported as warnings only.
  std::optional<int> expected_ratings_per_cell;
};

// Throws kParse (with line number), kDuplicateId or kEmptyText.
std::vector<Instance> LoadInstances(const std::filesystem::path& path);
std::vector<Instance> ParseInstances(std::string_view jsonl);

// One canonical JSON line (sorted keys, all fields present), no newline.
std::string SerializeInstance(const Instance& instance);

// Throws kParse, kOutOfBounds, kUnknownDimension or kDuplicateId.
std::vector<Rating> LoadRatings(const std::filesystem::path& path,
                                const Scale& scale);
std::vector<Rating> ParseRatings(std::string_view jsonl, const Scale& scale);

// Relative paths in the manifest resolve against its directory.
CorpusManifest LoadManifest(const std::filesystem::path& path);

// Instances joined with their ratings. Immutable after construction.
class RatedCorpus {
 public:
  // Throws kParse when a rating names an unknown instance. When
  // expected_per_cell is set, cells with a different count add a warning.
  RatedCorpus(std::vector<Instance> instances, std::vector<Rating> ratings,
              Scale scale, std::optional<int> expected_per_cell = {});

  const std::vector<Instance>& instances() const { return instances_; }
  const std::vector<Rating>& ratings() const { return ratings_; }
  const Scale& scale() const { return scale_; }
  const std::vector<std::string>& warnings() const { return warnings_; }

 private:
  std::vector<Instance> instances_;
  std::vector<Rating> ratings_;
  Scale scale_;
  std::vector<std::string> warnings_;
};

struct DimensionMeans {
  std::string instance_id;
  std::array<std::optional<double>, 3> mean;
  std::array<int, 3> count = {0, 0, 0};

  const std::optional<double>& Get(Dimension d) const {
    return mean[static_cast<int>(d)];
  }
  bool Complete() const {
    return mean[0].has_value() && mean[1].has_value() && mean[2].has_value();
  }
};

struct MeansResult {
  // Sorted by instance id.
  std::vector<DimensionMeans> means;
  std::vector<std::string> warnings;
};

// Arithmetic mean per (instance, dimension). Instances missing a dimension
// keep the others and are flagged; instances with no ratings are dropped.
MeansResult ComputeDimensionMeans(const std::vector<Rating>& ratings);
MeansResult ComputeDimensionMeans(const RatedCorpus& corpus);

}  // namespace simpeval

#endif  // SIMPEVAL_CORPUS_H_
