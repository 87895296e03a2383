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

#ifndef SIMPEVAL_TOKEN_EMBEDDINGS_H_
#define SIMPEVAL_TOKEN_EMBEDDINGS_H_

#include <cstddef>
#include <string>
#include <vector>

namespace simpeval {

// Contextual token vectors for one text. |tokens| == |vectors| and every
// vector has the same dimension.
struct TokenEmbeddings {
  std::vector<std::string> tokens;
  std::vector<std::vector<double>> vectors;

  std::size_t size() const { return tokens.size(); }
  bool empty() const { return tokens.empty(); }
  std::size_t dim() const { return vectors.empty() ? 0 : vectors.front().size(); }

  bool operator==(const TokenEmbeddings&) const = default;
};

}  // namespace simpeval

#endif  // SIMPEVAL_TOKEN_EMBEDDINGS_H_
