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

#ifndef SIMPEVAL_SCATTER_PLOT_H_
#define SIMPEVAL_SCATTER_PLOT_H_

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace simpeval {

// Static SVG scatter plot with axis ranges fitted to the data.
std::string RenderScatterSvg(const std::vector<std::pair<double, double>>& points,
                             std::string_view x_label, std::string_view y_label,
                             std::string_view title);

}  // namespace simpeval

#endif  // SIMPEVAL_SCATTER_PLOT_H_
