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

// Pearson correlation with a two-tailed Student-t significance test.

#ifndef SIMPEVAL_STATS_H_
#define SIMPEVAL_STATS_H_

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace simpeval {

// Regularized incomplete beta I_x(a, b) by Lentz's continued fraction, to
// roughly 1e-15 relative accuracy. Requires a, b > 0 and x in [0, 1].
double RegularizedIncompleteBeta(double a, double b, double x);

// P(|T| >= |t|) for Student's t with `df` degrees of freedom.
double StudentTTwoTailedP(double t, double df);

// Two-tailed p-value of a sample correlation r over n pairs (df = n - 2).
double PearsonPValue(double r, long n);

struct PairedSeries {
  std::string label_x;
  std::string label_y;
  std::vector<std::pair<double, double>> pairs;
};

enum class Stars { kNone, kOne, kTwo };

// ** when p < 0.001, * when p < 0.01.
Stars StarsForP(double p);
std::string_view StarsText(Stars stars);

struct CorrelationCell {
  double r = 0.0;
  double p = 1.0;
  long n = 0;
  Stars stars = Stars::kNone;
};

// Throws kInvalidArgument for n < 3 or non-finite values, kDegenerateInput
// when either side has zero variance.
CorrelationCell Pearson(const PairedSeries& series);

}  // namespace simpeval

#endif  // SIMPEVAL_STATS_H_
