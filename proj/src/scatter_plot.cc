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

#include "simpeval/scatter_plot.h"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace simpeval {
namespace {

constexpr double kWidth = 480, kHeight = 360, kMargin = 56;

std::string Escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string Num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

std::string Tick(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}

}  // namespace

std::string RenderScatterSvg(const std::vector<std::pair<double, double>>& points,
                             std::string_view x_label, std::string_view y_label,
                             std::string_view title) {
  double x0 = 0, x1 = 1, y0 = 0, y1 = 1;
  if (!points.empty()) {
    auto [xmin, xmax] = std::minmax_element(
        points.begin(), points.end(), [](auto& a, auto& b) { return a.first < b.first; });
    auto [ymin, ymax] = std::minmax_element(
        points.begin(), points.end(), [](auto& a, auto& b) { return a.second < b.second; });
    x0 = xmin->first, x1 = xmax->first, y0 = ymin->second, y1 = ymax->second;
    if (x1 == x0) x0 -= 0.5, x1 += 0.5;
    if (y1 == y0) y0 -= 0.5, y1 += 0.5;
  }
  const double pw = kWidth - 2 * kMargin, ph = kHeight - 2 * kMargin;
  auto sx = [&](double x) { return kMargin + (x - x0) / (x1 - x0) * pw; };
  auto sy = [&](double y) { return kHeight - kMargin - (y - y0) / (y1 - y0) * ph; };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
      << kHeight << "\" font-family=\"sans-serif\" font-size=\"11\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<text x=\"" << kWidth / 2 << "\" y=\"20\" text-anchor=\"middle\" font-size=\"13\">"
      << Escape(title) << "</text>\n";
  svg << "<rect x=\"" << kMargin << "\" y=\"" << kMargin << "\" width=\"" << pw
      << "\" height=\"" << ph << "\" fill=\"none\" stroke=\"#444\"/>\n";
  svg << "<text x=\"" << kMargin << "\" y=\"" << kHeight - kMargin + 14 << "\">" << Tick(x0)
      << "</text>\n";
  svg << "<text x=\"" << kWidth - kMargin << "\" y=\"" << kHeight - kMargin + 14
      << "\" text-anchor=\"end\">" << Tick(x1) << "</text>\n";
  svg << "<text x=\"" << kMargin - 4 << "\" y=\"" << kHeight - kMargin
      << "\" text-anchor=\"end\">" << Tick(y0) << "</text>\n";
  svg << "<text x=\"" << kMargin - 4 << "\" y=\"" << kMargin + 8 << "\" text-anchor=\"end\">"
      << Tick(y1) << "</text>\n";
  svg << "<text x=\"" << kWidth / 2 << "\" y=\"" << kHeight - 12
      << "\" text-anchor=\"middle\">" << Escape(x_label) << "</text>\n";
  svg << "<text transform=\"translate(14," << kHeight / 2
      << ") rotate(-90)\" text-anchor=\"middle\">" << Escape(y_label) << "</text>\n";
  for (const auto& [x, y] : points) {
    svg << "<circle cx=\"" << Num(sx(x)) << "\" cy=\"" << Num(sy(y))
        << "\" r=\"3\" fill=\"#1f77b4\" fill-opacity=\"0.6\"/>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace simpeval
