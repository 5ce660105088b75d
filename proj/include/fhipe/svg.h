/*
 * Copyright 2026 The fhipe Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Minimal line charts for benchmark output. The output is a pure function of
// the input, so charts can be diffed.

#ifndef FHIPE_SVG_H_
#define FHIPE_SVG_H_

#include <string>
#include <utility>
#include <vector>

#include "fhipe/bench.h"

namespace fhipe {

enum class AxisScale { kLinear, kLog2 };

struct SvgSeries {
  std::string label;
  std::vector<std::pair<double, double>> points;  // (x, y)
};

struct SvgChart {
  std::string title;
  std::string x_label;
  std::string y_label;
  AxisScale x_scale = AxisScale::kLinear;
  std::vector<SvgSeries> series;
  std::vector<std::string> notes;  // printed under the title
};

// Throws InvalidArgumentError when a series has fewer than two points or a
// log2 axis sees a non-positive x.
std::string RenderScalingSvg(const SvgChart& chart);

// Median time against n, or against log2(alpha) when the records sweep
// alpha at fixed n. One series per (op, strategy[, n]).
SvgChart ChartFromRecords(const std::vector<BenchRecord>& records);

// Ciphertext file size (header plus payload) against n.
SvgChart CiphertextSizeChart(const std::vector<uint64_t>& n_list,
                             bool compressed);

}  // namespace fhipe

#endif  // FHIPE_SVG_H_
