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

#include "fhipe/svg.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>

#include "fhipe/errors.h"
#include "fhipe/wire_format.h"

namespace fhipe {
namespace {

constexpr double kWidth = 800, kHeight = 500;
constexpr double kLeft = 90, kRight = 170, kTop = 60, kBottom = 60;
constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c",
                                    "#9467bd", "#ff7f0e", "#8c564b",
                                    "#e377c2", "#17becf"};

std::string Num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

std::string Tick(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4g", v);
  return buf;
}

std::string Escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Range {
  double lo = 0, hi = 1;
  void Pad() {
    if (hi - lo < 1e-12) {
      lo -= 1;
      hi += 1;
    }
  }
};

}  // namespace

std::string RenderScalingSvg(const SvgChart& chart) {
  if (chart.series.empty()) throw InvalidArgumentError("chart has no series");
  Range xr{INFINITY, -INFINITY}, yr{0, -INFINITY};
  for (const auto& s : chart.series) {
    if (s.points.size() < 2) {
      throw InvalidArgumentError("series '" + s.label +
                                 "' has fewer than two points");
    }
    for (auto [x, y] : s.points) {
      if (chart.x_scale == AxisScale::kLog2) {
        if (x <= 0) throw InvalidArgumentError("log2 axis needs x > 0");
        x = std::log2(x);
      }
      xr.lo = std::min(xr.lo, x);
      xr.hi = std::max(xr.hi, x);
      yr.hi = std::max(yr.hi, y);
    }
  }
  xr.Pad();
  yr.Pad();
  yr.hi *= 1.05;

  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  auto px = [&](double x) {
    if (chart.x_scale == AxisScale::kLog2) x = std::log2(x);
    return kLeft + (x - xr.lo) / (xr.hi - xr.lo) * plot_w;
  };
  auto py = [&](double y) {
    return kTop + plot_h - (y - yr.lo) / (yr.hi - yr.lo) * plot_h;
  };

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 800 500\" "
         "width=\"800\" height=\"500\" font-family=\"sans-serif\" "
         "font-size=\"12\">\n";
  out += "<rect width=\"800\" height=\"500\" fill=\"white\"/>\n";
  out += "<text x=\"400\" y=\"24\" text-anchor=\"middle\" font-size=\"16\">" +
         Escape(chart.title) + "</text>\n";
  for (size_t i = 0; i < chart.notes.size(); ++i) {
    out += "<text x=\"400\" y=\"" + Num(42 + 14 * i) +
           "\" text-anchor=\"middle\" fill=\"#555\">" +
           Escape(chart.notes[i]) + "</text>\n";
  }

  // Axes and ticks.
  out += "<g stroke=\"black\">\n";
  out += "<line x1=\"" + Num(kLeft) + "\" y1=\"" + Num(kTop + plot_h) +
         "\" x2=\"" + Num(kLeft + plot_w) + "\" y2=\"" + Num(kTop + plot_h) +
         "\"/>\n";
  out += "<line x1=\"" + Num(kLeft) + "\" y1=\"" + Num(kTop) + "\" x2=\"" +
         Num(kLeft) + "\" y2=\"" + Num(kTop + plot_h) + "\"/>\n";
  out += "</g>\n";
  for (int i = 0; i <= 5; ++i) {
    const double t = xr.lo + (xr.hi - xr.lo) * i / 5;
    const double x = kLeft + plot_w * i / 5;
    const std::string label =
        chart.x_scale == AxisScale::kLog2 ? "2^" + Tick(t) : Tick(t);
    out += "<text x=\"" + Num(x) + "\" y=\"" + Num(kTop + plot_h + 18) +
           "\" text-anchor=\"middle\">" + label + "</text>\n";
    const double v = yr.lo + (yr.hi - yr.lo) * i / 5;
    out += "<text x=\"" + Num(kLeft - 6) + "\" y=\"" +
           Num(py(v) + 4) + "\" text-anchor=\"end\">" + Tick(v) +
           "</text>\n";
  }
  out += "<text x=\"" + Num(kLeft + plot_w / 2) + "\" y=\"" +
         Num(kHeight - 16) + "\" text-anchor=\"middle\">" +
         Escape(chart.x_label) + "</text>\n";
  out += "<text transform=\"translate(20 " + Num(kTop + plot_h / 2) +
         ") rotate(-90)\" text-anchor=\"middle\">" + Escape(chart.y_label) +
         "</text>\n";

  for (size_t i = 0; i < chart.series.size(); ++i) {
    const auto& s = chart.series[i];
    const char* color = kPalette[i % std::size(kPalette)];
    auto sorted = s.points;
    std::sort(sorted.begin(), sorted.end());
    out += "<polyline fill=\"none\" stroke=\"" + std::string(color) +
           "\" stroke-width=\"2\" points=\"";
    for (size_t j = 0; j < sorted.size(); ++j) {
      if (j) out += ' ';
      out += Num(px(sorted[j].first)) + "," + Num(py(sorted[j].second));
    }
    out += "\"/>\n";
    for (const auto& [x, y] : sorted) {
      out += "<circle cx=\"" + Num(px(x)) + "\" cy=\"" + Num(py(y)) +
             "\" r=\"3\" fill=\"" + color + "\"/>\n";
    }
    const double ly = kTop + 10 + 18 * i;
    out += "<rect x=\"" + Num(kWidth - kRight + 12) + "\" y=\"" +
           Num(ly - 8) + "\" width=\"12\" height=\"12\" fill=\"" + color +
           "\"/>\n";
    out += "<text x=\"" + Num(kWidth - kRight + 30) + "\" y=\"" + Num(ly + 2) +
           "\">" + Escape(s.label) + "</text>\n";
  }
  out += "</svg>\n";
  return out;
}

SvgChart ChartFromRecords(const std::vector<BenchRecord>& records) {
  if (records.empty()) throw InvalidArgumentError("no records to plot");
  std::set<uint64_t> ns, alphas;
  for (const auto& r : records) {
    ns.insert(r.n);
    alphas.insert(r.alpha);
  }
  // Sweep over alpha when n is fixed and alpha varies.
  const bool alpha_sweep = ns.size() == 1 && alphas.size() > 1;

  SvgChart chart;
  chart.title = records.front().op + " median time";
  chart.y_label = "median time (ms)";
  chart.x_label = alpha_sweep ? "table size alpha (log2)" : "dimension n";
  chart.x_scale = alpha_sweep ? AxisScale::kLog2 : AxisScale::kLinear;

  std::map<std::string, SvgSeries> by_label;
  for (const auto& r : records) {
    std::string label = r.op;
    if (!r.strategy.empty()) label += " " + r.strategy;
    if (!alpha_sweep && alphas.size() > 1) {
      label += " alpha=" + std::to_string(r.alpha);
    }
    auto& s = by_label[label];
    s.label = label;
    s.points.emplace_back(
        static_cast<double>(alpha_sweep ? r.alpha : r.n),
        static_cast<double>(r.median_ns) / 1e6);
  }
  for (auto& [label, s] : by_label) chart.series.push_back(std::move(s));
  chart.notes = RatioReport(records);
  return chart;
}

SvgChart CiphertextSizeChart(const std::vector<uint64_t>& n_list,
                             bool compressed) {
  SvgChart chart;
  chart.title = "ciphertext size";
  chart.x_label = "dimension n";
  chart.y_label = "bytes";
  SvgSeries s;
  s.label = compressed ? "compressed" : "uncompressed";
  for (uint64_t n : n_list) {
    s.points.emplace_back(
        static_cast<double>(n),
        static_cast<double>(kFileHeaderBytes +
                            CiphertextPayloadBytes(n, compressed)));
  }
  chart.series.push_back(std::move(s));
  return chart;
}

}  // namespace fhipe
