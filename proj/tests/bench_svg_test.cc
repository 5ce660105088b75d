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

#include <gtest/gtest.h>

#include <regex>
#include <sstream>

#include "fhipe/bench.h"
#include "fhipe/errors.h"
#include "fhipe/svg.h"
#include "fhipe/wire_format.h"

namespace fhipe {
namespace {

size_t Count(const std::string& haystack, const std::string& needle) {
  size_t n = 0;
  for (size_t pos = haystack.find(needle); pos != std::string::npos;
       pos = haystack.find(needle, pos + 1)) {
    ++n;
  }
  return n;
}

TEST(BenchTest, TimingStatsNearestRank) {
  std::vector<uint64_t> samples;
  for (uint64_t i = 100; i >= 1; --i) samples.push_back(i);
  const auto s = ComputeTimingStats(samples);
  EXPECT_EQ(s.median_ns, 50u);
  EXPECT_EQ(s.p10_ns, 10u);
  EXPECT_EQ(s.p90_ns, 90u);
  EXPECT_EQ(ComputeTimingStats({7}).median_ns, 7u);
  EXPECT_THROW(ComputeTimingStats({}), InvalidArgumentError);
}

TEST(BenchTest, CsvColumns) {
  BenchRecord r{"encrypt", 25, 0, "", 3, 2, 4, 100, 30, "rss-hwm"};
  const auto csv = RecordsToCsv({r});
  EXPECT_EQ(csv,
            "op,n,alpha,strategy,median_ns,p10_ns,p90_ns,peak_mem_bytes,"
            "iterations,mem_method\nencrypt,25,0,,3,2,4,100,30,rss-hwm\n");
}

TEST(BenchTest, EncryptSuiteRecords) {
  BenchOptions options;
  const auto records =
      RunSuite({BenchSuite::kEncrypt, {2, 8}, {}, {}}, options);
  ASSERT_EQ(records.size(), 2u);
  for (const auto& r : records) {
    EXPECT_EQ(r.op, "encrypt");
    EXPECT_GE(r.iterations, 30u);
    EXPECT_LE(r.p10_ns, r.median_ns);
    EXPECT_LE(r.median_ns, r.p90_ns);
    EXPECT_EQ(r.mem_method, "rss-hwm");
  }
  EXPECT_LT(records[0].median_ns, records[1].median_ns);
}

TEST(BenchTest, TimerOverheadIsNegligible) {
  BenchOptions options;
  const auto r = RunSuite({BenchSuite::kEncrypt, {25}, {}, {}}, options);
  EXPECT_LT(MeasureTimerOverheadNs() * 100, r[0].median_ns);
}

TEST(BenchTest, SuiteNamesAndRatioReport) {
  for (auto s : {BenchSuite::kEncrypt, BenchSuite::kDecrypt,
                 BenchSuite::kMultiPairing, BenchSuite::kG2Mul,
                 BenchSuite::kDlogTable}) {
    EXPECT_EQ(ParseSuite(SuiteName(s)), s);
  }
  EXPECT_FALSE(ParseSuite("nope").has_value());

  std::vector<BenchRecord> records = {
      {"multipairing", 100, 0, "naive", 340, 0, 0, 0, 30, ""},
      {"multipairing", 100, 0, "shared-ml-fe", 100, 0, 0, 0, 30, ""},
      {"g2mul", 1, 0, "window4", 260, 0, 0, 0, 30, ""},
      {"g2mul", 1, 0, "glv", 100, 0, 0, 0, 30, ""}};
  const auto lines = RatioReport(records);
  ASSERT_EQ(lines.size(), 2u);
  EXPECT_NE(lines[0].find("2.60x"), std::string::npos);
  EXPECT_NE(lines[1].find("3.40x"), std::string::npos);
}

TEST(SvgTest, SingleSeriesTwoPoints) {
  SvgChart chart;
  chart.title = "t";
  chart.series.push_back({"a", {{1, 10}, {2, 20}}});
  const auto svg = RenderScalingSvg(chart);
  EXPECT_NE(svg.find("viewBox=\"0 0 800 500\""), std::string::npos);
  EXPECT_EQ(Count(svg, "<polyline"), 1u);
  EXPECT_EQ(Count(svg, "<circle"), 2u);
  EXPECT_EQ(svg, RenderScalingSvg(chart));
}

TEST(SvgTest, Errors) {
  SvgChart chart;
  chart.series.push_back({"a", {{1, 10}}});
  EXPECT_THROW(RenderScalingSvg(chart), InvalidArgumentError);
  chart.series[0].points.push_back({0, 1});
  chart.x_scale = AxisScale::kLog2;
  EXPECT_THROW(RenderScalingSvg(chart), InvalidArgumentError);
  EXPECT_THROW(RenderScalingSvg(SvgChart{}), InvalidArgumentError);
}

// Extracts the polyline vertices of the first series.
std::vector<std::pair<double, double>> Vertices(const std::string& svg) {
  const std::regex re("points=\"([^\"]*)\"");
  std::smatch m;
  EXPECT_TRUE(std::regex_search(svg, m, re));
  std::vector<std::pair<double, double>> out;
  std::istringstream in(m[1].str());
  std::string tok;
  while (in >> tok) {
    const auto comma = tok.find(',');
    out.emplace_back(std::stod(tok.substr(0, comma)),
                     std::stod(tok.substr(comma + 1)));
  }
  return out;
}

TEST(SvgTest, CiphertextSizeIsAStraightLine) {
  const auto chart = CiphertextSizeChart({1, 10, 100, 188}, false);
  ASSERT_EQ(chart.series.size(), 1u);
  const auto& pts = chart.series[0].points;
  EXPECT_EQ(pts.front().second, 384 + kFileHeaderBytes);
  EXPECT_EQ(pts[2].second, 19392 + kFileHeaderBytes);
  const auto v = Vertices(RenderScalingSvg(chart));
  ASSERT_EQ(v.size(), 4u);
  const double slope = (v[3].second - v[0].second) / (v[3].first - v[0].first);
  for (const auto& [x, y] : v) {
    EXPECT_NEAR(y, v[0].second + slope * (x - v[0].first), 0.05);
  }
}

TEST(SvgTest, AlphaSweepUsesLog2Axis) {
  std::vector<BenchRecord> records;
  for (uint64_t a : {1024, 2048, 4096}) {
    records.push_back({"decrypt", 10, a, "shared-ml-fe", a * 1000, 0, 0, 0,
                       30, ""});
  }
  const auto chart = ChartFromRecords(records);
  EXPECT_EQ(chart.x_scale, AxisScale::kLog2);
  const auto v = Vertices(RenderScalingSvg(chart));
  // Equal spacing in log2(alpha).
  EXPECT_NEAR(v[1].first - v[0].first, v[2].first - v[1].first, 0.02);
  EXPECT_GT(v[0].second, v[2].second);  // larger time is higher on screen
}

}  // namespace
}  // namespace fhipe
