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

#ifndef FHIPE_BENCH_H_
#define FHIPE_BENCH_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fhipe/multipairing.h"

namespace fhipe {

struct BenchRecord {
  std::string op;
  uint64_t n = 0;
  uint64_t alpha = 0;
  std::string strategy;
  uint64_t median_ns = 0;
  uint64_t p10_ns = 0;
  uint64_t p90_ns = 0;
  uint64_t peak_mem_bytes = 0;
  uint64_t iterations = 0;
  std::string mem_method;
};

struct TimingStats {
  uint64_t median_ns = 0;
  uint64_t p10_ns = 0;
  uint64_t p90_ns = 0;
};

// Nearest-rank percentiles. Throws InvalidArgumentError on empty input.
TimingStats ComputeTimingStats(std::vector<uint64_t> samples_ns);

// Peak memory over a measured region.
class MemoryMeter {
 public:
  virtual ~MemoryMeter() = default;
  virtual void Reset() = 0;
  virtual uint64_t PeakBytes() = 0;
  virtual std::string_view method() const = 0;
};

// Resident-set high-water mark from /proc/self/status, reset through
// /proc/self/clear_refs.
class RssMemoryMeter final : public MemoryMeter {
 public:
  void Reset() override;
  uint64_t PeakBytes() override;
  std::string_view method() const override { return "rss-hwm"; }
};

struct BenchOptions {
  uint64_t min_iterations = 30;
  MemoryMeter* meter = nullptr;  // RssMemoryMeter when null
  uint64_t seed = 1;
};

// Runs `op` at least min_iterations times, timing each call separately.
BenchRecord MeasureOp(std::string op_name, uint64_t n, uint64_t alpha,
                      std::string strategy, const std::function<void()>& op,
                      const BenchOptions& options);

// Median cost of timing an empty closure.
uint64_t MeasureTimerOverheadNs(uint64_t iterations = 1000);

enum class BenchSuite { kEncrypt, kDecrypt, kMultiPairing, kG2Mul, kDlogTable };

std::string_view SuiteName(BenchSuite suite);
std::optional<BenchSuite> ParseSuite(std::string_view name);

struct SuiteConfig {
  BenchSuite suite = BenchSuite::kEncrypt;
  std::vector<uint64_t> n_list;
  std::vector<uint64_t> alpha_list;
  // Empty means every strategy (multipairing) or shared-ml-fe (decrypt).
  std::vector<MultiPairingStrategy> strategies;
};

std::vector<BenchRecord> RunSuite(const SuiteConfig& config,
                                  const BenchOptions& options);

std::string RecordsToCsv(const std::vector<BenchRecord>& records);

// Speedup ratios measured by a suite next to published reference values,
// one line each.
std::vector<std::string> RatioReport(const std::vector<BenchRecord>& records);

}  // namespace fhipe

#endif  // FHIPE_BENCH_H_
