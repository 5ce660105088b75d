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

#include "fhipe/bench.h"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <string>

#include "fhipe/dlog.h"
#include "fhipe/errors.h"
#include "fhipe/fhipe.h"

namespace fhipe {
namespace {

using Clock = std::chrono::steady_clock;

uint64_t ElapsedNs(Clock::time_point start) {
  return static_cast<uint64_t>(
      std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start)
          .count());
}

PlainVector OnesVector(uint64_t n) {
  PlainVector v;
  v.values.assign(n, 1);
  v.bound = 1;
  return v;
}

std::vector<PairingInput> RandomPairs(uint64_t n, RandomSource& rng) {
  std::vector<PairingInput> pairs;
  pairs.reserve(n);
  for (uint64_t i = 0; i < n; ++i) {
    pairs.push_back({ScalarMulG1(RandomNonzeroScalar(rng), G1Generator()),
                     ScalarMulG2(RandomNonzeroScalar(rng), G2Generator())});
  }
  return pairs;
}

const std::vector<MultiPairingStrategy>& AllStrategies() {
  static const std::vector<MultiPairingStrategy> all = {
      MultiPairingStrategy::kNaiveProduct, MultiPairingStrategy::kSharedFe,
      MultiPairingStrategy::kSharedMlFe};
  return all;
}

void RequireNonEmpty(const std::vector<uint64_t>& v, const char* what) {
  if (v.empty()) {
    throw InvalidArgumentError(std::string("suite needs a non-empty ") + what);
  }
}

std::string FormatRatio(double r) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2fx", r);
  return buf;
}

}  // namespace

TimingStats ComputeTimingStats(std::vector<uint64_t> samples_ns) {
  if (samples_ns.empty()) throw InvalidArgumentError("no timing samples");
  std::sort(samples_ns.begin(), samples_ns.end());
  const size_t count = samples_ns.size();
  // Nearest rank: the ceil(p * count)-th smallest sample.
  auto rank = [&](size_t percent) {
    const size_t r = (percent * count + 99) / 100;
    return samples_ns[std::max<size_t>(r, 1) - 1];
  };
  return {rank(50), rank(10), rank(90)};
}

void RssMemoryMeter::Reset() {
  std::ofstream clear("/proc/self/clear_refs");
  if (clear) clear << "5";
}

uint64_t RssMemoryMeter::PeakBytes() {
  std::ifstream status("/proc/self/status");
  std::string line;
  while (std::getline(status, line)) {
    if (line.rfind("VmHWM:", 0) == 0) {
      std::istringstream fields(line.substr(6));
      uint64_t kib = 0;
      fields >> kib;
      return kib * 1024;
    }
  }
  return 0;
}

BenchRecord MeasureOp(std::string op_name, uint64_t n, uint64_t alpha,
                      std::string strategy, const std::function<void()>& op,
                      const BenchOptions& options) {
  RssMemoryMeter rss;
  MemoryMeter& meter = options.meter ? *options.meter : rss;
  const uint64_t iterations = std::max<uint64_t>(options.min_iterations, 1);

  op();  // warm-up
  meter.Reset();
  std::vector<uint64_t> samples;
  samples.reserve(iterations);
  for (uint64_t i = 0; i < iterations; ++i) {
    const auto start = Clock::now();
    op();
    samples.push_back(ElapsedNs(start));
  }
  const TimingStats stats = ComputeTimingStats(samples);

  BenchRecord r;
  r.op = std::move(op_name);
  r.n = n;
  r.alpha = alpha;
  r.strategy = std::move(strategy);
  r.median_ns = stats.median_ns;
  r.p10_ns = stats.p10_ns;
  r.p90_ns = stats.p90_ns;
  r.peak_mem_bytes = meter.PeakBytes();
  r.iterations = iterations;
  r.mem_method = std::string(meter.method());
  return r;
}

uint64_t MeasureTimerOverheadNs(uint64_t iterations) {
  volatile uint64_t sink = 0;
  std::vector<uint64_t> samples;
  samples.reserve(iterations);
  for (uint64_t i = 0; i < iterations; ++i) {
    const auto start = Clock::now();
    sink = sink + 1;
    samples.push_back(ElapsedNs(start));
  }
  return ComputeTimingStats(samples).median_ns;
}

std::string_view SuiteName(BenchSuite suite) {
  switch (suite) {
    case BenchSuite::kEncrypt: return "encrypt";
    case BenchSuite::kDecrypt: return "decrypt";
    case BenchSuite::kMultiPairing: return "multipairing";
    case BenchSuite::kG2Mul: return "g2mul";
    case BenchSuite::kDlogTable: return "dlog-table";
  }
  return "unknown";
}

std::optional<BenchSuite> ParseSuite(std::string_view name) {
  for (BenchSuite s : {BenchSuite::kEncrypt, BenchSuite::kDecrypt,
                       BenchSuite::kMultiPairing, BenchSuite::kG2Mul,
                       BenchSuite::kDlogTable}) {
    if (SuiteName(s) == name) return s;
  }
  return std::nullopt;
}

std::vector<BenchRecord> RunSuite(const SuiteConfig& config,
                                  const BenchOptions& options) {
  SeededRandom rng(options.seed);
  std::vector<BenchRecord> out;

  switch (config.suite) {
    case BenchSuite::kEncrypt: {
      RequireNonEmpty(config.n_list, "n list");
      for (uint64_t n : config.n_list) {
        const auto setup = Setup(static_cast<uint32_t>(n), 4096, false, rng);
        const PlainVector y = OnesVector(n);
        out.push_back(MeasureOp(
            "encrypt", n, 0, "",
            [&] { Encrypt(setup.msk, y, rng); }, options));
      }
      break;
    }
    case BenchSuite::kDecrypt: {
      RequireNonEmpty(config.n_list, "n list");
      RequireNonEmpty(config.alpha_list, "alpha list");
      const auto strategies =
          config.strategies.empty()
              ? std::vector{MultiPairingStrategy::kSharedMlFe}
              : config.strategies;
      for (uint64_t n : config.n_list) {
        for (uint64_t alpha : config.alpha_list) {
          const DlogParams dp = DlogParams::ForTableAlpha(alpha, false);
          const auto setup =
              Setup(static_cast<uint32_t>(n), dp.bound, false, rng);
          const PlainVector ones = OnesVector(n);
          const FunctionKey key = KeyGen(setup.msk, ones, rng);
          const Ciphertext ct = Encrypt(setup.msk, ones, rng);
          for (MultiPairingStrategy st : strategies) {
            DecryptOptions opts;
            opts.strategy = st;
            out.push_back(MeasureOp(
                "decrypt", n, alpha, std::string(StrategyName(st)),
                [&] {
                  if (Decrypt(setup.pp, key, ct, opts) !=
                      static_cast<int64_t>(n)) {
                    throw Error("benchmark decryption mismatch");
                  }
                },
                options));
          }
        }
      }
      break;
    }
    case BenchSuite::kMultiPairing: {
      RequireNonEmpty(config.n_list, "n list");
      const auto& strategies =
          config.strategies.empty() ? AllStrategies() : config.strategies;
      for (uint64_t n : config.n_list) {
        const auto pairs = RandomPairs(n, rng);
        for (MultiPairingStrategy st : strategies) {
          out.push_back(MeasureOp(
              "multipairing", n, 0, std::string(StrategyName(st)),
              [&] { MultiPairing(pairs, st); }, options));
        }
      }
      break;
    }
    case BenchSuite::kG2Mul: {
      RequireNonEmpty(config.n_list, "n list");
      for (uint64_t n : config.n_list) {
        std::vector<ZqScalar> scalars;
        for (uint64_t i = 0; i < n; ++i) scalars.push_back(RandomScalar(rng));
        const G2Point g = G2Generator();
        out.push_back(MeasureOp(
            "g2mul", n, 0, "glv",
            [&] {
              for (const auto& k : scalars) ScalarMulG2(k, g);
            },
            options));
        out.push_back(MeasureOp(
            "g2mul", n, 0, "window4",
            [&] {
              for (const auto& k : scalars) NaiveWindowedMulG2(k, g);
            },
            options));
      }
      break;
    }
    case BenchSuite::kDlogTable: {
      RequireNonEmpty(config.alpha_list, "alpha list");
      const GtElement base = Pairing(G1Generator(), G2Generator());
      for (uint64_t alpha : config.alpha_list) {
        out.push_back(MeasureOp(
            "dlog-table", 0, alpha, "power-tree",
            [&] { DlogTable::BuildPowerTree(base, alpha); }, options));
        out.push_back(MeasureOp(
            "dlog-table", 0, alpha, "mult-only",
            [&] { DlogTable::BuildMultiplicationOnly(base, alpha); },
            options));
      }
      break;
    }
  }
  return out;
}

std::string RecordsToCsv(const std::vector<BenchRecord>& records) {
  std::ostringstream out;
  out << "op,n,alpha,strategy,median_ns,p10_ns,p90_ns,peak_mem_bytes,"
         "iterations,mem_method\n";
  for (const auto& r : records) {
    out << r.op << ',' << r.n << ',' << r.alpha << ',' << r.strategy << ','
        << r.median_ns << ',' << r.p10_ns << ',' << r.p90_ns << ','
        << r.peak_mem_bytes << ',' << r.iterations << ',' << r.mem_method
        << '\n';
  }
  return out.str();
}

std::vector<std::string> RatioReport(const std::vector<BenchRecord>& records) {
  // (op, n, alpha) -> strategy -> median
  std::map<std::tuple<std::string, uint64_t, uint64_t>,
           std::map<std::string, uint64_t>>
      groups;
  for (const auto& r : records) {
    groups[{r.op, r.n, r.alpha}][r.strategy] = r.median_ns;
  }

  struct Comparison {
    const char* op;
    const char* slow;
    const char* fast;
    const char* reference;
  };
  static constexpr Comparison kComparisons[] = {
      {"multipairing", "naive", "shared-ml-fe", "3.4x"},
      {"multipairing", "naive", "shared-fe", "n/a"},
      {"g2mul", "window4", "glv", "2.6x"},
      {"dlog-table", "mult-only", "power-tree", "1.25x"},
  };

  std::vector<std::string> lines;
  for (const auto& [key, medians] : groups) {
    const auto& [op, n, alpha] = key;
    for (const auto& c : kComparisons) {
      if (op != c.op) continue;
      const auto slow = medians.find(c.slow);
      const auto fast = medians.find(c.fast);
      if (slow == medians.end() || fast == medians.end() ||
          fast->second == 0) {
        continue;
      }
      const double ratio = static_cast<double>(slow->second) /
                           static_cast<double>(fast->second);
      lines.push_back(op + " n=" + std::to_string(n) +
                      " alpha=" + std::to_string(alpha) + ": " + c.fast +
                      " vs " + c.slow + " speedup " + FormatRatio(ratio) +
                      " (reference " + c.reference + ")");
    }
  }
  return lines;
}

}  // namespace fhipe
