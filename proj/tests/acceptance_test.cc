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

// Acceptance suite. Prints one line per criterion:
//
//   PASS|FAIL|SOFT-PASS|SOFT-FAIL [PRIMARY] <id> <name>: <detail>
//
// Soft criteria measure host-dependent speedups; they are reported and never
// change the exit status.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "fhipe/apps.h"
#include "fhipe/bench.h"
#include "fhipe/errors.h"
#include "fhipe/fhipe.h"
#include "fhipe/wire_format.h"
#include "oracle.h"

namespace fhipe {
namespace {

using oracle::BigInt;

struct Outcome {
  bool pass = true;
  std::string detail;
};

int g_hard_failures = 0;

void Report(int id, const char* name, bool soft,
            const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  const char* status = soft ? (o.pass ? "SOFT-PASS" : "SOFT-FAIL")
                            : (o.pass ? "PASS" : "FAIL");
  if (!soft && !o.pass) ++g_hard_failures;
  char timing[32];
  std::snprintf(timing, sizeof(timing), " [%.1fs]", secs);
  std::cout << status << " [PRIMARY] " << id << " " << name << ": "
            << o.detail << timing << std::endl;
}

std::string Ratio(double r) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2fx", r);
  return buf;
}

PlainVector Vec(std::vector<int64_t> v, uint64_t bound, bool is_signed) {
  return {std::move(v), bound, is_signed};
}

// Exponentiation oracle independent of the library ladder.
GtElement PowOracle(const GtElement& base, BigInt e) {
  blst_fp12 acc = *blst_fp12_one();
  blst_fp12 b = base.fp12();
  while (e > 0) {
    if ((e & 1) != 0) blst_fp12_mul(&acc, &acc, &b);
    blst_fp12_sqr(&b, &b);
    e >>= 1;
  }
  return GtElement(acc);
}

std::vector<PairingInput> RandomPairs(size_t n, RandomSource& rng) {
  std::vector<PairingInput> out;
  for (size_t i = 0; i < n; ++i) {
    out.push_back({ScalarMulG1(RandomNonzeroScalar(rng), G1Generator()),
                   ScalarMulG2(RandomNonzeroScalar(rng), G2Generator())});
  }
  return out;
}

// ---------------------------------------------------------------------------

Outcome EndToEnd() {
  SeededRandom rng(1001);
  std::mt19937_64 gen(1001);
  int ok = 0;
  const int trials = 200;
  for (int t = 0; t < trials; ++t) {
    const uint32_t n = 1 + t % 8;
    const auto setup = fhipe::Setup(n, 4096, false, rng);
    CheckElementBounds(setup.pp, 15, 15);
    const auto x = oracle::RandomVector(gen, n, 0, 15);
    const auto y = oracle::RandomVector(gen, n, 0, 15);
    const auto z = Decrypt(setup.pp, KeyGen(setup.msk, Vec(x, 15, false), rng),
                           Encrypt(setup.msk, Vec(y, 15, false), rng));
    ok += z.has_value() && BigInt(*z) == oracle::InnerProduct(x, y);
  }
  return {ok == trials, std::to_string(ok) + "/" + std::to_string(trials) +
                            " trials match the big-integer oracle"};
}

Outcome DualBasis() {
  SeededRandom rng(1002);
  int ok = 0, total = 0;
  for (size_t n = 1; n <= 16; ++n) {
    for (int t = 0; t < 50; ++t, ++total) {
      const auto d = DualOf(SampleInvertibleMatrix(n, rng));
      const auto prod = oracle::Multiply(
          oracle::ToBig(d.b), oracle::Transpose(oracle::ToBig(d.b_star)));
      const BigInt det = oracle::ToBig(d.det_b);
      bool good = det != 0;
      for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) good &= prod[i][j] == (i == j ? det : 0);
      }
      ok += good;
    }
  }
  return {ok == total, std::to_string(ok) + "/" + std::to_string(total) +
                           " matrices satisfy B*(B*)^T = det(B)*I (oracle)"};
}

Outcome MultiPairingEquivalence() {
  SeededRandom rng(1003);
  int ok = 0, total = 0;
  for (size_t len = 1; len <= 16; ++len) {
    for (int t = 0; t < 20; ++t, ++total) {
      const auto pairs = RandomPairs(len, rng);
      const GtElement naive =
          MultiPairing(pairs, MultiPairingStrategy::kNaiveProduct);
      ok += naive == MultiPairing(pairs, MultiPairingStrategy::kSharedFe) &&
            naive == MultiPairing(pairs, MultiPairingStrategy::kSharedMlFe);
    }
  }
  return {ok == total, std::to_string(ok) + "/" + std::to_string(total) +
                           " lists give identical GT elements"};
}

Outcome Bilinearity() {
  SeededRandom rng(1004);
  const GtElement e = Pairing(G1Generator(), G2Generator());
  int ok = 0;
  for (int t = 0; t < 50; ++t) {
    const ZqScalar a = RandomNonzeroScalar(rng), b = RandomNonzeroScalar(rng);
    const GtElement lhs =
        Pairing(ScalarMulG1(a, G1Generator()), ScalarMulG2(b, G2Generator()));
    ok += lhs == PowOracle(e, oracle::Mod(oracle::ToBig(a) * oracle::ToBig(b)));
  }
  return {ok == 50, std::to_string(ok) + "/50 pairs satisfy e(aP,bQ) = "
                                          "e(P,Q)^(ab)"};
}

Outcome BsgsSweep() {
  const GtElement base =
      Pairing(ScalarMulG1(ZqScalar::FromUint64(31337), G1Generator()),
              G2Generator());
  const auto params = DlogParams::Create(4096, false);
  const auto table = DlogTable::BuildPowerTree(base, params.table_alpha);
  uint64_t recovered = 0, bottom = 0;
  GtElement d2;
  for (uint64_t z = 0; z < 8192; ++z) {
    const auto got = Bsgs(base, d2, params, table);
    if (z < 4096) {
      recovered += got == z;
    } else {
      bottom += !got.has_value();
    }
    d2 = GtMul(d2, base);
  }

  const auto sparams = DlogParams::Create(64, true);
  const auto stable = DlogTable::BuildPowerTree(base, sparams.table_alpha);
  int signed_ok = 0;
  for (int64_t z = -63; z <= 63; ++z) {
    signed_ok +=
        BsgsSigned(base, GtExp(base, ZqScalar::FromInt64(z)), sparams, stable) ==
        z;
  }
  const bool pass = recovered == 4096 && bottom == 4096 && signed_ok == 127;
  return {pass, std::to_string(recovered) + "/4096 recovered, " +
                    std::to_string(bottom) + "/4096 out-of-range gave BOT, " +
                    std::to_string(signed_ok) + "/127 signed recovered"};
}

Outcome ConstantIterations() {
  const GtElement base = Pairing(G1Generator(), G2Generator());
  const auto params = DlogParams::Create(4096, false);
  const auto table = DlogTable::BuildPowerTree(base, params.table_alpha);
  std::string detail;
  bool pass = true;
  for (auto [label, z] : {std::pair{"early", uint64_t{0}},
                          std::pair{"late", uint64_t{4095}},
                          std::pair{"none", uint64_t{6000}}}) {
    BsgsStats stats;
    Bsgs(base, GtExp(base, ZqScalar::FromUint64(z)), params, table, &stats);
    pass &= stats.iterations == params.table_alpha;
    detail += std::string(label) + "=" + std::to_string(stats.iterations) + " ";
  }
  return {pass, detail + "(alpha = 64)"};
}

Outcome PowerTreeCounts() {
  const GtElement base = Pairing(G1Generator(), G2Generator());
  struct Case {
    uint64_t alpha, muls, sqrs;
  };
  bool pass = true;
  std::string detail;
  for (const Case c : {Case{8, 3, 4}, Case{9, 4, 4}, Case{16384, 8191, 8192}}) {
    OpCountScope scope;
    DlogTable::BuildPowerTree(base, c.alpha);
    const auto& k = scope.counts();
    pass &= k.gt_muls == c.muls && k.gt_cyclotomic_squares == c.sqrs;
    detail += "alpha=" + std::to_string(c.alpha) + ": " +
              std::to_string(k.gt_muls) + "+" +
              std::to_string(k.gt_cyclotomic_squares) + "; ";
  }
  return {pass, detail};
}

Outcome PowerTreeSpeedup() {
  const GtElement base = Pairing(G1Generator(), G2Generator());
  BenchOptions options;
  options.min_iterations = 30;
  const auto tree = MeasureOp("tree", 0, 16384, "", [&] {
    DlogTable::BuildPowerTree(base, 16384);
  }, options);
  const auto mult = MeasureOp("mult", 0, 16384, "", [&] {
    DlogTable::BuildMultiplicationOnly(base, 16384);
  }, options);
  const double r = static_cast<double>(mult.median_ns) /
                   static_cast<double>(tree.median_ns);
  return {r >= 1.15, "power tree " + Ratio(r) +
                         " faster than multiplication-only at alpha=2^14 "
                         "(target >= 1.15x, reference ~1.25x)"};
}

Outcome CiphertextSize() {
  SeededRandom rng(1008);
  bool pass = CiphertextPayloadBytes(100, false) == 19392;
  std::string detail;
  for (uint32_t n : {1u, 10u, 100u, 188u}) {
    const auto setup = fhipe::Setup(n, 4096, false, rng);
    const auto ct = Encrypt(
        setup.msk, Vec(std::vector<int64_t>(n, 1), 1, false), rng);
    const size_t payload =
        WriteCiphertext(setup.pp, ct, false).size() - kFileHeaderBytes;
    pass &= payload == (n + 1) * 2 * kG2CompressedBytes;
    detail += "n=" + std::to_string(n) + ":" + std::to_string(payload) + "B ";
  }
  return {pass, detail + "(payload, uncompressed)"};
}

Outcome EncryptOpCount() {
  SeededRandom rng(1009);
  bool pass = true;
  std::string detail;
  for (uint32_t n : {1u, 10u, 100u}) {
    const auto setup = fhipe::Setup(n, 4096, false, rng);
    OpCountScope scope;
    Encrypt(setup.msk, Vec(std::vector<int64_t>(n, 1), 1, false), rng);
    pass &= scope.counts().g2_scalar_muls == n + 1;
    detail += "n=" + std::to_string(n) + ":" +
              std::to_string(scope.counts().g2_scalar_muls) + " ";
  }
  return {pass, detail + "G2 scalar multiplications"};
}

Outcome Speedups() {
  SeededRandom rng(1010);
  BenchOptions options;
  options.min_iterations = 30;
  const auto pairs = RandomPairs(100, rng);
  const auto naive = MeasureOp("mp", 100, 0, "naive", [&] {
    MultiPairing(pairs, MultiPairingStrategy::kNaiveProduct);
  }, options);
  const auto merged = MeasureOp("mp", 100, 0, "shared-ml-fe", [&] {
    MultiPairing(pairs, MultiPairingStrategy::kSharedMlFe);
  }, options);
  std::vector<ZqScalar> scalars;
  for (int i = 0; i < 16; ++i) scalars.push_back(RandomScalar(rng));
  const G2Point g = G2Generator();
  const auto fast = MeasureOp("g2", 16, 0, "glv", [&] {
    for (const auto& k : scalars) ScalarMulG2(k, g);
  }, options);
  const auto window = MeasureOp("g2", 16, 0, "window4", [&] {
    for (const auto& k : scalars) NaiveWindowedMulG2(k, g);
  }, options);
  const double mp = static_cast<double>(naive.median_ns) /
                    static_cast<double>(merged.median_ns);
  const double g2 = static_cast<double>(window.median_ns) /
                    static_cast<double>(fast.median_ns);
  return {mp >= 2.0 && g2 >= 1.5,
          "multi-pairing n=100 " + Ratio(mp) +
              " (target >= 2x, reference ~3.4x); G2 mul " + Ratio(g2) +
              " vs 4-bit window (target >= 1.5x, reference ~2.6x)"};
}

Outcome Classifier() {
  SeededRandom rng(1011);
  std::mt19937_64 gen(1011);
  const uint64_t w_bound = QuantBound(12, true);
  const uint64_t s_bound = QuantBound(6, false);
  int ok = 0, bottom = 0, c0 = 0;
  const int trials = 500;
  for (uint32_t n : {178u, 188u}) {
    const uint64_t s = uint64_t{n} * w_bound * s_bound + 1;
    const auto setup = fhipe::Setup(n, s, true, rng);
    for (int t = 0; t < trials / 2; ++t) {
      ClassifierModel model;
      model.weights = Vec(oracle::RandomVector(gen, n, -2047, 2047), w_bound,
                          true);
      // Thresholds near the score distribution so both classes occur.
      model.threshold = oracle::RandomVector(gen, 1, -40000, 40000)[0];
      const PlainVector sample =
          Vec(oracle::RandomVector(gen, n, 0, 63), s_bound, false);
      ValidateClassifier(model, s_bound, setup.pp);
      const auto enc = ClassifyEncrypted(
          setup.pp, KeyGen(setup.msk, model.weights, rng),
          Encrypt(setup.msk, sample, rng), model.threshold);
      const BigInt z = oracle::InnerProduct(model.weights.values, sample.values);
      const Class plain = z <= model.threshold ? Class::kC0 : Class::kC1;
      bottom += !enc.has_value();
      ok += enc == plain;
      c0 += plain == Class::kC0;
    }
  }

  PublicParams full_size;
  full_size.n = 188;
  full_size.is_signed = true;
  full_size.s = DlogParams::ForTableAlpha(16384, true).bound;
  ClassifierModel model;
  model.weights = Vec(std::vector<int64_t>(188, 0), w_bound, true);
  bool full_ok = full_size.dlog_params().table_alpha == 16384;
  try {
    ValidateClassifier(model, s_bound, full_size);
  } catch (const InvalidArgumentError&) {
    full_ok = false;
  }
  return {ok == trials && full_ok,
          std::to_string(ok) + "/" + std::to_string(trials) +
              " encrypted classes match plaintext (" + std::to_string(c0) +
              " C0, " + std::to_string(bottom) + " BOT); n=188 alpha=16384 " +
              (full_ok ? "accepted" : "REJECTED")};
}

Outcome Localization() {
  SeededRandom rng(1012);
  std::mt19937_64 gen(1012);
  LocalizationConfig config;
  config.n_aps = 4;
  config.spread = 31;
  const auto setup = fhipe::Setup(AugmentedDimension(config),
                           DlogParams::ForTableAlpha(64, false).bound, false,
                           rng);
  ValidateLocalizationParams(config, setup.pp);
  const bool shape = setup.pp.n == 6 && setup.pp.dlog_params().table_alpha == 64;

  std::vector<std::vector<int64_t>> db;
  std::vector<FunctionKey> keys;
  std::vector<uint64_t> indices;
  for (uint64_t i = 0; i < 9; ++i) {
    db.push_back(oracle::RandomVector(gen, 4, 16, 47));
    keys.push_back(KeyGen(setup.msk, AugmentDbEntry(db.back(), config), rng));
    indices.push_back(i);
  }
  const auto query = oracle::RandomVector(gen, 4, 16, 47);
  const auto ct =
      Encrypt(setup.msk, AugmentQueryFingerprint(query, config), rng);
  const auto result = NearestNeighbors(setup.pp, ct, keys, indices, 9);

  std::vector<int64_t> plain;
  for (const auto& e : db) {
    BigInt d = 0;
    for (size_t j = 0; j < 4; ++j) d += BigInt(query[j] - e[j]) * (query[j] - e[j]);
    plain.push_back(static_cast<int64_t>(d));
  }
  std::vector<uint64_t> order(9);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](uint64_t a, uint64_t b) { return plain[a] < plain[b]; });
  bool distances_ok = result.failures == 0;
  for (size_t i = 0; i < 9; ++i) {
    distances_ok &= result.all_distances[i] == plain[i];
  }
  const bool pass = shape && distances_ok && result.indices == order;
  std::ostringstream ranking;
  for (auto i : result.indices) ranking << i << ' ';
  return {pass, std::string("N=4 M=9 n=6 alpha=64; distances ") +
                    (distances_ok ? "equal" : "DIFFER") + " to oracle; ranking " +
                    ranking.str() + (result.indices == order ? "matches" : "DIFFERS")};
}

template <typename T>
bool FlipsDetected(const std::vector<uint8_t>& bytes,
                   const std::vector<size_t>& bit_positions, T&& read) {
  for (size_t bit : bit_positions) {
    auto t = bytes;
    t[bit / 8] ^= static_cast<uint8_t>(1u << (bit % 8));
    try {
      read(t);
      return false;
    } catch (const IntegrityError&) {
    } catch (const FormatError&) {
    }
  }
  return true;
}

Outcome Serialization() {
  SeededRandom rng(1013);
  std::mt19937_64 gen(1013);
  bool round_trips = true, tamper = true;
  size_t flips = 0;
  for (uint32_t n : {1u, 10u, 100u}) {
    const auto setup = fhipe::Setup(n, 4096, false, rng);
    const auto msk_bytes = WriteMasterKey(setup.msk);
    round_trips &= WriteMasterKey(ReadMasterKey(msk_bytes)) == msk_bytes;

    const auto x = Vec(oracle::RandomVector(gen, n, 0, 3), 3, false);
    const auto key = KeyGen(setup.msk, x, rng);
    const auto ct = Encrypt(setup.msk, x, rng);
    for (bool compressed : {false, true}) {
      const auto kb = WriteFunctionKey(setup.pp, key, compressed);
      const auto kf = ReadFunctionKey(kb);
      round_trips &= WriteFunctionKey(kf.pp, kf.key, compressed) == kb;
      const auto cb = WriteCiphertext(setup.pp, ct, compressed);
      const auto cf = ReadCiphertext(cb);
      round_trips &= WriteCiphertext(cf.pp, cf.ct, compressed) == cb;
    }
    const auto elements = ComputeDecryptionElements(key, ct);
    const auto table = DlogTable::BuildPowerTree(
        elements.d1, setup.pp.dlog_params().table_alpha);
    const auto tb = WriteDlogTableFile(setup.pp, table);
    const auto tf = ReadDlogTableFile(tb);
    round_trips &= WriteDlogTableFile(tf.pp, tf.table) == tb;

    // Single-bit flips in the key material: every bit for small n, a random
    // sample for n = 100.
    const size_t payload_bits = (msk_bytes.size() - kFileHeaderBytes) * 8;
    std::vector<size_t> bits;
    if (n <= 10) {
      for (size_t b = 0; b < payload_bits; ++b) {
        bits.push_back(kFileHeaderBytes * 8 + b);
      }
    } else {
      std::uniform_int_distribution<size_t> pick(0, payload_bits - 1);
      for (int i = 0; i < 48; ++i) bits.push_back(kFileHeaderBytes * 8 + pick(gen));
    }
    flips += bits.size();
    tamper &= FlipsDetected(msk_bytes, bits,
                            [](const auto& b) { ReadMasterKey(b); });
  }
  return {round_trips && tamper,
          std::string("msk/key/ciphertext/table round trips ") +
              (round_trips ? "bit-exact" : "DIFFER") + "; " +
              std::to_string(flips) + " single-bit msk corruptions " +
              (tamper ? "all detected" : "NOT all detected")};
}

}  // namespace
}  // namespace fhipe

int main() {
  using namespace fhipe;
  Report(1, "end-to-end correctness", false, EndToEnd);
  Report(2, "dual-basis identity", false, DualBasis);
  Report(3, "multi-pairing strategy equivalence", false,
         MultiPairingEquivalence);
  Report(4, "bilinearity", false, Bilinearity);
  Report(5, "BSGS exhaustive sweep", false, BsgsSweep);
  Report(6, "constant-iteration BSGS", false, ConstantIterations);
  Report(7, "power-tree operation counts", false, PowerTreeCounts);
  Report(7, "power-tree build speedup", true, PowerTreeSpeedup);
  Report(8, "ciphertext size", false, CiphertextSize);
  Report(9, "encrypt operation count", false, EncryptOpCount);
  Report(10, "speedup ratios", true, Speedups);
  Report(11, "classifier equivalence", false, Classifier);
  Report(12, "localization equivalence", false, Localization);
  Report(13, "serialization round trips and tamper detection", false,
         Serialization);
  std::cout << (g_hard_failures == 0 ? "ALL HARD CRITERIA PASSED"
                                     : "HARD CRITERIA FAILED: " +
                                           std::to_string(g_hard_failures))
            << std::endl;
  return g_hard_failures == 0 ? 0 : 1;
}
