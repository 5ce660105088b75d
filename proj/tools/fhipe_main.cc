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

// fhipe command-line tool.
//
// Exit codes: 0 success (including an out-of-range decryption, printed as
// "BOT"), 1 usage, 2 I/O or format error, 3 cryptographic contract violation.

#include <cstdio>
#include <iostream>
#include <limits>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "alloc_tracker.h"
#include "fhipe/apps.h"
#include "fhipe/bench.h"
#include "fhipe/errors.h"
#include "fhipe/fhipe.h"
#include "fhipe/svg.h"
#include "fhipe/wire_format.h"

namespace fhipe::tools {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitIo = 2;
constexpr int kExitCrypto = 3;

class UsageError : public Error {
 public:
  using Error::Error;
};

struct RngOption {
  std::optional<uint64_t> seed;

  std::unique_ptr<RandomSource> Make() const {
    if (!seed) return std::make_unique<OsRandom>();
    std::cerr << "warning: --seed makes keys and ciphertexts reproducible; "
                 "use it only for tests\n";
    return std::make_unique<SeededRandom>(*seed);
  }
};

void AddSeed(CLI::App* cmd, RngOption& rng) {
  cmd->add_option("--seed", rng.seed,
                  "Deterministic randomness (test fixtures only)");
}

MultiPairingStrategy StrategyOrThrow(const std::string& name) {
  const auto s = ParseStrategy(name);
  if (!s) throw UsageError("unknown multi-pairing strategy '" + name + "'");
  return *s;
}

uint64_t DefaultVectorBound(const PublicParams& pp) {
  return std::min<uint64_t>(pp.s - 1,
                            std::numeric_limits<int64_t>::max());
}

PublicParams HeaderParams(const std::string& path) {
  return DecodeHeader(ReadFileBytes(path)).pp;
}

std::string FormatClass(const std::optional<Class>& c) {
  return c ? std::string(ClassName(*c)) : "BOT";
}

// ---------------------------------------------------------------------------

struct SetupArgs {
  uint32_t n = 0;
  uint64_t s = 0;
  bool is_signed = false;
  std::string matrix_csv;
  std::string out;
  RngOption rng;
};

int RunSetup(const SetupArgs& a) {
  PublicParams pp;
  pp.n = a.n;
  pp.s = a.s;
  pp.is_signed = a.is_signed;
  if (!a.matrix_csv.empty()) {
    WriteFileBytes(a.out, WriteMasterKey(MasterSecretKeyFromMatrix(
                              pp, MatrixFromCsv(ReadFileText(a.matrix_csv)))));
  } else {
    auto rng = a.rng.Make();
    WriteFileBytes(a.out,
                   WriteMasterKey(Setup(a.n, a.s, a.is_signed, *rng).msk));
  }
  return kExitOk;
}

struct VectorOpArgs {
  std::string msk;
  std::string vec;
  std::string out;
  std::optional<uint64_t> bound;
  bool compressed = false;
  RngOption rng;
};

int RunKeygenOrEncrypt(const VectorOpArgs& a, bool keygen) {
  const MasterSecretKey msk = ReadMasterKey(ReadFileBytes(a.msk));
  const PlainVector v = ReadVectorCsv(
      a.vec, a.bound.value_or(DefaultVectorBound(msk.pp)), true);
  auto rng = a.rng.Make();
  if (keygen) {
    WriteFileBytes(a.out,
                   WriteFunctionKey(msk.pp, KeyGen(msk, v, *rng), a.compressed));
  } else {
    WriteFileBytes(a.out,
                   WriteCiphertext(msk.pp, Encrypt(msk, v, *rng), a.compressed));
  }
  return kExitOk;
}

struct DecryptArgs {
  std::string msk;
  std::string pp;
  std::string key;
  std::string ct;
  std::string table;
  std::string strategy = "shared-ml-fe";
  bool fast_lookup = false;
};

int RunDecrypt(const DecryptArgs& a) {
  const FunctionKeyFile key = ReadFunctionKey(ReadFileBytes(a.key));
  const CiphertextFile ct = ReadCiphertext(ReadFileBytes(a.ct));
  PublicParams pp = ct.pp;
  if (!a.msk.empty()) {
    pp = ReadMasterKey(ReadFileBytes(a.msk)).pp;
  } else if (!a.pp.empty()) {
    pp = HeaderParams(a.pp);
  }
  if (!(key.pp == pp) || !(ct.pp == pp)) {
    throw InvalidArgumentError(
        "key, ciphertext and public parameters disagree");
  }

  DecryptOptions options;
  options.strategy = StrategyOrThrow(a.strategy);
  options.fast_lookup = a.fast_lookup;
  std::optional<DlogTableFile> table;
  if (!a.table.empty()) {
    table = ReadDlogTableFile(ReadFileBytes(a.table));
    if (a.fast_lookup) table->table.EnableFastLookup();
    options.table = &table->table;
  }
  const auto z = Decrypt(pp, key.key, ct.ct, options);
  std::cout << (z ? std::to_string(*z) : "BOT") << "\n";
  return kExitOk;
}

struct TableArgs {
  std::string msk;
  std::string key;
  std::string ct;
  bool ct_free_base = false;
  std::optional<uint64_t> alpha;
  std::string out;
};

int RunTable(const TableArgs& a) {
  PublicParams pp;
  GtElement base = Pairing(G1Generator(), G2Generator());
  std::optional<FunctionKeyFile> key;
  if (!a.key.empty()) key = ReadFunctionKey(ReadFileBytes(a.key));
  if (!a.msk.empty()) {
    pp = ReadMasterKey(ReadFileBytes(a.msk)).pp;
  } else if (key) {
    pp = key->pp;
  }

  if (key && !a.ct.empty()) {
    const CiphertextFile ct = ReadCiphertext(ReadFileBytes(a.ct));
    base = Pairing(key->key.k1, ct.ct.c1);
  } else if (key && a.ct_free_base) {
    base = Pairing(key->key.k1, G2Generator());
  } else if (!a.alpha) {
    throw UsageError("table needs --key with --ct or --ct-free-base, or --alpha");
  }

  uint64_t alpha = 0;
  if (a.alpha) {
    alpha = *a.alpha;
    if (a.msk.empty() && !key) {
      pp.s = DlogParams::ForTableAlpha(alpha, false).bound;
    }
  } else {
    alpha = pp.dlog_params().table_alpha;
  }
  const DlogTable table = DlogTable::BuildPowerTree(base, alpha);
  WriteFileBytes(a.out, WriteDlogTableFile(pp, table));
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct BenchArgs {
  std::string suite;
  std::vector<uint64_t> n_list;
  std::vector<uint64_t> alpha_list;
  std::vector<std::string> strategies;
  std::string csv;
  std::string svg;
  std::string size_svg;
  uint64_t iterations = 30;
  uint64_t seed = 1;
};

int RunBench(const BenchArgs& a) {
  const auto suite = ParseSuite(a.suite);
  if (!suite) throw UsageError("unknown suite '" + a.suite + "'");
  if (a.iterations < 30) throw UsageError("--iterations must be >= 30");

  SuiteConfig config;
  config.suite = *suite;
  config.n_list = a.n_list;
  config.alpha_list = a.alpha_list;
  for (const auto& s : a.strategies) {
    config.strategies.push_back(StrategyOrThrow(s));
  }

  AllocMemoryMeter meter;
  BenchOptions options;
  options.min_iterations = a.iterations;
  options.meter = &meter;
  options.seed = a.seed;

  std::cerr << "timer overhead: " << MeasureTimerOverheadNs() << " ns\n";
  const auto records = RunSuite(config, options);
  const std::string csv = RecordsToCsv(records);
  if (a.csv.empty()) {
    std::cout << csv;
  } else {
    WriteFileText(a.csv, csv);
  }
  for (const auto& line : RatioReport(records)) std::cout << line << "\n";
  if (!a.svg.empty()) {
    WriteFileText(a.svg, RenderScalingSvg(ChartFromRecords(records)));
  }
  if (!a.size_svg.empty()) {
    WriteFileText(a.size_svg,
                  RenderScalingSvg(CiphertextSizeChart(a.n_list, false)));
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct ClassifyArgs {
  std::string model;
  std::string sidecar;
  std::string sample;
  uint32_t sample_bits = 6;
  uint32_t n = 178;
  uint64_t trials = 20;
  RngOption rng;
};

int RunDemoClassify(const ClassifyArgs& a) {
  const uint64_t sample_bound = QuantBound(a.sample_bits, false);
  auto rng = a.rng.Make();

  if (!a.model.empty()) {
    if (a.sidecar.empty() || a.sample.empty()) {
      throw UsageError("--model needs --sidecar and --sample");
    }
    const ClassifierModel model = LoadClassifierModel(a.model, a.sidecar);
    const PlainVector sample = ReadVectorCsv(a.sample, sample_bound, false);
    const uint32_t n = static_cast<uint32_t>(model.weights.values.size());
    const uint64_t s = uint64_t{n} * model.weights.bound * sample_bound + 1;
    const auto setup = Setup(n, s, true, *rng);
    ValidateClassifier(model, sample_bound, setup.pp);
    const auto key = KeyGen(setup.msk, model.weights, *rng);
    const auto ct = Encrypt(setup.msk, sample, *rng);
    std::cout << FormatClass(
                     ClassifyEncrypted(setup.pp, key, ct, model.threshold))
              << "\n";
    return kExitOk;
  }

  // Synthetic run: random 12-bit signed models against 6-bit samples.
  std::mt19937_64 gen(a.rng.seed.value_or(std::random_device{}()));
  const int64_t w_bound = static_cast<int64_t>(QuantBound(12, true));
  std::uniform_int_distribution<int64_t> weight(-w_bound, w_bound);
  std::uniform_int_distribution<int64_t> feature(
      0, static_cast<int64_t>(sample_bound));
  const uint64_t s = uint64_t{a.n} * w_bound * sample_bound + 1;
  const auto setup = Setup(a.n, s, true, *rng);

  uint64_t agree = 0;
  for (uint64_t t = 0; t < a.trials; ++t) {
    ClassifierModel model;
    model.weights.bound = w_bound;
    model.weights.is_signed = true;
    PlainVector sample;
    sample.bound = sample_bound;
    for (uint32_t i = 0; i < a.n; ++i) {
      model.weights.values.push_back(weight(gen));
      sample.values.push_back(feature(gen));
    }
    std::uniform_int_distribution<int64_t> thr(-w_bound * 8, w_bound * 8);
    model.threshold = thr(gen);
    ValidateClassifier(model, sample_bound, setup.pp);

    const auto key = KeyGen(setup.msk, model.weights, *rng);
    const auto ct = Encrypt(setup.msk, sample, *rng);
    const auto enc = ClassifyEncrypted(setup.pp, key, ct, model.threshold);
    const Class plain =
        ClassifyPlain(model.weights.values, sample.values, model.threshold);
    agree += enc == plain;
    std::cout << "trial " << t << ": encrypted=" << FormatClass(enc)
              << " plaintext=" << ClassName(plain) << "\n";
  }
  std::cout << "agreement " << agree << "/" << a.trials << "\n";
  return agree == a.trials ? kExitOk : kExitCrypto;
}

struct LocalizeArgs {
  std::string db;
  std::string query;
  uint32_t aps = 4;
  uint32_t locations = 9;
  std::optional<uint64_t> spread;
  std::optional<uint64_t> alpha;
  std::optional<size_t> k;
  bool reveal_distances = false;
  RngOption rng;
};

int RunDemoLocalize(const LocalizeArgs& a) {
  LocalizationConfig config;
  FingerprintDatabase db;
  std::vector<int64_t> query;

  if (!a.db.empty()) {
    if (a.query.empty()) throw UsageError("--db needs --query");
    db = ReadFingerprintDatabase(a.db);
    config.n_aps = db.n_aps;
    query = ReadVectorCsv(a.query, QuantBound(config.quant_bits, false), false)
                .values;
  } else {
    // Synthetic scenario: fingerprints drawn from a band of width `spread`.
    config.n_aps = a.aps;
    const uint64_t spread = a.spread.value_or(31);
    std::mt19937_64 gen(a.rng.seed.value_or(std::random_device{}()));
    std::uniform_int_distribution<int64_t> rssi(16,
                                                16 + static_cast<int64_t>(spread));
    db.n_aps = a.aps;
    for (uint32_t i = 0; i < a.locations; ++i) {
      FingerprintEntry e{i, {}};
      for (uint32_t j = 0; j < a.aps; ++j) e.rssi.push_back(rssi(gen));
      db.entries.push_back(std::move(e));
    }
    for (uint32_t j = 0; j < a.aps; ++j) query.push_back(rssi(gen));
    config.spread = spread;
  }
  if (a.spread) config.spread = *a.spread;

  const uint64_t alpha =
      a.alpha.value_or(CeilSqrt(WorstCaseDistance(config) + 1));
  const uint64_t s = DlogParams::ForTableAlpha(alpha, false).bound;
  auto rng = a.rng.Make();
  const auto setup = Setup(AugmentedDimension(config), s, false, *rng);
  ValidateLocalizationParams(config, setup.pp);

  std::vector<FunctionKey> keys;
  std::vector<uint64_t> indices;
  for (const auto& e : db.entries) {
    keys.push_back(KeyGen(setup.msk, AugmentDbEntry(e.rssi, config), *rng));
    indices.push_back(e.index);
  }
  const Ciphertext ct =
      Encrypt(setup.msk, AugmentQueryFingerprint(query, config), *rng);
  const auto result = NearestNeighbors(setup.pp, ct, keys, indices,
                                       a.k.value_or(keys.size()));
  if (result.failures > 0) {
    std::cerr << "warning: " << result.failures
              << " distance(s) could not be decrypted\n";
  }
  std::cout << NeighborResultToJson(result, a.reveal_distances) << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------

int Main(int argc, char** argv) {
  CLI::App app{"Function-hiding inner product encryption over BLS12-381"};
  app.require_subcommand(1);

  SetupArgs setup;
  auto* c_setup = app.add_subcommand("setup", "Generate a master secret key");
  c_setup->add_option("--n", setup.n, "Vector dimension")->required();
  c_setup->add_option("--s", setup.s, "Decryption bound |S|")->required();
  c_setup->add_flag("--signed", setup.is_signed, "Signed decryption range");
  c_setup->add_option("--matrix", setup.matrix_csv,
                      "Use this B (CSV) instead of sampling one");
  c_setup->add_option("--out", setup.out)->required();
  AddSeed(c_setup, setup.rng);

  VectorOpArgs keygen, encrypt;
  auto* c_keygen = app.add_subcommand("keygen", "Derive a function key");
  auto* c_encrypt = app.add_subcommand("encrypt", "Encrypt a vector");
  for (auto [cmd, args] : {std::pair{c_keygen, &keygen},
                           std::pair{c_encrypt, &encrypt}}) {
    cmd->add_option("--msk", args->msk)->required();
    cmd->add_option("--vec", args->vec, "One integer per line")->required();
    cmd->add_option("--out", args->out)->required();
    cmd->add_option("--bound", args->bound, "Per-element magnitude bound");
    cmd->add_flag("--compressed", args->compressed, "Compressed points");
    AddSeed(cmd, args->rng);
  }

  DecryptArgs decrypt;
  auto* c_decrypt = app.add_subcommand("decrypt", "Recover <x, y> or BOT");
  auto* pp_source = c_decrypt->add_option("--msk", decrypt.msk);
  c_decrypt->add_option("--pp", decrypt.pp,
                        "Any fhipe file whose header carries the parameters")
      ->excludes(pp_source);
  c_decrypt->add_option("--key", decrypt.key)->required();
  c_decrypt->add_option("--ct", decrypt.ct)->required();
  c_decrypt->add_option("--table", decrypt.table);
  c_decrypt->add_option("--mp-strategy", decrypt.strategy)
      ->check(CLI::IsMember({"naive", "shared-fe", "shared-ml-fe"}));
  c_decrypt->add_flag("--fast-lookup", decrypt.fast_lookup,
                      "Sorted table lookup (not constant time)");

  TableArgs table;
  auto* c_table = app.add_subcommand("table", "Precompute a baby-step table");
  c_table->add_option("--msk", table.msk);
  c_table->add_option("--key", table.key);
  c_table->add_option("--ct", table.ct);
  c_table->add_flag("--ct-free-base", table.ct_free_base,
                    "Base e(k1, G2) instead of e(k1, c1)");
  c_table->add_option("--alpha", table.alpha);
  c_table->add_option("--out", table.out)->required();

  BenchArgs bench;
  auto* c_bench = app.add_subcommand("bench", "Run a benchmark suite");
  c_bench->add_option("--suite", bench.suite)
      ->required()
      ->check(CLI::IsMember(
          {"encrypt", "decrypt", "multipairing", "g2mul", "dlog-table"}));
  c_bench->add_option("--n-list", bench.n_list)->delimiter(',');
  c_bench->add_option("--alpha-list", bench.alpha_list)->delimiter(',');
  c_bench->add_option("--mp-strategy", bench.strategies)->delimiter(',');
  c_bench->add_option("--csv", bench.csv);
  c_bench->add_option("--svg", bench.svg);
  c_bench->add_option("--size-svg", bench.size_svg,
                      "Ciphertext size chart over --n-list");
  c_bench->add_option("--iterations", bench.iterations);
  c_bench->add_option("--seed", bench.seed);

  ClassifyArgs classify;
  auto* c_classify =
      app.add_subcommand("demo-classify", "Encrypted linear classification");
  c_classify->add_option("--model", classify.model, "Weights CSV");
  c_classify->add_option("--sidecar", classify.sidecar, "Model JSON sidecar");
  c_classify->add_option("--sample", classify.sample, "Sample CSV");
  c_classify->add_option("--sample-bits", classify.sample_bits);
  c_classify->add_option("--n", classify.n, "Synthetic dimension");
  c_classify->add_option("--trials", classify.trials, "Synthetic trials");
  AddSeed(c_classify, classify.rng);

  LocalizeArgs localize;
  auto* c_localize =
      app.add_subcommand("demo-localize", "Private fingerprint localization");
  c_localize->add_option("--db", localize.db, "index,rssi_1,...,rssi_N rows");
  c_localize->add_option("--query", localize.query,
                         "Quantized query fingerprint");
  c_localize->add_option("--aps", localize.aps, "Synthetic N");
  c_localize->add_option("--locations", localize.locations, "Synthetic M");
  c_localize->add_option("--spread", localize.spread);
  c_localize->add_option("--alpha", localize.alpha);
  c_localize->add_option("--k", localize.k);
  c_localize->add_flag("--reveal-distances", localize.reveal_distances);
  AddSeed(c_localize, localize.rng);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*c_setup) return RunSetup(setup);
    if (*c_keygen) return RunKeygenOrEncrypt(keygen, true);
    if (*c_encrypt) return RunKeygenOrEncrypt(encrypt, false);
    if (*c_decrypt) return RunDecrypt(decrypt);
    if (*c_table) return RunTable(table);
    if (*c_bench) return RunBench(bench);
    if (*c_classify) return RunDemoClassify(classify);
    if (*c_localize) return RunDemoLocalize(localize);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const IoError& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return kExitIo;
  } catch (const FormatError& e) {
    std::cerr << "format error: " << e.what() << "\n";
    return kExitIo;
  } catch (const PointDecodeError& e) {
    std::cerr << "format error: " << e.what() << "\n";
    return kExitIo;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCrypto;
  }
  return kExitUsage;
}

}  // namespace
}  // namespace fhipe::tools

int main(int argc, char** argv) { return fhipe::tools::Main(argc, argv); }
