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

// Two applications built on the scheme: a linear classifier evaluated on an
// encrypted sample, and nearest-neighbour fingerprint localization where the
// server learns only squared distances.

#ifndef FHIPE_APPS_H_
#define FHIPE_APPS_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fhipe/fhipe.h"

namespace fhipe {

// ---------------------------------------------------------------------------
// Classification

enum class Class { kC0, kC1 };

std::string_view ClassName(Class c);

struct ClassifierModel {
  PlainVector weights;
  int64_t threshold = 0;
  uint32_t quant_bits = 12;
  bool is_signed = true;
};

// Largest magnitude representable in `bits` bits: 2^bits - 1 unsigned,
// 2^(bits-1) - 1 signed.
uint64_t QuantBound(uint32_t bits, bool is_signed);

// Throws InvalidArgumentError unless n * Bw * Bs < s and the model's
// dimension matches pp.n.
void ValidateClassifier(const ClassifierModel& model, uint64_t sample_bound,
                        const PublicParams& pp);

// Weights CSV (one integer per line) plus a JSON sidecar with keys
// "threshold", "quant_bits" and "signed".
ClassifierModel ParseClassifierModel(std::string_view weights_csv,
                                     std::string_view sidecar_json);
ClassifierModel LoadClassifierModel(const std::filesystem::path& weights_csv,
                                    const std::filesystem::path& sidecar);

// C0 when <w, s> <= T, C1 otherwise.
Class ClassifyPlain(std::span<const int64_t> weights,
                    std::span<const int64_t> sample, int64_t threshold);

// nullopt when the inner product falls outside the decryptable range.
std::optional<Class> ClassifyEncrypted(const PublicParams& pp,
                                       const FunctionKey& weights_key,
                                       const Ciphertext& sample_ct,
                                       int64_t threshold,
                                       const DecryptOptions& options = {});

// ---------------------------------------------------------------------------
// Localization

struct LocalizationConfig {
  uint32_t n_aps = 4;
  uint32_t quant_bits = 6;
  // Largest per-AP difference between any query and any database entry.
  // Defaults to the full quantized range.
  uint64_t spread = 63;
  double dbm_min = -100.0;  // maps to 0
  double dbm_max = -37.0;   // maps to 2^quant_bits - 1
};

uint32_t AugmentedDimension(const LocalizationConfig& config);

// N * spread^2.
uint64_t WorstCaseDistance(const LocalizationConfig& config);

// Throws InvalidArgumentError when pp.n != N + 2 or the worst-case distance
// is not below s.
void ValidateLocalizationParams(const LocalizationConfig& config,
                                const PublicParams& pp);

// Clamps to [dbm_min, dbm_max] and maps linearly onto [0, 2^bits - 1].
int64_t QuantizeRssi(double dbm, const LocalizationConfig& config);

// (1, v_1, ..., v_N, sum v_j^2)
PlainVector AugmentQueryFingerprint(std::span<const int64_t> v,
                                    const LocalizationConfig& config);
// (sum w_j^2, -2 w_1, ..., -2 w_N, 1)
PlainVector AugmentDbEntry(std::span<const int64_t> w,
                           const LocalizationConfig& config);

int64_t PlainSquaredDistance(std::span<const int64_t> a,
                             std::span<const int64_t> b);

struct FingerprintEntry {
  uint64_t index = 0;
  std::vector<int64_t> rssi;
};

struct FingerprintDatabase {
  uint32_t n_aps = 0;
  std::vector<FingerprintEntry> entries;
};

// Rows of `index,rssi_1,...,rssi_N`; lines starting with '#' are skipped.
FingerprintDatabase ParseFingerprintDatabase(std::string_view csv);
FingerprintDatabase ReadFingerprintDatabase(const std::filesystem::path& path);

struct NeighborResult {
  std::vector<uint64_t> indices;    // nearest first
  std::vector<int64_t> distances;   // aligned with indices
  // One slot per database entry in input order; nullopt marks a failed
  // decryption.
  std::vector<std::optional<int64_t>> all_distances;
  size_t failures = 0;
};

// Decrypts one distance per key and returns the k nearest location indices.
// Ties go to the smaller location index. Failed decryptions are excluded.
NeighborResult NearestNeighbors(const PublicParams& pp,
                                const Ciphertext& query_ct,
                                std::span<const FunctionKey> db_keys,
                                std::span<const uint64_t> location_indices,
                                size_t k, const DecryptOptions& options = {});

// {"indices": [...]} plus "distances" when reveal_distances is set.
std::string NeighborResultToJson(const NeighborResult& result,
                                 bool reveal_distances);

}  // namespace fhipe

#endif  // FHIPE_APPS_H_
