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

#include "fhipe/apps.h"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "fhipe/errors.h"
#include "fhipe/wire_format.h"
#include "json.hpp"

namespace fhipe {
namespace {

// Element bound shared by both augmented vectors: the sum-of-squares slot
// dominates the others.
uint64_t AugmentedBound(const LocalizationConfig& config) {
  const uint64_t b = QuantBound(config.quant_bits, false);
  return std::max<uint64_t>({uint64_t{config.n_aps} * b * b, 2 * b, 1});
}

void CheckFingerprint(std::span<const int64_t> v,
                      const LocalizationConfig& config) {
  if (v.size() != config.n_aps) {
    throw InvalidArgumentError("fingerprint length " +
                               std::to_string(v.size()) + " != N = " +
                               std::to_string(config.n_aps));
  }
  const int64_t b = static_cast<int64_t>(QuantBound(config.quant_bits, false));
  for (int64_t x : v) {
    if (x < 0 || x > b) {
      throw InvalidArgumentError("quantized RSSI " + std::to_string(x) +
                                 " outside [0, " + std::to_string(b) + "]");
    }
  }
}

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

std::string_view ClassName(Class c) { return c == Class::kC0 ? "C0" : "C1"; }

uint64_t QuantBound(uint32_t bits, bool is_signed) {
  if (bits == 0 || bits > 32) {
    throw InvalidArgumentError("quant_bits must be in [1, 32]");
  }
  return is_signed ? (uint64_t{1} << (bits - 1)) - 1 : (uint64_t{1} << bits) - 1;
}

void ValidateClassifier(const ClassifierModel& model, uint64_t sample_bound,
                        const PublicParams& pp) {
  pp.Validate();
  if (model.weights.values.size() != pp.n) {
    throw InvalidArgumentError("model dimension does not match n");
  }
  model.weights.Validate();
  CheckElementBounds(pp, model.weights.bound, sample_bound);
}

ClassifierModel ParseClassifierModel(std::string_view weights_csv,
                                     std::string_view sidecar_json) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(sidecar_json);
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("model sidecar: ") + e.what());
  }
  ClassifierModel model;
  try {
    model.threshold = j.at("threshold").get<int64_t>();
    model.quant_bits = j.at("quant_bits").get<uint32_t>();
    model.is_signed = j.at("signed").get<bool>();
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("model sidecar: ") + e.what());
  }
  model.weights = ParseVectorCsv(
      weights_csv, QuantBound(model.quant_bits, model.is_signed),
      model.is_signed);
  return model;
}

ClassifierModel LoadClassifierModel(const std::filesystem::path& weights_csv,
                                    const std::filesystem::path& sidecar) {
  return ParseClassifierModel(ReadFileText(weights_csv),
                              ReadFileText(sidecar));
}

Class ClassifyPlain(std::span<const int64_t> weights,
                    std::span<const int64_t> sample, int64_t threshold) {
  if (weights.size() != sample.size()) {
    throw InvalidArgumentError("weights and sample dimensions differ");
  }
  __int128 z = 0;
  for (size_t i = 0; i < weights.size(); ++i) {
    z += static_cast<__int128>(weights[i]) * sample[i];
  }
  return z <= threshold ? Class::kC0 : Class::kC1;
}

std::optional<Class> ClassifyEncrypted(const PublicParams& pp,
                                       const FunctionKey& weights_key,
                                       const Ciphertext& sample_ct,
                                       int64_t threshold,
                                       const DecryptOptions& options) {
  const auto z = Decrypt(pp, weights_key, sample_ct, options);
  if (!z) return std::nullopt;
  return *z <= threshold ? Class::kC0 : Class::kC1;
}

uint32_t AugmentedDimension(const LocalizationConfig& config) {
  return config.n_aps + 2;
}

uint64_t WorstCaseDistance(const LocalizationConfig& config) {
  return uint64_t{config.n_aps} * config.spread * config.spread;
}

void ValidateLocalizationParams(const LocalizationConfig& config,
                                const PublicParams& pp) {
  pp.Validate();
  if (config.n_aps == 0) throw InvalidArgumentError("N must be >= 1");
  if (config.spread > QuantBound(config.quant_bits, false)) {
    throw InvalidArgumentError("spread exceeds the quantized range");
  }
  if (pp.n != AugmentedDimension(config)) {
    throw InvalidArgumentError("pp.n must equal N + 2");
  }
  if (WorstCaseDistance(config) >= pp.s) {
    throw InvalidArgumentError(
        "worst-case squared distance " +
        std::to_string(WorstCaseDistance(config)) +
        " is not below s = " + std::to_string(pp.s));
  }
}

int64_t QuantizeRssi(double dbm, const LocalizationConfig& config) {
  if (!(config.dbm_max > config.dbm_min)) {
    throw InvalidArgumentError("dbm_max must exceed dbm_min");
  }
  const double levels =
      static_cast<double>(QuantBound(config.quant_bits, false));
  const double clamped = std::clamp(dbm, config.dbm_min, config.dbm_max);
  return static_cast<int64_t>(std::llround(
      (clamped - config.dbm_min) / (config.dbm_max - config.dbm_min) *
      levels));
}

PlainVector AugmentQueryFingerprint(std::span<const int64_t> v,
                                    const LocalizationConfig& config) {
  CheckFingerprint(v, config);
  PlainVector out;
  out.bound = AugmentedBound(config);
  out.is_signed = false;
  out.values.reserve(v.size() + 2);
  out.values.push_back(1);
  int64_t sum_sq = 0;
  for (int64_t x : v) {
    out.values.push_back(x);
    sum_sq += x * x;
  }
  out.values.push_back(sum_sq);
  return out;
}

PlainVector AugmentDbEntry(std::span<const int64_t> w,
                           const LocalizationConfig& config) {
  CheckFingerprint(w, config);
  PlainVector out;
  out.bound = AugmentedBound(config);
  out.is_signed = true;
  out.values.reserve(w.size() + 2);
  int64_t sum_sq = 0;
  for (int64_t x : w) sum_sq += x * x;
  out.values.push_back(sum_sq);
  for (int64_t x : w) out.values.push_back(-2 * x);
  out.values.push_back(1);
  return out;
}

int64_t PlainSquaredDistance(std::span<const int64_t> a,
                             std::span<const int64_t> b) {
  if (a.size() != b.size()) {
    throw InvalidArgumentError("fingerprint dimensions differ");
  }
  int64_t d = 0;
  for (size_t i = 0; i < a.size(); ++i) d += (a[i] - b[i]) * (a[i] - b[i]);
  return d;
}

FingerprintDatabase ParseFingerprintDatabase(std::string_view csv) {
  FingerprintDatabase db;
  size_t line_no = 0;
  while (!csv.empty()) {
    ++line_no;
    const size_t eol = csv.find('\n');
    const std::string_view line = Trim(csv.substr(0, eol));
    csv.remove_prefix(eol == std::string_view::npos ? csv.size() : eol + 1);
    if (line.empty() || line.front() == '#') continue;

    std::vector<int64_t> fields;
    size_t start = 0;
    while (start <= line.size()) {
      const size_t comma = std::min(line.find(',', start), line.size());
      const std::string_view field = Trim(line.substr(start, comma - start));
      int64_t v = 0;
      const auto [ptr, ec] =
          std::from_chars(field.data(), field.data() + field.size(), v);
      if (field.empty() || ec != std::errc() ||
          ptr != field.data() + field.size()) {
        throw FormatError("database line " + std::to_string(line_no) +
                          ": bad field '" + std::string(field) + "'");
      }
      fields.push_back(v);
      start = comma + 1;
    }
    if (fields.size() < 2 || fields[0] < 0) {
      throw FormatError("database line " + std::to_string(line_no) +
                        ": expected index,rssi_1,...,rssi_N");
    }
    const uint32_t n_aps = static_cast<uint32_t>(fields.size() - 1);
    if (db.entries.empty()) {
      db.n_aps = n_aps;
    } else if (n_aps != db.n_aps) {
      throw FormatError("database line " + std::to_string(line_no) +
                        ": inconsistent fingerprint length");
    }
    db.entries.push_back(
        {static_cast<uint64_t>(fields[0]),
         std::vector<int64_t>(fields.begin() + 1, fields.end())});
  }
  if (db.entries.empty()) throw FormatError("database has no entries");
  return db;
}

FingerprintDatabase ReadFingerprintDatabase(const std::filesystem::path& path) {
  return ParseFingerprintDatabase(ReadFileText(path));
}

NeighborResult NearestNeighbors(const PublicParams& pp,
                                const Ciphertext& query_ct,
                                std::span<const FunctionKey> db_keys,
                                std::span<const uint64_t> location_indices,
                                size_t k, const DecryptOptions& options) {
  if (db_keys.size() != location_indices.size()) {
    throw InvalidArgumentError("one location index per key required");
  }
  for (const auto& key : db_keys) {
    if (key.k2.size() != query_ct.c2.size()) {
      throw InvalidArgumentError("key dimension differs from the query");
    }
  }

  NeighborResult result;
  result.all_distances.reserve(db_keys.size());
  std::vector<size_t> ranked;
  for (size_t i = 0; i < db_keys.size(); ++i) {
    // Each key gives a different base d1, so no table is shared.
    DecryptOptions per_key = options;
    per_key.table = nullptr;
    result.all_distances.push_back(
        Decrypt(pp, db_keys[i], query_ct, per_key));
    if (result.all_distances.back()) {
      ranked.push_back(i);
    } else {
      ++result.failures;
    }
  }

  std::sort(ranked.begin(), ranked.end(), [&](size_t a, size_t b) {
    const int64_t da = *result.all_distances[a];
    const int64_t db = *result.all_distances[b];
    if (da != db) return da < db;
    return location_indices[a] < location_indices[b];
  });
  ranked.resize(std::min(k, ranked.size()));
  for (size_t i : ranked) {
    result.indices.push_back(location_indices[i]);
    result.distances.push_back(*result.all_distances[i]);
  }
  return result;
}

std::string NeighborResultToJson(const NeighborResult& result,
                                 bool reveal_distances) {
  nlohmann::json j;
  j["indices"] = result.indices;
  if (reveal_distances) j["distances"] = result.distances;
  if (result.failures > 0) j["failures"] = result.failures;
  return j.dump();
}

}  // namespace fhipe
