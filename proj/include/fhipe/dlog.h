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

// Bounded discrete logarithm in GT by baby-step giant-step.
//
// The baby-step table holds d1^0 .. d1^(alpha-1) and is built with a power
// tree: even powers by cyclotomic squaring of the half power, odd powers by
// one multiplication with d1. The giant-step loop always runs alpha
// iterations and scans the whole table on each, so the running time does not
// depend on the exponent being searched for.

#ifndef FHIPE_DLOG_H_
#define FHIPE_DLOG_H_

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "fhipe/pairing.h"

namespace fhipe {

// Largest table accepted (about 600 MB of GT elements).
inline constexpr uint64_t kMaxTableAlpha = uint64_t{1} << 20;

// ceil(sqrt(v)) for v >= 0, exact.
uint64_t CeilSqrt(uint64_t v);

// Search parameters for a bound s. Unsigned search covers [0, s); signed
// search covers [-(s-1), s-1] by shifting the target by d1^(s-1) and searching
// [0, 2s-1). Since s fits in 64 bits it is always far below q/2, so positive
// and negative images never collide.
struct DlogParams {
  uint64_t bound = 1;        // s
  bool is_signed = false;
  uint64_t search_size = 1;  // s, or 2s - 1 when signed
  uint64_t table_alpha = 1;  // ceil(sqrt(search_size))

  // Throws InvalidArgumentError when s == 0 or the table would be too large.
  static DlogParams Create(uint64_t s, bool is_signed);

  // The largest bound whose table size is exactly `alpha`.
  static DlogParams ForTableAlpha(uint64_t alpha, bool is_signed);
};

struct PowerTreeStats {
  uint64_t multiplications = 0;
  uint64_t squarings = 0;
};

// Serialized baby-step table plus the giant step d1^(-alpha). Immutable
// after construction and safe to share between threads.
class DlogTable {
 public:
  using SearchKey = std::array<uint64_t, 4>;

  static DlogTable BuildPowerTree(const GtElement& base, uint64_t alpha,
                                  PowerTreeStats* stats = nullptr);

  // alpha - 1 plain multiplications; the benchmark reference for the tree.
  static DlogTable BuildMultiplicationOnly(const GtElement& base,
                                           uint64_t alpha,
                                           PowerTreeStats* stats = nullptr);

  const GtElement& base() const { return base_; }
  uint64_t alpha() const { return alpha_; }
  const GtElement& giant_step() const { return giant_step_; }

  std::span<const uint8_t> entry_bytes(uint64_t j) const;
  GtElement entry(uint64_t j) const;

  size_t MemoryBytes() const;

  // Adds a sorted index so lookups use binary search. Not constant time;
  // benchmarking only.
  void EnableFastLookup();
  bool fast_lookup_enabled() const { return !sorted_keys_.empty(); }

  // "FHDT" | version | alpha (u64 LE) | entry length (u32 LE) | entries |
  // giant step.
  std::vector<uint8_t> Serialize() const;
  // Throws FormatError on framing problems and IntegrityError when the
  // entries are not consecutive powers of one GT element.
  static DlogTable Deserialize(std::span<const uint8_t> bytes);

  // Constant-time scan of every entry; returns (match, index).
  std::pair<bool, uint64_t> ScanConstantTime(const SearchKey& key) const;
  std::pair<bool, uint64_t> LookupFast(const SearchKey& key) const;

  static SearchKey KeyOf(std::span<const uint8_t> gt_bytes);

 private:
  DlogTable(const GtElement& base, std::vector<GtElement> powers);

  GtElement base_;
  uint64_t alpha_ = 0;
  GtElement giant_step_;
  std::vector<uint8_t> entries_;  // alpha * kGtBytes
  std::vector<SearchKey> keys_;
  std::vector<std::pair<SearchKey, uint64_t>> sorted_keys_;
};

struct BsgsStats {
  uint64_t iterations = 0;
};

// Smallest z in [0, s) with d2 = d1^z, or nullopt. `params` must be unsigned
// and `table` built from d1 with params.table_alpha entries; violations and
// an identity d1 throw InvalidArgumentError.
std::optional<uint64_t> Bsgs(const GtElement& d1, const GtElement& d2,
                             const DlogParams& params, const DlogTable& table,
                             BsgsStats* stats = nullptr);

// z in [-(s-1), s-1] with d2 = d1^z, or nullopt. `params` must be signed.
std::optional<int64_t> BsgsSigned(const GtElement& d1, const GtElement& d2,
                                  const DlogParams& params,
                                  const DlogTable& table,
                                  BsgsStats* stats = nullptr);

}  // namespace fhipe

#endif  // FHIPE_DLOG_H_
