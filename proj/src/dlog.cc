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

#include "fhipe/dlog.h"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstring>
#include <limits>

#include <sodium.h>

#include "fhipe/errors.h"

namespace fhipe {
namespace {

constexpr char kTableMagic[4] = {'F', 'H', 'D', 'T'};
constexpr uint8_t kTableVersion = 0x01;
constexpr size_t kTableHeaderBytes = 4 + 1 + 8 + 4;

// The search key is a BLAKE2b-256 digest of the full canonical encoding. A
// slice of the encoding does not work: an element and its inverse (the
// conjugate) share the first half.

// All-ones when x == 0, zero otherwise, without branching.
inline uint64_t ZeroMask(uint64_t x) {
  return ((x | (0 - x)) >> 63) - 1;
}

void PutLe(std::vector<uint8_t>& out, uint64_t v, int bytes) {
  for (int i = 0; i < bytes; ++i) out.push_back(static_cast<uint8_t>(v >> (8 * i)));
}

uint64_t GetLe(const uint8_t* in, int bytes) {
  uint64_t v = 0;
  for (int i = 0; i < bytes; ++i) v |= static_cast<uint64_t>(in[i]) << (8 * i);
  return v;
}

void CheckAlpha(uint64_t alpha) {
  if (alpha == 0 || alpha > kMaxTableAlpha) {
    throw InvalidArgumentError("table size must be in [1, 2^20]");
  }
}

// Giant-step walk shared by the signed and unsigned entry points. Returns the
// exponent in [0, search_size) or nullopt.
std::optional<uint64_t> SearchRange(const GtElement& d1, const GtElement& d2,
                                    const DlogParams& params,
                                    const DlogTable& table, BsgsStats* stats) {
  if (d1.IsIdentity()) {
    throw InvalidArgumentError("discrete log base must not be the identity");
  }
  if (table.alpha() != params.table_alpha) {
    throw InvalidArgumentError("table size does not match the search bound");
  }
  if (!(table.base() == d1)) {
    throw InvalidArgumentError("table was built for a different base");
  }

  const uint64_t alpha = table.alpha();
  const bool fast = table.fast_lookup_enabled();
  blst_fp12 t1 = d2.fp12();
  const blst_fp12& t0 = table.giant_step().fp12();

  uint64_t found = 0;  // all-ones once a match has been recorded
  uint64_t z = 0;
  uint64_t z_dummy = 0;
  uint64_t iterations = 0;
  std::array<uint8_t, kGtBytes> bytes;
  for (uint64_t i = 0; i < alpha; ++i) {
    blst_bendian_from_fp12(bytes.data(), &t1);
    const auto key = DlogTable::KeyOf(bytes);
    const auto [match, j] =
        fast ? table.LookupFast(key) : table.ScanConstantTime(key);
    const uint64_t candidate = i * alpha + j;
    const uint64_t take = (0 - static_cast<uint64_t>(match)) & ~found;
    z = (candidate & take) | (z & ~take);
    z_dummy = (candidate & ~take) | (z_dummy & take);
    found |= take;
    blst_fp12_mul(&t1, &t1, &t0);
    ++iterations;
  }
  static_cast<void>(z_dummy);
  if (stats != nullptr) stats->iterations = iterations;

  if (found != 0 && z < params.search_size) return z;
  return std::nullopt;
}

}  // namespace

uint64_t CeilSqrt(uint64_t v) {
  if (v <= 1) return v;
  uint64_t r = static_cast<uint64_t>(std::sqrt(static_cast<long double>(v)));
  // Correct floating-point error in both directions.
  while (static_cast<unsigned __int128>(r) * r > v) --r;
  while (static_cast<unsigned __int128>(r + 1) * (r + 1) <= v) ++r;
  return static_cast<unsigned __int128>(r) * r == v ? r : r + 1;
}

DlogParams DlogParams::Create(uint64_t s, bool is_signed) {
  if (s == 0) throw InvalidArgumentError("dlog bound s must be >= 1");
  if (is_signed && s > (std::numeric_limits<uint64_t>::max() >> 2)) {
    throw InvalidArgumentError("signed dlog bound too large");
  }
  DlogParams p;
  p.bound = s;
  p.is_signed = is_signed;
  p.search_size = is_signed ? 2 * s - 1 : s;
  p.table_alpha = CeilSqrt(p.search_size);
  CheckAlpha(p.table_alpha);
  return p;
}

DlogParams DlogParams::ForTableAlpha(uint64_t alpha, bool is_signed) {
  CheckAlpha(alpha);
  const uint64_t square = alpha * alpha;
  // Signed: largest s with 2s - 1 <= alpha^2.
  return Create(is_signed ? (square + 1) / 2 : square, is_signed);
}

DlogTable::DlogTable(const GtElement& base, std::vector<GtElement> powers)
    : base_(base), alpha_(powers.size() - 1) {
  entries_.resize(alpha_ * kGtBytes);
  keys_.resize(alpha_);
  for (uint64_t j = 0; j < alpha_; ++j) {
    const auto bytes = SerializeGt(powers[j]);
    std::memcpy(entries_.data() + j * kGtBytes, bytes.data(), kGtBytes);
    keys_[j] = KeyOf(bytes);
  }
  giant_step_ = GtInverse(powers[alpha_]);
#ifndef NDEBUG
  // Distinct exponents below q give distinct elements of a prime-order group.
  auto sorted = keys_;
  std::sort(sorted.begin(), sorted.end());
  assert(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
#endif
}

DlogTable DlogTable::BuildPowerTree(const GtElement& base, uint64_t alpha,
                                    PowerTreeStats* stats) {
  CheckAlpha(alpha);
  PowerTreeStats local;
  std::vector<GtElement> powers(alpha + 1);
  powers[1] = base;
  for (uint64_t k = 2; k <= alpha; ++k) {
    if (k % 2 == 0) {
      powers[k] = GtCyclotomicSquare(powers[k / 2]);
      ++local.squarings;
    } else {
      powers[k] = GtMul(powers[k - 1], base);
      ++local.multiplications;
    }
  }
  if (stats != nullptr) *stats = local;
  return DlogTable(base, std::move(powers));
}

DlogTable DlogTable::BuildMultiplicationOnly(const GtElement& base,
                                             uint64_t alpha,
                                             PowerTreeStats* stats) {
  CheckAlpha(alpha);
  PowerTreeStats local;
  std::vector<GtElement> powers(alpha + 1);
  powers[1] = base;
  for (uint64_t k = 2; k <= alpha; ++k) {
    powers[k] = GtMul(powers[k - 1], base);
    ++local.multiplications;
  }
  if (stats != nullptr) *stats = local;
  return DlogTable(base, std::move(powers));
}

std::span<const uint8_t> DlogTable::entry_bytes(uint64_t j) const {
  return std::span<const uint8_t>(entries_).subspan(j * kGtBytes, kGtBytes);
}

GtElement DlogTable::entry(uint64_t j) const {
  return internal::DeserializeGtCanonical(entry_bytes(j));
}

size_t DlogTable::MemoryBytes() const {
  return entries_.size() + keys_.size() * sizeof(SearchKey) +
         sorted_keys_.size() * sizeof(sorted_keys_[0]) + 2 * sizeof(GtElement);
}

void DlogTable::EnableFastLookup() {
  sorted_keys_.clear();
  sorted_keys_.reserve(alpha_);
  for (uint64_t j = 0; j < alpha_; ++j) sorted_keys_.emplace_back(keys_[j], j);
  std::sort(sorted_keys_.begin(), sorted_keys_.end());
}

DlogTable::SearchKey DlogTable::KeyOf(std::span<const uint8_t> gt_bytes) {
  static const bool ready = sodium_init() >= 0;
  if (!ready) throw RngFailureError("libsodium failed to initialize");
  SearchKey key;
  crypto_generichash(reinterpret_cast<unsigned char*>(key.data()), sizeof(key),
                     gt_bytes.data(), gt_bytes.size(), nullptr, 0);
  return key;
}

std::pair<bool, uint64_t> DlogTable::ScanConstantTime(
    const SearchKey& key) const {
  uint64_t hit = 0;
  uint64_t index = 0;
  for (uint64_t j = 0; j < alpha_; ++j) {
    const SearchKey& k = keys_[j];
    const uint64_t diff = (k[0] ^ key[0]) | (k[1] ^ key[1]) |
                          (k[2] ^ key[2]) | (k[3] ^ key[3]);
    const uint64_t eq = ZeroMask(diff);
    index |= j & eq;
    hit |= eq;
  }
  return {hit != 0, index};
}

std::pair<bool, uint64_t> DlogTable::LookupFast(const SearchKey& key) const {
  auto it = std::lower_bound(
      sorted_keys_.begin(), sorted_keys_.end(), key,
      [](const auto& entry, const SearchKey& k) { return entry.first < k; });
  if (it != sorted_keys_.end() && it->first == key) return {true, it->second};
  return {false, 0};
}

std::vector<uint8_t> DlogTable::Serialize() const {
  std::vector<uint8_t> out;
  out.reserve(kTableHeaderBytes + entries_.size() + kGtBytes);
  out.insert(out.end(), std::begin(kTableMagic), std::end(kTableMagic));
  out.push_back(kTableVersion);
  PutLe(out, alpha_, 8);
  PutLe(out, kGtBytes, 4);
  out.insert(out.end(), entries_.begin(), entries_.end());
  const auto giant = SerializeGt(giant_step_);
  out.insert(out.end(), giant.begin(), giant.end());
  return out;
}

DlogTable DlogTable::Deserialize(std::span<const uint8_t> bytes) {
  if (bytes.size() < kTableHeaderBytes ||
      std::memcmp(bytes.data(), kTableMagic, 4) != 0) {
    throw FormatError("not a dlog table (bad magic)");
  }
  if (bytes[4] != kTableVersion) throw FormatError("unsupported table version");
  const uint64_t alpha = GetLe(bytes.data() + 5, 8);
  const uint64_t entry_len = GetLe(bytes.data() + 13, 4);
  if (entry_len != kGtBytes) throw FormatError("unexpected GT entry length");
  if (alpha == 0 || alpha > kMaxTableAlpha) {
    throw FormatError("table size out of range");
  }
  if (bytes.size() != kTableHeaderBytes + (alpha + 1) * kGtBytes) {
    throw FormatError("table file truncated or oversized");
  }

  auto element_at = [&](uint64_t j) {
    try {
      return internal::DeserializeGtCanonical(
          bytes.subspan(kTableHeaderBytes + j * kGtBytes, kGtBytes));
    } catch (const PointDecodeError& e) {
      throw FormatError(std::string("table entry: ") + e.what());
    }
  };
  const GtElement giant = element_at(alpha);
  const GtElement base = alpha >= 2 ? element_at(1) : GtInverse(giant);
  if (!GtInGroup(base) || base.IsIdentity()) {
    throw IntegrityError("table base is not a nontrivial GT element");
  }

  // Membership of every entry follows from the chain of multiplications.
  std::vector<GtElement> powers(alpha + 1);
  powers[1] = base;
  if (!element_at(0).IsIdentity()) {
    throw IntegrityError("table entry 0 is not the identity");
  }
  for (uint64_t j = 2; j <= alpha; ++j) {
    powers[j] = GtMul(powers[j - 1], base);
    if (j < alpha && !(element_at(j) == powers[j])) {
      throw IntegrityError("table entries are not consecutive powers");
    }
  }
  if (!GtMul(powers[alpha], giant).IsIdentity()) {
    throw IntegrityError("giant step does not invert base^alpha");
  }
  return DlogTable(base, std::move(powers));
}

std::optional<uint64_t> Bsgs(const GtElement& d1, const GtElement& d2,
                             const DlogParams& params, const DlogTable& table,
                             BsgsStats* stats) {
  if (params.is_signed) {
    throw InvalidArgumentError("Bsgs expects unsigned parameters");
  }
  return SearchRange(d1, d2, params, table, stats);
}

std::optional<int64_t> BsgsSigned(const GtElement& d1, const GtElement& d2,
                                  const DlogParams& params,
                                  const DlogTable& table, BsgsStats* stats) {
  if (!params.is_signed) {
    throw InvalidArgumentError("BsgsSigned expects signed parameters");
  }
  const uint64_t shift = params.bound - 1;
  const GtElement shifted = GtMul(d2, GtExp(d1, ZqScalar::FromUint64(shift)));
  const auto z = SearchRange(d1, shifted, params, table, stats);
  if (!z) return std::nullopt;
  return static_cast<int64_t>(*z) - static_cast<int64_t>(shift);
}

}  // namespace fhipe
