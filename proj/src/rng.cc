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

#include "fhipe/rng.h"

#include <sodium.h>

#include <cstring>

#include "fhipe/errors.h"

namespace fhipe {
namespace {

constexpr int kMaxZeroDraws = 16;

void EnsureSodium() {
  if (sodium_init() < 0) throw RngFailureError("libsodium failed to initialize");
}

}  // namespace

OsRandom::OsRandom() { EnsureSodium(); }

void OsRandom::Fill(std::span<uint8_t> out) {
  randombytes_buf(out.data(), out.size());
}

SeededRandom::SeededRandom(uint64_t seed) : buffer_pos_(buffer_.size()) {
  EnsureSodium();
  uint8_t seed_bytes[8];
  for (int i = 0; i < 8; ++i) seed_bytes[i] = static_cast<uint8_t>(seed >> (8 * i));
  static constexpr char kDomain[] = "fhipe.seeded-rng.v1";
  crypto_generichash(key_.data(), key_.size(), seed_bytes, sizeof(seed_bytes),
                     reinterpret_cast<const uint8_t*>(kDomain),
                     sizeof(kDomain) - 1);
}

void SeededRandom::Refill() {
  static constexpr uint8_t kZeros[64] = {};
  static constexpr uint8_t kNonce[crypto_stream_chacha20_NONCEBYTES] = {};
  crypto_stream_chacha20_xor_ic(buffer_.data(), kZeros, buffer_.size(), kNonce,
                                block_counter_++, key_.data());
  buffer_pos_ = 0;
}

void SeededRandom::Fill(std::span<uint8_t> out) {
  size_t written = 0;
  while (written < out.size()) {
    if (buffer_pos_ == buffer_.size()) Refill();
    const size_t take =
        std::min(out.size() - written, buffer_.size() - buffer_pos_);
    std::memcpy(out.data() + written, buffer_.data() + buffer_pos_, take);
    buffer_pos_ += take;
    written += take;
  }
}

ZqScalar RandomScalar(RandomSource& rng) {
  std::array<uint8_t, 64> wide;
  rng.Fill(wide);
  ZqScalar out = ZqScalar::FromWideLittleEndian(wide);
  sodium_memzero(wide.data(), wide.size());
  return out;
}

ZqScalar RandomNonzeroScalar(RandomSource& rng) {
  for (int attempt = 0; attempt < kMaxZeroDraws; ++attempt) {
    ZqScalar v = RandomScalar(rng);
    if (!v.IsZero()) return v;
  }
  throw RngFailureError("random source keeps returning zero scalars");
}

}  // namespace fhipe
