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

#ifndef FHIPE_RNG_H_
#define FHIPE_RNG_H_

#include <array>
#include <cstdint>
#include <span>

#include "fhipe/zq.h"

namespace fhipe {

// Source of cryptographic randomness. Instances are not thread-safe; give
// each thread its own.
class RandomSource {
 public:
  virtual ~RandomSource() = default;
  virtual void Fill(std::span<uint8_t> out) = 0;
};

// Operating-system entropy (getrandom via libsodium).
class OsRandom final : public RandomSource {
 public:
  OsRandom();
  void Fill(std::span<uint8_t> out) override;
};

// ChaCha20 keystream under a key derived from `seed`. Reproducible, which
// makes it suitable for fixtures and tests only.
class SeededRandom final : public RandomSource {
 public:
  explicit SeededRandom(uint64_t seed);
  void Fill(std::span<uint8_t> out) override;

 private:
  void Refill();

  std::array<uint8_t, 32> key_;
  uint64_t block_counter_ = 0;
  std::array<uint8_t, 64> buffer_;
  size_t buffer_pos_;
};

// Uniform element of Z_q (64 random bytes reduced mod q; bias < 2^-250).
ZqScalar RandomScalar(RandomSource& rng);

// Uniform element of Z_q \ {0}. Throws RngFailureError after 16 zero draws.
ZqScalar RandomNonzeroScalar(RandomSource& rng);

}  // namespace fhipe

#endif  // FHIPE_RNG_H_
