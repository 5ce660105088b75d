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

#ifndef FHIPE_ZQ_H_
#define FHIPE_ZQ_H_

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "blst.h"

namespace fhipe {

inline constexpr size_t kScalarBytes = 32;

// q, the 255-bit prime order of G1, G2 and GT on BLS12-381.
inline constexpr std::string_view kGroupOrderDecimal =
    "52435875175126190479447740508185965837690552500527637822603658699938581184513";
inline constexpr std::string_view kGroupOrderHex =
    "73eda753299d7d483339d80809a1d80553bda402fffe5bfeffffffff00000001";

// Element of Z_q. Arithmetic runs on the backend's constant-time Montgomery
// field code; the stored value is always reduced.
class ZqScalar {
 public:
  ZqScalar();

  static ZqScalar Zero() { return ZqScalar(); }
  static ZqScalar One();
  static ZqScalar FromUint64(uint64_t v);

  // v >= 0 maps to v, v < 0 maps to q + v.
  static ZqScalar FromInt64(int64_t v);

  // Canonical 32-byte little-endian encoding; nullopt when the value is >= q.
  static std::optional<ZqScalar> FromLittleEndian(
      std::span<const uint8_t, kScalarBytes> bytes);

  // Reduces an arbitrary-length little-endian integer modulo q.
  static ZqScalar FromWideLittleEndian(std::span<const uint8_t> bytes);

  // Decimal digits only; nullopt on syntax error or value >= q.
  static std::optional<ZqScalar> FromDecimal(std::string_view text);

  std::array<uint8_t, kScalarBytes> ToLittleEndian() const;
  std::string ToDecimal() const;

  bool IsZero() const;

  // True when the canonical value exceeds (q-1)/2, i.e. it is the image of a
  // negative integer under FromInt64.
  bool IsNegativeImage() const;

  // Multiplicative inverse; the inverse of zero is zero.
  ZqScalar Inverse() const;

  ZqScalar operator+(const ZqScalar& o) const;
  ZqScalar operator-(const ZqScalar& o) const;
  ZqScalar operator*(const ZqScalar& o) const;
  ZqScalar operator-() const;
  ZqScalar& operator+=(const ZqScalar& o);
  ZqScalar& operator-=(const ZqScalar& o);
  ZqScalar& operator*=(const ZqScalar& o);

  bool operator==(const ZqScalar& o) const;

  const blst_fr& fr() const { return fr_; }

 private:
  explicit ZqScalar(const blst_fr& fr) : fr_(fr) {}

  blst_fr fr_;
};

// Inverse of FromInt64 on the image of int64_t. Throws InvalidArgumentError
// when the scalar is not the image of any int64_t.
int64_t ToInt64(const ZqScalar& z);

}  // namespace fhipe

#endif  // FHIPE_ZQ_H_
