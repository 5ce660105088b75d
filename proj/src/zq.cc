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

#include "fhipe/zq.h"

#include <algorithm>
#include <cstring>
#include <limits>

#include "fhipe/errors.h"

namespace fhipe {
namespace {

using Limbs = std::array<uint64_t, 4>;

// (q - 1) / 2, little-endian limbs.
constexpr Limbs kHalfOrder = {0x7fffffff80000000ULL, 0xa9ded2017fff2dffULL,
                              0x199cec0404d0ec02ULL, 0x39f6d3a994cebea4ULL};

Limbs ToLimbs(const blst_fr& fr) {
  Limbs limbs;
  blst_uint64_from_fr(limbs.data(), &fr);
  return limbs;
}

// a > b for 256-bit little-endian limb vectors.
bool GreaterThan(const Limbs& a, const Limbs& b) {
  for (int i = 3; i >= 0; --i) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return false;
}

}  // namespace

ZqScalar::ZqScalar() { std::memset(&fr_, 0, sizeof(fr_)); }

ZqScalar ZqScalar::One() { return FromUint64(1); }

ZqScalar ZqScalar::FromUint64(uint64_t v) {
  const uint64_t limbs[4] = {v, 0, 0, 0};
  blst_fr fr;
  blst_fr_from_uint64(&fr, limbs);
  return ZqScalar(fr);
}

ZqScalar ZqScalar::FromInt64(int64_t v) {
  if (v >= 0) return FromUint64(static_cast<uint64_t>(v));
  // Negate in unsigned arithmetic so INT64_MIN is handled.
  const uint64_t magnitude = ~static_cast<uint64_t>(v) + 1;
  return -FromUint64(magnitude);
}

std::optional<ZqScalar> ZqScalar::FromLittleEndian(
    std::span<const uint8_t, kScalarBytes> bytes) {
  blst_scalar s;
  std::memcpy(s.b, bytes.data(), kScalarBytes);
  if (!blst_scalar_fr_check(&s)) {
    // blst_scalar_fr_check rejects zero as well; zero is a valid element.
    if (std::all_of(bytes.begin(), bytes.end(),
                    [](uint8_t b) { return b == 0; })) {
      return ZqScalar();
    }
    return std::nullopt;
  }
  blst_fr fr;
  blst_fr_from_scalar(&fr, &s);
  return ZqScalar(fr);
}

ZqScalar ZqScalar::FromWideLittleEndian(std::span<const uint8_t> bytes) {
  blst_scalar s;
  blst_scalar_from_le_bytes(&s, bytes.data(), bytes.size());
  blst_fr fr;
  blst_fr_from_scalar(&fr, &s);
  return ZqScalar(fr);
}

std::optional<ZqScalar> ZqScalar::FromDecimal(std::string_view text) {
  if (text.empty()) return std::nullopt;
  Limbs limbs = {0, 0, 0, 0};
  for (char c : text) {
    if (c < '0' || c > '9') return std::nullopt;
    unsigned __int128 carry = static_cast<unsigned>(c - '0');
    for (auto& limb : limbs) {
      const unsigned __int128 t =
          static_cast<unsigned __int128>(limb) * 10 + carry;
      limb = static_cast<uint64_t>(t);
      carry = t >> 64;
    }
    if (carry != 0) return std::nullopt;
  }
  std::array<uint8_t, kScalarBytes> le;
  for (size_t i = 0; i < 4; ++i) {
    for (size_t b = 0; b < 8; ++b) le[8 * i + b] = limbs[i] >> (8 * b);
  }
  return FromLittleEndian(le);
}

std::array<uint8_t, kScalarBytes> ZqScalar::ToLittleEndian() const {
  blst_scalar s;
  blst_scalar_from_fr(&s, &fr_);
  std::array<uint8_t, kScalarBytes> out;
  std::memcpy(out.data(), s.b, kScalarBytes);
  return out;
}

std::string ZqScalar::ToDecimal() const {
  Limbs limbs = ToLimbs(fr_);
  std::string digits;
  auto is_zero = [&] {
    return std::all_of(limbs.begin(), limbs.end(),
                       [](uint64_t l) { return l == 0; });
  };
  do {
    unsigned __int128 rem = 0;
    for (int i = 3; i >= 0; --i) {
      const unsigned __int128 cur = (rem << 64) | limbs[i];
      limbs[i] = static_cast<uint64_t>(cur / 10);
      rem = cur % 10;
    }
    digits.push_back(static_cast<char>('0' + static_cast<int>(rem)));
  } while (!is_zero());
  std::reverse(digits.begin(), digits.end());
  return digits;
}

bool ZqScalar::IsZero() const {
  const Limbs limbs = ToLimbs(fr_);
  return (limbs[0] | limbs[1] | limbs[2] | limbs[3]) == 0;
}

bool ZqScalar::IsNegativeImage() const {
  return GreaterThan(ToLimbs(fr_), kHalfOrder);
}

ZqScalar ZqScalar::Inverse() const {
  blst_fr out;
  blst_fr_inverse(&out, &fr_);
  return ZqScalar(out);
}

ZqScalar ZqScalar::operator+(const ZqScalar& o) const {
  blst_fr out;
  blst_fr_add(&out, &fr_, &o.fr_);
  return ZqScalar(out);
}

ZqScalar ZqScalar::operator-(const ZqScalar& o) const {
  blst_fr out;
  blst_fr_sub(&out, &fr_, &o.fr_);
  return ZqScalar(out);
}

ZqScalar ZqScalar::operator*(const ZqScalar& o) const {
  blst_fr out;
  blst_fr_mul(&out, &fr_, &o.fr_);
  return ZqScalar(out);
}

ZqScalar ZqScalar::operator-() const {
  blst_fr out;
  blst_fr_cneg(&out, &fr_, true);
  return ZqScalar(out);
}

ZqScalar& ZqScalar::operator+=(const ZqScalar& o) { return *this = *this + o; }
ZqScalar& ZqScalar::operator-=(const ZqScalar& o) { return *this = *this - o; }
ZqScalar& ZqScalar::operator*=(const ZqScalar& o) { return *this = *this * o; }

bool ZqScalar::operator==(const ZqScalar& o) const {
  return std::memcmp(&fr_, &o.fr_, sizeof(fr_)) == 0;
}

int64_t ToInt64(const ZqScalar& z) {
  constexpr uint64_t kMaxPositive = std::numeric_limits<int64_t>::max();
  if (z.IsNegativeImage()) {
    const Limbs mag = ToLimbs((-z).fr());
    if ((mag[1] | mag[2] | mag[3]) != 0 || mag[0] > kMaxPositive + 1) {
      throw InvalidArgumentError("scalar is not the image of an int64");
    }
    return static_cast<int64_t>(~mag[0] + 1);
  }
  const Limbs v = ToLimbs(z.fr());
  if ((v[1] | v[2] | v[3]) != 0 || v[0] > kMaxPositive) {
    throw InvalidArgumentError("scalar is not the image of an int64");
  }
  return static_cast<int64_t>(v[0]);
}

}  // namespace fhipe
