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

#include <gtest/gtest.h>

#include <boost/multiprecision/miller_rabin.hpp>
#include <limits>
#include <random>

#include "fhipe/errors.h"
#include "oracle.h"

namespace fhipe {
namespace {

using oracle::BigInt;

TEST(ZqTest, GroupOrderIsPrimeAndMatchesHex) {
  std::mt19937 gen(1);
  EXPECT_TRUE(boost::multiprecision::miller_rabin_test(oracle::Q(), 40, gen));
  EXPECT_EQ(oracle::Q(), BigInt("0x" + std::string(kGroupOrderHex)));
}

TEST(ZqTest, ArithmeticMatchesBigIntOracle) {
  std::mt19937_64 gen(2);
  for (int i = 0; i < 200; ++i) {
    std::array<uint8_t, 64> wide;
    for (auto& b : wide) b = static_cast<uint8_t>(gen());
    const ZqScalar a = ZqScalar::FromWideLittleEndian(wide);
    for (auto& b : wide) b = static_cast<uint8_t>(gen());
    const ZqScalar b = ZqScalar::FromWideLittleEndian(wide);
    const BigInt ba = oracle::ToBig(a), bb = oracle::ToBig(b);
    EXPECT_EQ(oracle::ToBig(a + b), oracle::Mod(ba + bb));
    EXPECT_EQ(oracle::ToBig(a - b), oracle::Mod(ba - bb));
    EXPECT_EQ(oracle::ToBig(a * b), oracle::Mod(ba * bb));
    EXPECT_EQ(oracle::ToBig(-a), oracle::Mod(-ba));
    if (!b.IsZero()) {
      EXPECT_EQ(oracle::ToBig(b.Inverse()),
                oracle::PowMod(bb, oracle::Q() - 2, oracle::Q()));
    }
  }
}

TEST(ZqTest, WideReductionMatchesOracle) {
  std::array<uint8_t, 64> wide;
  wide.fill(0xff);
  BigInt expected = (BigInt(1) << 512) - 1;
  EXPECT_EQ(oracle::ToBig(ZqScalar::FromWideLittleEndian(wide)),
            oracle::Mod(expected));
}

TEST(ZqTest, LittleEndianRoundTripAndCanonicalCheck) {
  const ZqScalar v = ZqScalar::FromUint64(0x0102030405060708ULL);
  const auto bytes = v.ToLittleEndian();
  EXPECT_EQ(bytes[0], 0x08);
  EXPECT_EQ(*ZqScalar::FromLittleEndian(bytes), v);

  // q itself is not canonical; q - 1 is.
  std::array<uint8_t, 32> q_bytes{};
  BigInt q = oracle::Q();
  for (auto& b : q_bytes) {
    b = static_cast<uint8_t>(q & 0xff);
    q >>= 8;
  }
  EXPECT_FALSE(ZqScalar::FromLittleEndian(q_bytes).has_value());
  q_bytes[0] -= 1;
  EXPECT_EQ(oracle::ToBig(*ZqScalar::FromLittleEndian(q_bytes)),
            oracle::Q() - 1);
  std::array<uint8_t, 32> zero{};
  EXPECT_TRUE(ZqScalar::FromLittleEndian(zero)->IsZero());
}

TEST(ZqTest, SignedEmbedding) {
  EXPECT_EQ(oracle::ToBig(ZqScalar::FromInt64(-1)), oracle::Q() - 1);
  EXPECT_EQ(oracle::ToBig(ZqScalar::FromInt64(-70)), oracle::Q() - 70);
  EXPECT_TRUE(ZqScalar::FromInt64(-1).IsNegativeImage());
  EXPECT_FALSE(ZqScalar::FromInt64(5).IsNegativeImage());
  EXPECT_FALSE(ZqScalar::Zero().IsNegativeImage());
  for (int64_t v : {int64_t{0}, int64_t{1}, int64_t{-1}, int64_t{-2048},
                    std::numeric_limits<int64_t>::max(),
                    std::numeric_limits<int64_t>::min() + 1}) {
    EXPECT_EQ(ToInt64(ZqScalar::FromInt64(v)), v);
  }
  // (q-1)/2 is the largest non-negative image; it does not fit in int64.
  const ZqScalar half = oracle::FromBig((oracle::Q() - 1) / 2);
  EXPECT_FALSE(half.IsNegativeImage());
  EXPECT_TRUE((half + ZqScalar::One()).IsNegativeImage());
  EXPECT_THROW(ToInt64(half), InvalidArgumentError);
}

TEST(ZqTest, DecimalParsing) {
  EXPECT_EQ(ZqScalar::FromDecimal("12345")->ToDecimal(), "12345");
  EXPECT_FALSE(ZqScalar::FromDecimal(kGroupOrderDecimal).has_value());
  EXPECT_FALSE(ZqScalar::FromDecimal("12a").has_value());
  EXPECT_FALSE(ZqScalar::FromDecimal("").has_value());
}

}  // namespace
}  // namespace fhipe
