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

#include <gtest/gtest.h>

#include "fhipe/errors.h"
#include "fhipe/rng.h"

namespace fhipe {
namespace {

GtElement Base() {
  static const GtElement base = GtExp(Pairing(G1Generator(), G2Generator()),
                                      ZqScalar::FromUint64(987654321));
  return base;
}

// Oracle powers by repeated multiplication.
std::vector<GtElement> Powers(const GtElement& g, uint64_t count) {
  std::vector<GtElement> out{GtElement()};
  for (uint64_t i = 1; i < count; ++i) out.push_back(GtMul(out.back(), g));
  return out;
}

TEST(DlogTest, CeilSqrt) {
  EXPECT_EQ(CeilSqrt(0), 0u);
  EXPECT_EQ(CeilSqrt(1), 1u);
  EXPECT_EQ(CeilSqrt(4096), 64u);
  EXPECT_EQ(CeilSqrt(4097), 65u);
  EXPECT_EQ(CeilSqrt(127), 12u);
  EXPECT_EQ(CeilSqrt((uint64_t{1} << 40) - 1), uint64_t{1} << 20);
  EXPECT_EQ(CeilSqrt(~uint64_t{0}), uint64_t{1} << 32);
}

TEST(DlogTest, ParamsAndValidation) {
  const auto p = DlogParams::Create(4096, false);
  EXPECT_EQ(p.table_alpha, 64u);
  EXPECT_EQ(p.search_size, 4096u);
  const auto sp = DlogParams::Create(64, true);
  EXPECT_EQ(sp.search_size, 127u);
  EXPECT_EQ(sp.table_alpha, 12u);
  EXPECT_THROW(DlogParams::Create(0, false), InvalidArgumentError);
  EXPECT_THROW(DlogParams::Create((kMaxTableAlpha * kMaxTableAlpha) + 1, false),
               InvalidArgumentError);
  const auto full_size = DlogParams::ForTableAlpha(16384, true);
  EXPECT_EQ(full_size.table_alpha, 16384u);
  EXPECT_THROW(DlogParams::ForTableAlpha(0, false), InvalidArgumentError);
}

TEST(DlogTest, PowerTreeEntriesMatchOracle) {
  for (uint64_t alpha : {1, 2, 3, 8, 9, 17}) {
    const auto table = DlogTable::BuildPowerTree(Base(), alpha);
    const auto oracle = Powers(Base(), alpha + 1);
    ASSERT_EQ(table.alpha(), alpha);
    for (uint64_t j = 0; j < alpha; ++j) EXPECT_EQ(table.entry(j), oracle[j]);
    EXPECT_EQ(GtMul(table.giant_step(), oracle[alpha]), GtElement());
    const auto mult = DlogTable::BuildMultiplicationOnly(Base(), alpha);
    EXPECT_EQ(mult.Serialize(), table.Serialize());
  }
}

TEST(DlogTest, PowerTreeOperationCounts) {
  struct Case {
    uint64_t alpha, muls, squarings;
  };
  for (const Case c : {Case{8, 3, 4}, Case{9, 4, 4}, Case{16384, 8191, 8192}}) {
    PowerTreeStats stats;
    OpCountScope scope;
    DlogTable::BuildPowerTree(Base(), c.alpha, &stats);
    EXPECT_EQ(stats.multiplications, c.muls) << c.alpha;
    EXPECT_EQ(stats.squarings, c.squarings) << c.alpha;
    EXPECT_EQ(scope.counts().gt_muls, c.muls) << c.alpha;
    EXPECT_EQ(scope.counts().gt_cyclotomic_squares, c.squarings) << c.alpha;
  }
  PowerTreeStats mult;
  DlogTable::BuildMultiplicationOnly(Base(), 8, &mult);
  EXPECT_EQ(mult.multiplications, 7u);
  EXPECT_EQ(mult.squarings, 0u);
}

TEST(DlogTest, UnsignedSweep) {
  const auto params = DlogParams::Create(300, false);
  const auto table = DlogTable::BuildPowerTree(Base(), params.table_alpha);
  const auto powers = Powers(Base(), 2 * 300);
  for (uint64_t z = 0; z < 600; ++z) {
    BsgsStats stats;
    const auto got = Bsgs(Base(), powers[z], params, table, &stats);
    EXPECT_EQ(stats.iterations, params.table_alpha);
    if (z < 300) {
      EXPECT_EQ(got, z);
    } else {
      EXPECT_FALSE(got.has_value()) << z;
    }
  }
}

TEST(DlogTest, SignedSweep) {
  const auto params = DlogParams::Create(64, true);
  const auto table = DlogTable::BuildPowerTree(Base(), params.table_alpha);
  for (int64_t z = -70; z <= 70; ++z) {
    const GtElement d2 = GtExp(Base(), ZqScalar::FromInt64(z));
    const auto got = BsgsSigned(Base(), d2, params, table);
    if (z >= -63 && z <= 63) {
      EXPECT_EQ(got, z);
    } else {
      EXPECT_FALSE(got.has_value()) << z;
    }
  }
}

TEST(DlogTest, ConstantIterationsAndFastLookupAgree) {
  const auto params = DlogParams::Create(4096, false);
  auto table = DlogTable::BuildPowerTree(Base(), params.table_alpha);
  auto fast = DlogTable::BuildPowerTree(Base(), params.table_alpha);
  fast.EnableFastLookup();
  ASSERT_TRUE(fast.fast_lookup_enabled());
  for (uint64_t z : {uint64_t{0}, uint64_t{1}, uint64_t{4095},
                     uint64_t{5000}}) {
    const GtElement d2 = GtExp(Base(), ZqScalar::FromUint64(z));
    BsgsStats a, b;
    const auto slow_result = Bsgs(Base(), d2, params, table, &a);
    EXPECT_EQ(slow_result, Bsgs(Base(), d2, params, fast, &b));
    EXPECT_EQ(a.iterations, 64u);
    EXPECT_EQ(b.iterations, 64u);
  }
}

TEST(DlogTest, PreconditionErrors) {
  const auto params = DlogParams::Create(100, false);
  const auto table = DlogTable::BuildPowerTree(Base(), params.table_alpha);
  EXPECT_THROW(Bsgs(GtElement(), Base(), params, table), InvalidArgumentError);
  EXPECT_THROW(Bsgs(GtMul(Base(), Base()), Base(), params, table),
               InvalidArgumentError);
  EXPECT_THROW(Bsgs(Base(), Base(), DlogParams::Create(4096, false), table),
               InvalidArgumentError);
  EXPECT_THROW(BsgsSigned(Base(), Base(), params, table), InvalidArgumentError);
  EXPECT_THROW(DlogTable::BuildPowerTree(Base(), 0), InvalidArgumentError);
}

TEST(DlogTest, SerializationRoundTripAndIntegrity) {
  const auto table = DlogTable::BuildPowerTree(Base(), 16);
  const auto bytes = table.Serialize();
  const auto back = DlogTable::Deserialize(bytes);
  EXPECT_EQ(back.Serialize(), bytes);
  EXPECT_EQ(back.base(), Base());
  EXPECT_EQ(back.giant_step(), table.giant_step());

  EXPECT_THROW(DlogTable::Deserialize(std::span(bytes).first(bytes.size() - 1)),
               FormatError);
  auto bad_magic = bytes;
  bad_magic[0] = 'X';
  EXPECT_THROW(DlogTable::Deserialize(bad_magic), FormatError);

  // Swap two entries: still canonical elements, but no longer a power chain.
  auto swapped = bytes;
  const size_t header = bytes.size() - 17 * kGtBytes;
  std::swap_ranges(swapped.begin() + header + 3 * kGtBytes,
                   swapped.begin() + header + 4 * kGtBytes,
                   swapped.begin() + header + 5 * kGtBytes);
  EXPECT_THROW(DlogTable::Deserialize(swapped), IntegrityError);
}

TEST(DlogTest, MemoryAccounting) {
  const auto table = DlogTable::BuildPowerTree(Base(), 100);
  EXPECT_GE(table.MemoryBytes(), 100 * kGtBytes);
}

}  // namespace
}  // namespace fhipe
