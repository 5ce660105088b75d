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

#include "fhipe/fhipe.h"

#include <gtest/gtest.h>

#include <limits>

#include "fhipe/errors.h"
#include "oracle.h"

namespace fhipe {
namespace {

PlainVector Vec(std::vector<int64_t> v, uint64_t bound = 1000,
                bool is_signed = true) {
  return {std::move(v), bound, is_signed};
}

TEST(FhipeTest, FixtureInnerProduct) {
  SeededRandom rng(31);
  const auto setup = fhipe::Setup(3, 4096, false, rng);
  const auto key = KeyGen(setup.msk, Vec({1, 2, 3}), rng);
  const auto ct = Encrypt(setup.msk, Vec({4, 5, 6}), rng);
  EXPECT_EQ(Decrypt(setup.pp, key, ct), 32);
}

TEST(FhipeTest, RandomTrialsMatchIntegerOracle) {
  SeededRandom rng(32);
  std::mt19937_64 gen(32);
  for (uint32_t n = 1; n <= 8; ++n) {
    const auto setup = fhipe::Setup(n, 4096, false, rng);
    for (int t = 0; t < 4; ++t) {
      const auto x = oracle::RandomVector(gen, n, 0, 15);
      const auto y = oracle::RandomVector(gen, n, 0, 15);
      const auto z = Decrypt(setup.pp, KeyGen(setup.msk, Vec(x, 15), rng),
                             Encrypt(setup.msk, Vec(y, 15), rng));
      ASSERT_TRUE(z.has_value());
      EXPECT_EQ(oracle::BigInt(*z), oracle::InnerProduct(x, y));
    }
  }
}

TEST(FhipeTest, SignedExamples) {
  SeededRandom rng(33);
  const auto setup = fhipe::Setup(2, 64, true, rng);
  const auto ct = Encrypt(setup.msk, Vec({1, 1}), rng);
  EXPECT_EQ(Decrypt(setup.pp, KeyGen(setup.msk, Vec({1, -1}), rng), ct), 0);
  EXPECT_EQ(Decrypt(setup.pp, KeyGen(setup.msk, Vec({1, -2}), rng), ct), -1);
  EXPECT_EQ(Decrypt(setup.pp, KeyGen(setup.msk, Vec({-40, -23}), rng), ct),
            -63);
  EXPECT_EQ(Decrypt(setup.pp, KeyGen(setup.msk, Vec({-40, -24}), rng), ct),
            std::nullopt);
}

TEST(FhipeTest, OutOfRangeIsBottom) {
  SeededRandom rng(34);
  const auto setup = fhipe::Setup(1, 100, false, rng);
  const auto key = KeyGen(setup.msk, Vec({10}), rng);
  EXPECT_EQ(Decrypt(setup.pp, key, Encrypt(setup.msk, Vec({9}), rng)), 90);
  EXPECT_EQ(Decrypt(setup.pp, key, Encrypt(setup.msk, Vec({10}), rng)),
            std::nullopt);
  // A negative inner product under unsigned parameters is out of range.
  EXPECT_EQ(Decrypt(setup.pp, key, Encrypt(setup.msk, Vec({-1}), rng)),
            std::nullopt);
}

TEST(FhipeTest, ZeroVectorsShortCircuit) {
  SeededRandom rng(35);
  const auto setup = fhipe::Setup(4, 4096, false, rng);
  const auto zero_key = KeyGen(setup.msk, Vec({0, 0, 0, 0}), rng);
  const auto ct = Encrypt(setup.msk, Vec({3, 1, 4, 1}), rng);
  const auto elements = ComputeDecryptionElements(zero_key, ct);
  EXPECT_EQ(elements.active_pairs, 0u);
  EXPECT_TRUE(elements.d2.IsIdentity());
  EXPECT_EQ(Decrypt(setup.pp, zero_key, ct), 0);

  // x = e_1 maps to a row of B, so no coordinate is trivially zero; the
  // sparse case still decrypts exactly.
  const auto key = KeyGen(setup.msk, Vec({1, 0, 0, 0}), rng);
  EXPECT_EQ(Decrypt(setup.pp, key, ct), 3);
}

TEST(FhipeTest, EncryptUsesNPlusOneG2Muls) {
  SeededRandom rng(36);
  for (uint32_t n : {1u, 10u}) {
    const auto setup = fhipe::Setup(n, 4096, false, rng);
    OpCountScope scope;
    Encrypt(setup.msk, Vec(std::vector<int64_t>(n, 1)), rng);
    EXPECT_EQ(scope.counts().g2_scalar_muls, n + 1);
    EXPECT_EQ(scope.counts().g1_scalar_muls, 0u);
  }
}

TEST(FhipeTest, KeysAndCiphertextsAreRandomized) {
  SeededRandom rng(37);
  const auto setup = fhipe::Setup(2, 4096, false, rng);
  const auto k1 = KeyGen(setup.msk, Vec({1, 2}), rng);
  const auto k2 = KeyGen(setup.msk, Vec({1, 2}), rng);
  EXPECT_FALSE(k1.k1 == k2.k1);
  const auto c1 = Encrypt(setup.msk, Vec({1, 2}), rng);
  const auto c2 = Encrypt(setup.msk, Vec({1, 2}), rng);
  EXPECT_FALSE(c1.c1 == c2.c1);
}

TEST(FhipeTest, TableReuseAndStrategies) {
  SeededRandom rng(38);
  const auto setup = fhipe::Setup(3, 4096, false, rng);
  const auto key = KeyGen(setup.msk, Vec({7, 8, 9}), rng);
  const auto ct = Encrypt(setup.msk, Vec({1, 2, 3}), rng);
  const auto elements = ComputeDecryptionElements(key, ct);
  const auto table = DlogTable::BuildPowerTree(elements.d1, 64);
  for (auto s : {MultiPairingStrategy::kNaiveProduct,
                 MultiPairingStrategy::kSharedFe,
                 MultiPairingStrategy::kSharedMlFe}) {
    DecryptOptions opts;
    opts.strategy = s;
    opts.table = &table;
    EXPECT_EQ(Decrypt(setup.pp, key, ct, opts), 50);
  }
  // A table for another base is ignored rather than misused.
  const auto other =
      DlogTable::BuildPowerTree(GtMul(elements.d1, elements.d1), 64);
  DecryptOptions opts;
  opts.table = &other;
  opts.fast_lookup = true;
  EXPECT_EQ(Decrypt(setup.pp, key, ct, opts), 50);
}

TEST(FhipeTest, ContractErrors) {
  SeededRandom rng(39);
  const auto setup = fhipe::Setup(3, 4096, false, rng);
  EXPECT_THROW(KeyGen(setup.msk, Vec({1, 2}), rng), InvalidArgumentError);
  EXPECT_THROW(Encrypt(setup.msk, Vec({1, 2, 2000}), rng),
               InvalidArgumentError);
  EXPECT_THROW(Encrypt(setup.msk, Vec({1, -2, 3}, 10, false), rng),
               InvalidArgumentError);
  const auto key = KeyGen(setup.msk, Vec({1, 2, 3}), rng);
  const auto other = fhipe::Setup(2, 4096, false, rng);
  const auto ct2 = Encrypt(other.msk, Vec({1, 2}), rng);
  EXPECT_THROW(Decrypt(setup.pp, key, ct2), InvalidArgumentError);
  EXPECT_THROW(fhipe::Setup(0, 4096, false, rng), InvalidArgumentError);
  EXPECT_THROW(fhipe::Setup(2, 0, false, rng), InvalidArgumentError);
}

TEST(FhipeTest, ElementBoundCheck) {
  PublicParams pp;
  pp.n = 8;
  pp.s = 4096;
  EXPECT_NO_THROW(CheckElementBounds(pp, 15, 15));   // 1800 < 4096
  EXPECT_THROW(CheckElementBounds(pp, 23, 23), InvalidArgumentError);
  EXPECT_THROW(CheckElementBounds(pp, ~uint64_t{0}, ~uint64_t{0}),
               InvalidArgumentError);
}

TEST(FhipeTest, SignedCodec) {
  EXPECT_EQ(oracle::ToBig(EncodeSigned(-70)), oracle::Q() - 70);
  EXPECT_THROW(EncodeSigned(std::numeric_limits<int64_t>::min()),
               InvalidArgumentError);
  EXPECT_EQ(DecodeSigned(0, 64), -63);
  EXPECT_EQ(DecodeSigned(126, 64), 63);
  EXPECT_THROW(DecodeSigned(127, 64), InvalidArgumentError);
  EXPECT_EQ(DecodeSigned(EncodeSigned(-5)), -5);
  EXPECT_EQ(DecodeSigned(EncodeSigned(5)), 5);
}

TEST(FhipeTest, MatrixFixtureKeysAreDeterministic) {
  PublicParams pp;
  pp.n = 2;
  pp.s = 100;
  const MatrixZq b(2, {ZqScalar::FromInt64(2), ZqScalar::FromInt64(1),
                       ZqScalar::FromInt64(1), ZqScalar::FromInt64(1)});
  const auto msk = MasterSecretKeyFromMatrix(pp, b);
  EXPECT_EQ(msk.dual.det_b, ZqScalar::One());
  EXPECT_TRUE(msk.dual.SatisfiesDualIdentity());
  SeededRandom r1(1), r2(1);
  const auto c1 = Encrypt(msk, Vec({3, 4}), r1);
  const auto c2 = Encrypt(msk, Vec({3, 4}), r2);
  EXPECT_EQ(c1.c1, c2.c1);
  const MatrixZq singular(2, {ZqScalar::One(), ZqScalar::One(),
                              ZqScalar::One(), ZqScalar::One()});
  EXPECT_THROW(MasterSecretKeyFromMatrix(pp, singular), SingularMatrixError);
}

}  // namespace
}  // namespace fhipe
