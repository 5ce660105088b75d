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

#include "fhipe/pairing.h"

#include <gtest/gtest.h>

#include "fhipe/errors.h"
#include "fhipe/rng.h"
#include "oracle.h"

namespace fhipe {
namespace {

// Plain square-and-multiply with generic Fp12 squaring, independent of the
// library's cyclotomic ladder.
GtElement PowOracle(const GtElement& base, oracle::BigInt e) {
  blst_fp12 acc = *blst_fp12_one();
  blst_fp12 b = base.fp12();
  while (e > 0) {
    if ((e & 1) != 0) blst_fp12_mul(&acc, &acc, &b);
    blst_fp12_sqr(&b, &b);
    e >>= 1;
  }
  return GtElement(acc);
}

TEST(PairingTest, Bilinearity) {
  SeededRandom rng(11);
  const G1Point p = G1Generator();
  const G2Point q = G2Generator();
  const GtElement e = Pairing(p, q);
  for (int i = 0; i < 10; ++i) {
    const ZqScalar a = RandomNonzeroScalar(rng), b = RandomNonzeroScalar(rng);
    const GtElement lhs = Pairing(ScalarMulG1(a, p), ScalarMulG2(b, q));
    EXPECT_EQ(lhs, PowOracle(e, oracle::Mod(oracle::ToBig(a) *
                                            oracle::ToBig(b))));
    EXPECT_EQ(lhs, GtExp(e, a * b));
  }
}

TEST(PairingTest, NonDegenerateAndOrderQ) {
  const GtElement e = Pairing(G1Generator(), G2Generator());
  EXPECT_FALSE(e.IsIdentity());
  EXPECT_TRUE(GtInGroup(e));
  EXPECT_TRUE(PowOracle(e, oracle::Q()).IsIdentity());
}

TEST(PairingTest, GtExpMatchesOracle) {
  SeededRandom rng(12);
  const GtElement e = Pairing(G1Generator(), G2Generator());
  for (int i = 0; i < 5; ++i) {
    const ZqScalar k = RandomScalar(rng);
    EXPECT_EQ(GtExp(e, k), PowOracle(e, oracle::ToBig(k)));
  }
  EXPECT_TRUE(GtExp(e, ZqScalar::Zero()).IsIdentity());
  EXPECT_EQ(GtExp(e, ZqScalar::One()), e);
  EXPECT_EQ(GtMul(GtExp(e, ZqScalar::FromUint64(7)),
                  GtInverse(GtExp(e, ZqScalar::FromUint64(7)))),
            GtElement());
  EXPECT_EQ(GtCyclotomicSquare(e), GtMul(e, e));
}

TEST(PairingTest, ScalarMulMatchesRepeatedAddition) {
  G1Point acc1;
  G2Point acc2;
  for (uint64_t k = 1; k <= 20; ++k) {
    acc1 = AddG1(acc1, G1Generator());
    acc2 = AddG2(acc2, G2Generator());
    EXPECT_EQ(ScalarMulG1(ZqScalar::FromUint64(k), G1Generator()), acc1);
    EXPECT_EQ(ScalarMulG2(ZqScalar::FromUint64(k), G2Generator()), acc2);
  }
  EXPECT_EQ(DoubleG2(G2Generator()),
            ScalarMulG2(ZqScalar::FromUint64(2), G2Generator()));
  EXPECT_TRUE(ScalarMulG2(ZqScalar::Zero(), G2Generator()).IsIdentity());
}

TEST(PairingTest, WindowedBaselineAgreesWithFastPath) {
  SeededRandom rng(13);
  const G2Point q = ScalarMulG2(RandomNonzeroScalar(rng), G2Generator());
  for (int i = 0; i < 10; ++i) {
    const ZqScalar k = RandomScalar(rng);
    EXPECT_EQ(NaiveWindowedMulG2(k, q), ScalarMulG2(k, q));
  }
  EXPECT_TRUE(NaiveWindowedMulG2(ZqScalar::Zero(), q).IsIdentity());
  EXPECT_EQ(NaiveWindowedMulG2(ZqScalar::FromInt64(-1), q),
            ScalarMulG2(ZqScalar::FromInt64(-1), q));
}

TEST(PairingTest, PointSerializationRoundTrip) {
  SeededRandom rng(14);
  const G1Point p = ScalarMulG1(RandomNonzeroScalar(rng), G1Generator());
  const G2Point q = ScalarMulG2(RandomNonzeroScalar(rng), G2Generator());
  for (bool compressed : {false, true}) {
    const auto bp = SerializePoint(p, compressed);
    const auto bq = SerializePoint(q, compressed);
    EXPECT_EQ(bp.size(), compressed ? 48u : 96u);
    EXPECT_EQ(bq.size(), compressed ? 96u : 192u);
    EXPECT_EQ(DeserializeG1(bp, compressed), p);
    EXPECT_EQ(DeserializeG2(bq, compressed), q);
    EXPECT_TRUE(DeserializeG1(SerializePoint(G1Point(), compressed),
                              compressed).IsIdentity());
  }
}

PointDecodeError::Reason DecodeG1Reason(std::span<const uint8_t> b,
                                        bool compressed) {
  try {
    DeserializeG1(b, compressed);
  } catch (const PointDecodeError& e) {
    return e.reason();
  }
  ADD_FAILURE() << "decode unexpectedly succeeded";
  return PointDecodeError::Reason::kBadEncoding;
}

TEST(PairingTest, PointDecodeErrors) {
  auto bytes = SerializePoint(G1Generator(), false);
  EXPECT_EQ(DecodeG1Reason(std::span(bytes).first(95), false),
            PointDecodeError::Reason::kBadLength);
  // Compressed flag on an uncompressed encoding.
  auto flagged = bytes;
  flagged[0] |= 0x80;
  EXPECT_EQ(DecodeG1Reason(flagged, false),
            PointDecodeError::Reason::kBadEncoding);
  // Perturbing y moves the point off the curve.
  auto off_curve = bytes;
  off_curve[95] ^= 0x01;
  EXPECT_EQ(DecodeG1Reason(off_curve, false),
            PointDecodeError::Reason::kNotOnCurve);
}

TEST(PairingTest, G1PointOutsideSubgroupIsRejected) {
  // Search x = 0, 1, 2, ... for a curve point y^2 = x^3 + 4; the cofactor is
  // large, so such a point is almost never in the order-q subgroup.
  for (uint64_t x = 0; x < 64; ++x) {
    blst_fp fx, rhs, y;
    const uint64_t limbs[6] = {x, 0, 0, 0, 0, 0};
    blst_fp_from_uint64(&fx, limbs);
    blst_fp_sqr(&rhs, &fx);
    blst_fp_mul(&rhs, &rhs, &fx);
    blst_fp four;
    const uint64_t four_limbs[6] = {4, 0, 0, 0, 0, 0};
    blst_fp_from_uint64(&four, four_limbs);
    blst_fp_add(&rhs, &rhs, &four);
    if (!blst_fp_sqrt(&y, &rhs)) continue;
    blst_p1_affine p{fx, y};
    ASSERT_TRUE(blst_p1_affine_on_curve(&p));
    if (blst_p1_affine_in_g1(&p)) continue;
    std::vector<uint8_t> bytes(96);
    blst_p1_affine_serialize(bytes.data(), &p);
    EXPECT_EQ(DecodeG1Reason(bytes, false),
              PointDecodeError::Reason::kNotInSubgroup);
    return;
  }
  FAIL() << "no off-subgroup point found";
}

TEST(PairingTest, GtSerializationRoundTripAndChecks) {
  const GtElement e = Pairing(G1Generator(), G2Generator());
  const auto bytes = SerializeGt(e);
  EXPECT_EQ(DeserializeGt(bytes), e);
  EXPECT_THROW(DeserializeGt(std::span(bytes).first(575)), PointDecodeError);
  // A non-canonical coordinate (all 0xff) is rejected.
  auto bad = bytes;
  std::fill(bad.begin(), bad.begin() + 48, 0xff);
  EXPECT_THROW(DeserializeGt(bad), PointDecodeError);
  // Altering a coordinate leaves the order-q subgroup.
  auto outside = bytes;
  outside[47] ^= 0x01;
  try {
    DeserializeGt(outside);
    FAIL();
  } catch (const PointDecodeError& err) {
    EXPECT_EQ(err.reason(), PointDecodeError::Reason::kNotInSubgroup);
  }
}

TEST(PairingTest, MillerLoopPreconditions) {
  EXPECT_THROW(MillerLoop({}), InvalidArgumentError);
  const PairingInput with_identity{G1Point(), G2Generator()};
  EXPECT_THROW(MillerLoop(std::span(&with_identity, 1)), InvalidArgumentError);
}

TEST(PairingTest, OpCountScopesNest) {
  OpCountScope outer;
  ScalarMulG1(ZqScalar::One(), G1Generator());
  {
    OpCountScope inner;
    Pairing(G1Generator(), G2Generator());
    EXPECT_EQ(inner.counts().pairings, 1u);
    EXPECT_EQ(inner.counts().g1_scalar_muls, 0u);
    EXPECT_EQ(inner.counts().final_exponentiations, 1u);
  }
  EXPECT_EQ(outer.counts().g1_scalar_muls, 1u);
  EXPECT_EQ(outer.counts().pairings, 1u);
  EXPECT_EQ(outer.counts().miller_loops, 1u);
}

}  // namespace
}  // namespace fhipe
