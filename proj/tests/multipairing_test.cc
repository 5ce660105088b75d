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

#include "fhipe/multipairing.h"

#include <gtest/gtest.h>

#include "fhipe/errors.h"
#include "fhipe/rng.h"

namespace fhipe {
namespace {

std::vector<PairingInput> RandomPairs(size_t n, RandomSource& rng) {
  std::vector<PairingInput> out;
  for (size_t i = 0; i < n; ++i) {
    out.push_back({ScalarMulG1(RandomNonzeroScalar(rng), G1Generator()),
                   ScalarMulG2(RandomNonzeroScalar(rng), G2Generator())});
  }
  return out;
}

// Oracle: the product of single pairings, each computed independently via
// blst's own one-shot pairing path.
GtElement ProductOfPairings(const std::vector<PairingInput>& pairs) {
  blst_fp12 acc = *blst_fp12_one();
  for (const auto& pr : pairs) {
    blst_fp12 ml, e;
    blst_miller_loop(&ml, &pr.q.affine(), &pr.p.affine());
    blst_final_exp(&e, &ml);
    blst_fp12_mul(&acc, &acc, &e);
  }
  return GtElement(acc);
}

TEST(MultiPairingTest, StrategiesAgreeWithOracle) {
  SeededRandom rng(21);
  for (size_t n = 1; n <= 16; ++n) {
    const auto pairs = RandomPairs(n, rng);
    const GtElement expected = ProductOfPairings(pairs);
    for (auto s : {MultiPairingStrategy::kNaiveProduct,
                   MultiPairingStrategy::kSharedFe,
                   MultiPairingStrategy::kSharedMlFe}) {
      EXPECT_EQ(MultiPairing(pairs, s), expected)
          << "n=" << n << " strategy=" << StrategyName(s);
    }
  }
}

TEST(MultiPairingTest, ChunkingBeyondMergeLimit) {
  SeededRandom rng(22);
  const auto pairs = RandomPairs(kMaxMergedMillerPairs + 3, rng);
  EXPECT_EQ(MultiPairing(pairs, MultiPairingStrategy::kSharedMlFe),
            ProductOfPairings(pairs));
}

TEST(MultiPairingTest, OperationCounts) {
  SeededRandom rng(23);
  const auto pairs = RandomPairs(10, rng);
  {
    OpCountScope scope;
    MultiPairing(pairs, MultiPairingStrategy::kNaiveProduct);
    EXPECT_EQ(scope.counts().pairings, 10u);
    EXPECT_EQ(scope.counts().final_exponentiations, 10u);
  }
  {
    OpCountScope scope;
    MultiPairing(pairs, MultiPairingStrategy::kSharedFe);
    EXPECT_EQ(scope.counts().miller_loops, 10u);
    EXPECT_EQ(scope.counts().final_exponentiations, 1u);
  }
  {
    OpCountScope scope;
    MultiPairing(pairs, MultiPairingStrategy::kSharedMlFe);
    EXPECT_EQ(scope.counts().miller_loops, 1u);
    EXPECT_EQ(scope.counts().miller_loop_pairs, 10u);
    EXPECT_EQ(scope.counts().final_exponentiations, 1u);
    EXPECT_EQ(scope.counts().multi_pairings, 1u);
  }
}

TEST(MultiPairingTest, EmptyInputRejected) {
  EXPECT_THROW(MultiPairing({}), InvalidArgumentError);
}

TEST(MultiPairingTest, StrategyNames) {
  for (auto s : {MultiPairingStrategy::kNaiveProduct,
                 MultiPairingStrategy::kSharedFe,
                 MultiPairingStrategy::kSharedMlFe}) {
    EXPECT_EQ(ParseStrategy(StrategyName(s)), s);
  }
  EXPECT_EQ(ParseStrategy("naive"), MultiPairingStrategy::kNaiveProduct);
  EXPECT_FALSE(ParseStrategy("bogus").has_value());
}

}  // namespace
}  // namespace fhipe
