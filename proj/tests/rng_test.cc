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

#include <gtest/gtest.h>

#include <vector>

#include "fhipe/errors.h"

namespace fhipe {
namespace {

std::vector<uint8_t> Draw(RandomSource& rng, size_t n) {
  std::vector<uint8_t> out(n);
  rng.Fill(out);
  return out;
}

TEST(RngTest, SeededIsDeterministicAndSeedSensitive) {
  SeededRandom a(42), b(42), c(43);
  const auto xa = Draw(a, 200);
  EXPECT_EQ(xa, Draw(b, 200));
  EXPECT_NE(xa, Draw(c, 200));
}

TEST(RngTest, SeededStreamIsSplitIndependent) {
  SeededRandom a(5), b(5);
  auto whole = Draw(a, 130);
  std::vector<uint8_t> parts;
  for (size_t n : {1, 63, 2, 64}) {
    auto p = Draw(b, n);
    parts.insert(parts.end(), p.begin(), p.end());
  }
  EXPECT_EQ(whole, parts);
}

TEST(RngTest, OsRandomProducesDistinctOutput) {
  OsRandom os;
  EXPECT_NE(Draw(os, 32), Draw(os, 32));
}

class ZeroRandom final : public RandomSource {
 public:
  void Fill(std::span<uint8_t> out) override {
    std::fill(out.begin(), out.end(), 0);
  }
};

TEST(RngTest, DegenerateSourceIsRejected) {
  ZeroRandom zero;
  EXPECT_TRUE(RandomScalar(zero).IsZero());
  EXPECT_THROW(RandomNonzeroScalar(zero), RngFailureError);
}

}  // namespace
}  // namespace fhipe
