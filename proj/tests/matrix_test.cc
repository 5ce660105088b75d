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

#include "fhipe/matrix.h"

#include <gtest/gtest.h>

#include "fhipe/errors.h"
#include "oracle.h"

namespace fhipe {
namespace {

MatrixZq Small(size_t n, std::vector<int64_t> v) {
  std::vector<ZqScalar> e;
  for (int64_t x : v) e.push_back(ZqScalar::FromInt64(x));
  return MatrixZq(n, std::move(e));
}

TEST(MatrixTest, ProductMatchesSchoolbookOracle) {
  SeededRandom rng(1);
  for (size_t n : {1, 2, 5, 9}) {
    const MatrixZq a = SampleInvertibleMatrix(n, rng);
    const MatrixZq b = SampleInvertibleMatrix(n, rng);
    EXPECT_EQ(oracle::ToBig(a * b),
              oracle::Multiply(oracle::ToBig(a), oracle::ToBig(b)));
  }
}

TEST(MatrixTest, DeterminantMatchesLaplaceOracle) {
  SeededRandom rng(2);
  for (size_t n = 1; n <= 6; ++n) {
    const MatrixZq m = SampleInvertibleMatrix(n, rng);
    EXPECT_EQ(oracle::ToBig(ComputeDetAndInverse(m).det),
              oracle::LaplaceDet(oracle::ToBig(m)))
        << "n=" << n;
  }
}

TEST(MatrixTest, RowSwapNegatesDeterminant) {
  // [[0,1],[1,0]] needs a pivot swap; det = -1.
  const auto r = ComputeDetAndInverse(Small(2, {0, 1, 1, 0}));
  EXPECT_EQ(r.det, ZqScalar::FromInt64(-1));
  EXPECT_EQ(ComputeDetAndInverse(Small(2, {2, 1, 1, 1})).det,
            ZqScalar::FromInt64(1));
}

TEST(MatrixTest, InverseTimesMatrixIsIdentity) {
  SeededRandom rng(3);
  const MatrixZq m = SampleInvertibleMatrix(7, rng);
  EXPECT_EQ(m * ComputeDetAndInverse(m).inverse, MatrixZq::Identity(7));
}

TEST(MatrixTest, SingularMatrixIsRejected) {
  EXPECT_THROW(ComputeDetAndInverse(Small(2, {1, 2, 2, 4})),
               SingularMatrixError);
  EXPECT_THROW(ComputeDetAndInverse(MatrixZq(3)), SingularMatrixError);
  EXPECT_THROW(DualOf(Small(2, {1, 2, 2, 4})), SingularMatrixError);
}

TEST(MatrixTest, DualIdentityAgainstOracle) {
  SeededRandom rng(4);
  for (size_t n = 1; n <= 16; ++n) {
    const DualMatrixPair d = DualOf(SampleInvertibleMatrix(n, rng));
    EXPECT_TRUE(d.SatisfiesDualIdentity());
    const auto prod = oracle::Multiply(oracle::ToBig(d.b),
                                       oracle::Transpose(oracle::ToBig(d.b_star)));
    const auto det = oracle::ToBig(d.det_b);
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = 0; j < n; ++j) {
        EXPECT_EQ(prod[i][j], i == j ? det : 0);
      }
    }
  }
}

TEST(MatrixTest, RowVectorTimesMatrix) {
  const MatrixZq m = Small(2, {1, 2, 3, 4});
  const std::vector<ZqScalar> x = {ZqScalar::FromInt64(5),
                                   ZqScalar::FromInt64(-1)};
  const auto y = RowVectorTimesMatrix(x, m);
  EXPECT_EQ(y[0], ZqScalar::FromInt64(2));   // 5*1 - 3
  EXPECT_EQ(y[1], ZqScalar::FromInt64(6));   // 5*2 - 4
  EXPECT_THROW(RowVectorTimesMatrix(std::span(x).first(1), m),
               InvalidArgumentError);
}

TEST(MatrixTest, CsvRoundTripAndErrors) {
  SeededRandom rng(5);
  const MatrixZq m = SampleInvertibleMatrix(4, rng);
  EXPECT_EQ(MatrixFromCsv(MatrixToCsv(m)), m);
  EXPECT_THROW(MatrixFromCsv("1,2\n3\n"), FormatError);
  EXPECT_THROW(MatrixFromCsv("1,x\n3,4\n"), FormatError);
  EXPECT_THROW(MatrixFromCsv(""), FormatError);
}

TEST(MatrixTest, ZeroDimensionRejected) {
  EXPECT_THROW(MatrixZq(0), InvalidArgumentError);
}

}  // namespace
}  // namespace fhipe
