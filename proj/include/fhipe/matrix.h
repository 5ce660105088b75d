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

#ifndef FHIPE_MATRIX_H_
#define FHIPE_MATRIX_H_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fhipe/rng.h"
#include "fhipe/zq.h"

namespace fhipe {

// Dense n x n matrix over Z_q, row-major.
class MatrixZq {
 public:
  // Zero matrix. Throws InvalidArgumentError when n == 0.
  explicit MatrixZq(size_t n);

  // Takes ownership of n*n row-major entries.
  MatrixZq(size_t n, std::vector<ZqScalar> entries);

  static MatrixZq Identity(size_t n);

  size_t n() const { return n_; }

  const ZqScalar& at(size_t row, size_t col) const {
    return entries_[row * n_ + col];
  }
  ZqScalar& at(size_t row, size_t col) { return entries_[row * n_ + col]; }

  std::span<const ZqScalar> row(size_t r) const {
    return std::span<const ZqScalar>(entries_).subspan(r * n_, n_);
  }
  std::span<const ZqScalar> entries() const { return entries_; }

  MatrixZq Transposed() const;
  MatrixZq ScaledBy(const ZqScalar& k) const;

  bool operator==(const MatrixZq& o) const = default;

 private:
  size_t n_;
  std::vector<ZqScalar> entries_;
};

MatrixZq operator*(const MatrixZq& a, const MatrixZq& b);

struct DetAndInverse {
  ZqScalar det;
  MatrixZq inverse;
};

// Gauss-Jordan elimination. Throws SingularMatrixError when no nonzero pivot
// exists in some column.
DetAndInverse ComputeDetAndInverse(const MatrixZq& m);

// Uniform matrix conditioned on invertibility, by rejection sampling. Throws
// RngFailureError after 16 singular draws.
MatrixZq SampleInvertibleMatrix(size_t n, RandomSource& rng);

// (B, B*, det B) with B* = det(B) * (B^-1)^T, so that B * (B*)^T = det(B) * I.
struct DualMatrixPair {
  MatrixZq b;
  MatrixZq b_star;
  ZqScalar det_b;

  // Recomputes B * (B*)^T and compares against det(B) * I.
  bool SatisfiesDualIdentity() const;
};

DualMatrixPair DualOf(const MatrixZq& b);

// x * m for a row vector x. Throws InvalidArgumentError on length mismatch.
std::vector<ZqScalar> RowVectorTimesMatrix(std::span<const ZqScalar> x,
                                           const MatrixZq& m);

// One row per line, entries as comma-separated decimal integers.
std::string MatrixToCsv(const MatrixZq& m);
// Throws FormatError (with line number) on malformed input.
MatrixZq MatrixFromCsv(std::string_view csv);

}  // namespace fhipe

#endif  // FHIPE_MATRIX_H_
