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

#include <sstream>
#include <utility>

#include "fhipe/errors.h"

namespace fhipe {
namespace {

constexpr int kMaxSingularDraws = 16;

}  // namespace

MatrixZq::MatrixZq(size_t n) : n_(n) {
  if (n == 0) throw InvalidArgumentError("matrix dimension must be >= 1");
  entries_.resize(n * n);
}

MatrixZq::MatrixZq(size_t n, std::vector<ZqScalar> entries)
    : n_(n), entries_(std::move(entries)) {
  if (n == 0) throw InvalidArgumentError("matrix dimension must be >= 1");
  if (entries_.size() != n * n) {
    throw InvalidArgumentError("matrix needs exactly n*n entries");
  }
}

MatrixZq MatrixZq::Identity(size_t n) {
  MatrixZq m(n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = ZqScalar::One();
  return m;
}

MatrixZq MatrixZq::Transposed() const {
  MatrixZq t(n_);
  for (size_t i = 0; i < n_; ++i) {
    for (size_t j = 0; j < n_; ++j) t.at(j, i) = at(i, j);
  }
  return t;
}

MatrixZq MatrixZq::ScaledBy(const ZqScalar& k) const {
  MatrixZq out = *this;
  for (auto& e : out.entries_) e *= k;
  return out;
}

MatrixZq operator*(const MatrixZq& a, const MatrixZq& b) {
  if (a.n() != b.n()) throw InvalidArgumentError("matrix dimension mismatch");
  const size_t n = a.n();
  MatrixZq out(n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t k = 0; k < n; ++k) {
      const ZqScalar& aik = a.at(i, k);
      for (size_t j = 0; j < n; ++j) out.at(i, j) += aik * b.at(k, j);
    }
  }
  return out;
}

DetAndInverse ComputeDetAndInverse(const MatrixZq& m) {
  const size_t n = m.n();
  MatrixZq work = m;
  MatrixZq inv = MatrixZq::Identity(n);
  ZqScalar det = ZqScalar::One();

  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    while (pivot < n && work.at(pivot, col).IsZero()) ++pivot;
    if (pivot == n) throw SingularMatrixError("matrix is singular mod q");

    if (pivot != col) {
      for (size_t j = 0; j < n; ++j) {
        std::swap(work.at(pivot, j), work.at(col, j));
        std::swap(inv.at(pivot, j), inv.at(col, j));
      }
      det = -det;
    }

    const ZqScalar p = work.at(col, col);
    det *= p;
    const ZqScalar p_inv = p.Inverse();
    for (size_t j = 0; j < n; ++j) {
      work.at(col, j) *= p_inv;
      inv.at(col, j) *= p_inv;
    }

    for (size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const ZqScalar factor = work.at(r, col);
      if (factor.IsZero()) continue;
      for (size_t j = 0; j < n; ++j) {
        work.at(r, j) -= factor * work.at(col, j);
        inv.at(r, j) -= factor * inv.at(col, j);
      }
    }
  }
  return {det, std::move(inv)};
}

MatrixZq SampleInvertibleMatrix(size_t n, RandomSource& rng) {
  if (n == 0) throw InvalidArgumentError("matrix dimension must be >= 1");
  for (int attempt = 0; attempt < kMaxSingularDraws; ++attempt) {
    std::vector<ZqScalar> entries(n * n);
    for (auto& e : entries) e = RandomScalar(rng);
    MatrixZq m(n, std::move(entries));
    try {
      ComputeDetAndInverse(m);
      return m;
    } catch (const SingularMatrixError&) {
    }
  }
  throw RngFailureError("sampled 16 singular matrices in a row");
}

bool DualMatrixPair::SatisfiesDualIdentity() const {
  if (b.n() != b_star.n() || det_b.IsZero()) return false;
  return b * b_star.Transposed() == MatrixZq::Identity(b.n()).ScaledBy(det_b);
}

DualMatrixPair DualOf(const MatrixZq& b) {
  DetAndInverse di = ComputeDetAndInverse(b);
  MatrixZq b_star = di.inverse.Transposed().ScaledBy(di.det);
  return {b, std::move(b_star), di.det};
}

std::vector<ZqScalar> RowVectorTimesMatrix(std::span<const ZqScalar> x,
                                           const MatrixZq& m) {
  if (x.size() != m.n()) {
    throw InvalidArgumentError("vector length does not match matrix dimension");
  }
  const size_t n = m.n();
  std::vector<ZqScalar> out(n);
  for (size_t i = 0; i < n; ++i) {
    if (x[i].IsZero()) continue;
    for (size_t j = 0; j < n; ++j) out[j] += x[i] * m.at(i, j);
  }
  return out;
}

std::string MatrixToCsv(const MatrixZq& m) {
  std::string out;
  for (size_t i = 0; i < m.n(); ++i) {
    for (size_t j = 0; j < m.n(); ++j) {
      if (j) out.push_back(',');
      out += m.at(i, j).ToDecimal();
    }
    out.push_back('\n');
  }
  return out;
}

MatrixZq MatrixFromCsv(std::string_view csv) {
  std::vector<std::vector<ZqScalar>> rows;
  std::istringstream in{std::string(csv)};
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<ZqScalar> row;
    std::string_view rest = line;
    while (true) {
      const size_t comma = rest.find(',');
      const std::string_view cell = rest.substr(0, comma);
      auto v = ZqScalar::FromDecimal(cell);
      if (!v) {
        throw FormatError("line " + std::to_string(line_no) +
                          ": not a decimal integer below q");
      }
      row.push_back(*v);
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    rows.push_back(std::move(row));
  }
  const size_t n = rows.size();
  if (n == 0) throw FormatError("empty matrix");
  std::vector<ZqScalar> entries;
  entries.reserve(n * n);
  for (size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) {
      throw FormatError("line " + std::to_string(i + 1) + ": expected " +
                        std::to_string(n) + " entries");
    }
    entries.insert(entries.end(), rows[i].begin(), rows[i].end());
  }
  return MatrixZq(n, std::move(entries));
}

}  // namespace fhipe
