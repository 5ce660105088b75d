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

// Reference arithmetic for tests, written against Boost.Multiprecision so it
// shares no code with the library under test.

#ifndef FHIPE_TESTS_ORACLE_H_
#define FHIPE_TESTS_ORACLE_H_

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <random>
#include <vector>

#include "fhipe/matrix.h"
#include "fhipe/zq.h"

namespace fhipe::oracle {

using BigInt = boost::multiprecision::cpp_int;

inline const BigInt& Q() {
  static const BigInt q{std::string(kGroupOrderDecimal)};
  return q;
}

inline BigInt Mod(const BigInt& v) {
  BigInt r = v % Q();
  return r < 0 ? r + Q() : r;
}

inline BigInt ToBig(const ZqScalar& z) { return BigInt(z.ToDecimal()); }

inline ZqScalar FromBig(const BigInt& v) {
  return *ZqScalar::FromDecimal(Mod(v).str());
}

// Integer inner product, exact.
inline BigInt InnerProduct(const std::vector<int64_t>& a,
                           const std::vector<int64_t>& b) {
  BigInt sum = 0;
  for (size_t i = 0; i < a.size(); ++i) sum += BigInt(a[i]) * b[i];
  return sum;
}

using BigMatrix = std::vector<std::vector<BigInt>>;

inline BigMatrix ToBig(const MatrixZq& m) {
  BigMatrix out(m.n(), std::vector<BigInt>(m.n()));
  for (size_t i = 0; i < m.n(); ++i) {
    for (size_t j = 0; j < m.n(); ++j) out[i][j] = ToBig(m.at(i, j));
  }
  return out;
}

// Schoolbook product mod q.
inline BigMatrix Multiply(const BigMatrix& a, const BigMatrix& b) {
  const size_t n = a.size();
  BigMatrix c(n, std::vector<BigInt>(n));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      BigInt acc = 0;
      for (size_t k = 0; k < n; ++k) acc += a[i][k] * b[k][j];
      c[i][j] = Mod(acc);
    }
  }
  return c;
}

inline BigMatrix Transpose(const BigMatrix& a) {
  BigMatrix t(a.size(), std::vector<BigInt>(a.size()));
  for (size_t i = 0; i < a.size(); ++i) {
    for (size_t j = 0; j < a.size(); ++j) t[j][i] = a[i][j];
  }
  return t;
}

// Determinant by Laplace expansion along the first row; fine for n <= 7.
inline BigInt LaplaceDet(const BigMatrix& a) {
  const size_t n = a.size();
  if (n == 1) return Mod(a[0][0]);
  BigInt det = 0;
  for (size_t c = 0; c < n; ++c) {
    BigMatrix minor;
    for (size_t i = 1; i < n; ++i) {
      std::vector<BigInt> row;
      for (size_t j = 0; j < n; ++j) {
        if (j != c) row.push_back(a[i][j]);
      }
      minor.push_back(std::move(row));
    }
    const BigInt term = a[0][c] * LaplaceDet(minor);
    det += (c % 2 == 0) ? term : -term;
  }
  return Mod(det);
}

// Modular exponentiation by square-and-multiply on BigInt.
inline BigInt PowMod(BigInt base, BigInt exp, const BigInt& mod) {
  BigInt r = 1;
  base %= mod;
  while (exp > 0) {
    if ((exp & 1) != 0) r = (r * base) % mod;
    base = (base * base) % mod;
    exp >>= 1;
  }
  return r;
}

inline std::vector<int64_t> RandomVector(std::mt19937_64& gen, size_t n,
                                         int64_t lo, int64_t hi) {
  std::uniform_int_distribution<int64_t> d(lo, hi);
  std::vector<int64_t> v(n);
  for (auto& x : v) x = d(gen);
  return v;
}

}  // namespace fhipe::oracle

#endif  // FHIPE_TESTS_ORACLE_H_
