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

// Function-hiding inner product encryption over BLS12-381.
//
//   Setup:   sample B in GL_n(Z_q), B* = det(B) * (B^-1)^T.
//   KeyGen:  sk_x = (a * det(B) * G1, a * (x * B) * G1),    a random nonzero.
//   Encrypt: ct_y = (b * G2,          b * (y * B*) * G2),   b random nonzero.
//   Decrypt: d1 = e(k1, c1), d2 = prod_i e(k2_i, c2_i) = d1^<x, y>, and the
//            bounded discrete log of d2 to base d1 recovers <x, y>.

#ifndef FHIPE_FHIPE_H_
#define FHIPE_FHIPE_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "fhipe/dlog.h"
#include "fhipe/matrix.h"
#include "fhipe/multipairing.h"
#include "fhipe/pairing.h"
#include "fhipe/rng.h"

namespace fhipe {

enum class CurveId : uint8_t { kBls12_381 = 0x01 };

struct PublicParams {
  CurveId curve = CurveId::kBls12_381;
  uint32_t n = 1;
  uint64_t s = 1;          // |S|, the decryptable range bound
  bool is_signed = false;  // decrypt over [-(s-1), s-1] instead of [0, s)

  DlogParams dlog_params() const { return DlogParams::Create(s, is_signed); }

  // Throws InvalidArgumentError when n == 0, s == 0 or the table for s would
  // exceed kMaxTableAlpha.
  void Validate() const;

  bool operator==(const PublicParams&) const = default;
};

// Throws InvalidArgumentError unless n * bound_x * bound_y < s, i.e. every
// inner product of vectors within the bounds is decryptable.
void CheckElementBounds(const PublicParams& pp, uint64_t bound_x,
                        uint64_t bound_y);

struct MasterSecretKey {
  PublicParams pp;
  DualMatrixPair dual;
  G1Point g1;
  G2Point g2;
};

struct FunctionKey {
  G1Point k1;
  std::vector<G1Point> k2;
};

struct Ciphertext {
  G2Point c1;
  std::vector<G2Point> c2;
};

// Cleartext vector together with its declared per-element magnitude bound.
struct PlainVector {
  std::vector<int64_t> values;
  uint64_t bound = 0;
  bool is_signed = false;

  // Throws InvalidArgumentError on a value outside the bound (or a negative
  // value in an unsigned vector).
  void Validate() const;
};

struct SetupResult {
  PublicParams pp;
  MasterSecretKey msk;
};

SetupResult Setup(uint32_t n, uint64_t s, bool is_signed, RandomSource& rng);

// Builds the master secret key around an existing B (used when loading keys
// and by fixtures). Throws SingularMatrixError for a singular B.
MasterSecretKey MasterSecretKeyFromMatrix(const PublicParams& pp,
                                          const MatrixZq& b);

FunctionKey KeyGen(const MasterSecretKey& msk, const PlainVector& x,
                   RandomSource& rng);

// Performs exactly n + 1 scalar multiplications in G2.
Ciphertext Encrypt(const MasterSecretKey& msk, const PlainVector& y,
                   RandomSource& rng);

// v >= 0 maps to v, v < 0 maps to q + v. Throws InvalidArgumentError when v
// is the most negative int64 (its magnitude has no positive counterpart).
ZqScalar EncodeSigned(int64_t v);

// Maps a shifted exponent from the signed search, z' in [0, 2s - 2], back to
// z' - (s - 1).
int64_t DecodeSigned(uint64_t shifted, uint64_t s);

// Maps a Z_q image back to a signed integer: values above (q-1)/2 become
// z - q. Throws InvalidArgumentError when the result does not fit in int64.
int64_t DecodeSigned(const ZqScalar& z);

struct DecryptionElements {
  GtElement d1;
  GtElement d2;
  // Pairs that entered the multi-pairing; pairs with an identity point are
  // skipped since they contribute a factor of 1.
  size_t active_pairs = 0;
};

DecryptionElements ComputeDecryptionElements(
    const FunctionKey& sk, const Ciphertext& ct,
    MultiPairingStrategy strategy = MultiPairingStrategy::kSharedMlFe);

struct DecryptOptions {
  MultiPairingStrategy strategy = MultiPairingStrategy::kSharedMlFe;
  // Reused when it was built for this decryption's d1 with the right size;
  // otherwise a fresh table is built.
  const DlogTable* table = nullptr;
  // Non-constant-time sorted lookup, for benchmarking.
  bool fast_lookup = false;
};

// <x, y> or nullopt when it falls outside the bound. Dimension mismatches
// throw InvalidArgumentError.
std::optional<int64_t> Decrypt(const PublicParams& pp, const FunctionKey& sk,
                               const Ciphertext& ct,
                               const DecryptOptions& options = {});

// Runs the bounded discrete log on already-computed decryption elements.
std::optional<int64_t> SolveInnerProduct(const PublicParams& pp,
                                         const DecryptionElements& elements,
                                         const DecryptOptions& options = {});

}  // namespace fhipe

#endif  // FHIPE_FHIPE_H_
