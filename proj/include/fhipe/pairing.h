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

// Narrow adapter over the blst BLS12-381 implementation. Everything the
// scheme needs from the curve goes through this header, so a different
// pairing library can be dropped in behind it.

#ifndef FHIPE_PAIRING_H_
#define FHIPE_PAIRING_H_

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "blst.h"
#include "fhipe/zq.h"

namespace fhipe {

inline constexpr size_t kG1CompressedBytes = 48;
inline constexpr size_t kG1UncompressedBytes = 96;
inline constexpr size_t kG2CompressedBytes = 96;
inline constexpr size_t kG2UncompressedBytes = 192;
// Twelve canonical big-endian F_p coefficients.
inline constexpr size_t kGtBytes = 576;

// Point of the order-q subgroup G1 of E(F_p), kept in affine form. The
// default-constructed point is the identity.
class G1Point {
 public:
  G1Point();
  explicit G1Point(const blst_p1_affine& p) : p_(p) {}
  explicit G1Point(const blst_p1& p);

  bool IsIdentity() const;
  bool operator==(const G1Point& o) const;

  const blst_p1_affine& affine() const { return p_; }
  blst_p1 projective() const;

 private:
  blst_p1_affine p_;
};

// Point of G2 on the sextic twist E'(F_p^2), affine form.
class G2Point {
 public:
  G2Point();
  explicit G2Point(const blst_p2_affine& p) : p_(p) {}
  explicit G2Point(const blst_p2& p);

  bool IsIdentity() const;
  bool operator==(const G2Point& o) const;

  const blst_p2_affine& affine() const { return p_; }
  blst_p2 projective() const;

 private:
  blst_p2_affine p_;
};

// Element of the order-q subgroup GT of F_p^12^*.
class GtElement {
 public:
  // The identity element 1.
  GtElement();
  explicit GtElement(const blst_fp12& f) : f_(f) {}

  bool IsIdentity() const;
  bool operator==(const GtElement& o) const;

  const blst_fp12& fp12() const { return f_; }

 private:
  blst_fp12 f_;
};

// Unreduced F_p^12 value produced by the Miller loop.
class MillerAccumulator {
 public:
  MillerAccumulator();
  explicit MillerAccumulator(const blst_fp12& f) : f_(f) {}

  const blst_fp12& fp12() const { return f_; }

 private:
  blst_fp12 f_;
};

struct PairingInput {
  G1Point p;
  G2Point q;
};

G1Point G1Generator();
G2Point G2Generator();

G1Point AddG1(const G1Point& a, const G1Point& b);
G2Point AddG2(const G2Point& a, const G2Point& b);
G2Point DoubleG2(const G2Point& a);

// Constant-time in the scalar. G1 uses the GLV endomorphism and G2 the
// 4-dimensional GLS decomposition (both inside blst).
G1Point ScalarMulG1(const ZqScalar& a, const G1Point& p);
G2Point ScalarMulG2(const ZqScalar& a, const G2Point& p);

// Textbook fixed 4-bit-window double-and-add in G2 over the backend's point
// addition and doubling. Benchmark baseline only.
G2Point NaiveWindowedMulG2(const ZqScalar& a, const G2Point& p);

// Merged Miller loop over all pairs. Throws InvalidArgumentError on an empty
// list or an identity point in any pair.
MillerAccumulator MillerLoop(std::span<const PairingInput> pairs);

MillerAccumulator MulAccumulators(const MillerAccumulator& a,
                                  const MillerAccumulator& b);

GtElement FinalExponentiation(const MillerAccumulator& acc);

// e(p, q) as Miller loop followed by final exponentiation.
GtElement Pairing(const G1Point& p, const G2Point& q);

GtElement GtMul(const GtElement& a, const GtElement& b);
// Granger-Scott squaring; only valid for elements of the cyclotomic subgroup.
GtElement GtCyclotomicSquare(const GtElement& a);
// Conjugation, which inverts elements of the cyclotomic subgroup.
GtElement GtInverse(const GtElement& a);
// Fixed-length square-and-multiply over all 255 bits of e.
GtElement GtExp(const GtElement& a, const ZqScalar& e);

bool GtInGroup(const GtElement& a);

std::vector<uint8_t> SerializePoint(const G1Point& p, bool compressed);
std::vector<uint8_t> SerializePoint(const G2Point& p, bool compressed);

// Standard ZCash-style BLS12-381 encodings with the compression, infinity
// and sign flags in the top three bits of the first byte. Each failure mode
// raises PointDecodeError with a distinct reason.
G1Point DeserializeG1(std::span<const uint8_t> bytes, bool compressed);
G2Point DeserializeG2(std::span<const uint8_t> bytes, bool compressed);

std::array<uint8_t, kGtBytes> SerializeGt(const GtElement& a);
// Rejects non-canonical coefficients and elements outside GT.
GtElement DeserializeGt(std::span<const uint8_t> bytes);

// Per-thread operation tallies. Counting is active only while an
// OpCountScope is alive on the calling thread; scopes nest, and every live
// scope on the thread sees every counted operation.
struct OpCounts {
  uint64_t g1_scalar_muls = 0;
  uint64_t g2_scalar_muls = 0;
  uint64_t pairings = 0;
  uint64_t miller_loops = 0;
  uint64_t miller_loop_pairs = 0;
  uint64_t final_exponentiations = 0;
  uint64_t multi_pairings = 0;
  uint64_t multi_pairing_pairs = 0;
  uint64_t gt_muls = 0;
  uint64_t gt_cyclotomic_squares = 0;
};

namespace internal {
// Applies `field` increments to every live scope on this thread.
void CountOp(uint64_t OpCounts::*field, uint64_t amount = 1);

// DeserializeGt without the subgroup check, for callers that establish
// membership some cheaper way.
GtElement DeserializeGtCanonical(std::span<const uint8_t> bytes);
}  // namespace internal

class OpCountScope {
 public:
  OpCountScope();
  ~OpCountScope();
  OpCountScope(const OpCountScope&) = delete;
  OpCountScope& operator=(const OpCountScope&) = delete;

  const OpCounts& counts() const { return counts_; }

 private:
  friend void internal::CountOp(uint64_t OpCounts::*, uint64_t);

  OpCounts counts_;
  OpCountScope* parent_;
};

}  // namespace fhipe

#endif  // FHIPE_PAIRING_H_
