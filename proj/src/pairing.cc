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

#include <cstring>
#include <string>

#include "fhipe/errors.h"

namespace fhipe {
namespace {

constexpr size_t kScalarBits = 255;
constexpr uint8_t kCompressionFlag = 0x80;

thread_local OpCountScope* g_innermost_scope = nullptr;

// Constant-time select: returns `flag ? a : b`.
blst_fp12 SelectFp12(bool flag, const blst_fp12& a, const blst_fp12& b) {
  const uint8_t mask = static_cast<uint8_t>(0) - static_cast<uint8_t>(flag);
  blst_fp12 out;
  auto* o = reinterpret_cast<uint8_t*>(&out);
  const auto* pa = reinterpret_cast<const uint8_t*>(&a);
  const auto* pb = reinterpret_cast<const uint8_t*>(&b);
  for (size_t i = 0; i < sizeof(blst_fp12); ++i) {
    o[i] = static_cast<uint8_t>((pa[i] & mask) | (pb[i] & ~mask));
  }
  return out;
}

PointDecodeError::Reason ReasonFor(BLST_ERROR err) {
  switch (err) {
    case BLST_POINT_NOT_ON_CURVE:
      return PointDecodeError::Reason::kNotOnCurve;
    case BLST_POINT_NOT_IN_GROUP:
      return PointDecodeError::Reason::kNotInSubgroup;
    default:
      return PointDecodeError::Reason::kBadEncoding;
  }
}

const char* DescribeReason(PointDecodeError::Reason reason) {
  switch (reason) {
    case PointDecodeError::Reason::kBadLength:
      return "malformed length";
    case PointDecodeError::Reason::kBadEncoding:
      return "bad encoding";
    case PointDecodeError::Reason::kNotOnCurve:
      return "point not on curve";
    case PointDecodeError::Reason::kNotInSubgroup:
      return "point not in the order-q subgroup";
  }
  return "unknown";
}

[[noreturn]] void ThrowDecode(PointDecodeError::Reason reason,
                              const char* group) {
  throw PointDecodeError(reason,
                         std::string(group) + ": " + DescribeReason(reason));
}

void CheckLengthAndFlag(std::span<const uint8_t> bytes, size_t expected,
                        bool compressed, const char* group) {
  if (bytes.size() != expected) {
    ThrowDecode(PointDecodeError::Reason::kBadLength, group);
  }
  const bool flagged = (bytes[0] & kCompressionFlag) != 0;
  if (flagged != compressed) {
    ThrowDecode(PointDecodeError::Reason::kBadEncoding, group);
  }
}

}  // namespace

namespace internal {

void CountOp(uint64_t OpCounts::*field, uint64_t amount) {
  for (OpCountScope* s = g_innermost_scope; s != nullptr; s = s->parent_) {
    s->counts_.*field += amount;
  }
}

}  // namespace internal

OpCountScope::OpCountScope() : parent_(g_innermost_scope) {
  g_innermost_scope = this;
}

OpCountScope::~OpCountScope() { g_innermost_scope = parent_; }

// --- points -----------------------------------------------------------------

G1Point::G1Point() { std::memset(&p_, 0, sizeof(p_)); }

G1Point::G1Point(const blst_p1& p) { blst_p1_to_affine(&p_, &p); }

bool G1Point::IsIdentity() const { return blst_p1_affine_is_inf(&p_); }

bool G1Point::operator==(const G1Point& o) const {
  return blst_p1_affine_is_equal(&p_, &o.p_);
}

blst_p1 G1Point::projective() const {
  blst_p1 out;
  blst_p1_from_affine(&out, &p_);
  return out;
}

G2Point::G2Point() { std::memset(&p_, 0, sizeof(p_)); }

G2Point::G2Point(const blst_p2& p) { blst_p2_to_affine(&p_, &p); }

bool G2Point::IsIdentity() const { return blst_p2_affine_is_inf(&p_); }

bool G2Point::operator==(const G2Point& o) const {
  return blst_p2_affine_is_equal(&p_, &o.p_);
}

blst_p2 G2Point::projective() const {
  blst_p2 out;
  blst_p2_from_affine(&out, &p_);
  return out;
}

GtElement::GtElement() : f_(*blst_fp12_one()) {}

bool GtElement::IsIdentity() const { return blst_fp12_is_one(&f_); }

bool GtElement::operator==(const GtElement& o) const {
  return blst_fp12_is_equal(&f_, &o.f_);
}

MillerAccumulator::MillerAccumulator() : f_(*blst_fp12_one()) {}

G1Point G1Generator() { return G1Point(*blst_p1_generator()); }
G2Point G2Generator() { return G2Point(*blst_p2_generator()); }

G1Point AddG1(const G1Point& a, const G1Point& b) {
  const blst_p1 pa = a.projective();
  blst_p1 out;
  blst_p1_add_or_double_affine(&out, &pa, &b.affine());
  return G1Point(out);
}

G2Point AddG2(const G2Point& a, const G2Point& b) {
  const blst_p2 pa = a.projective();
  blst_p2 out;
  blst_p2_add_or_double_affine(&out, &pa, &b.affine());
  return G2Point(out);
}

G2Point DoubleG2(const G2Point& a) {
  const blst_p2 pa = a.projective();
  blst_p2 out;
  blst_p2_double(&out, &pa);
  return G2Point(out);
}

G1Point ScalarMulG1(const ZqScalar& a, const G1Point& p) {
  internal::CountOp(&OpCounts::g1_scalar_muls);
  const auto scalar = a.ToLittleEndian();
  const blst_p1 pp = p.projective();
  blst_p1 out;
  blst_p1_mult(&out, &pp, scalar.data(), kScalarBits);
  return G1Point(out);
}

G2Point ScalarMulG2(const ZqScalar& a, const G2Point& p) {
  internal::CountOp(&OpCounts::g2_scalar_muls);
  const auto scalar = a.ToLittleEndian();
  const blst_p2 pp = p.projective();
  blst_p2 out;
  blst_p2_mult(&out, &pp, scalar.data(), kScalarBits);
  return G2Point(out);
}

G2Point NaiveWindowedMulG2(const ZqScalar& a, const G2Point& p) {
  constexpr int kWindowBits = 4;
  constexpr int kTableSize = 1 << kWindowBits;
  constexpr int kWindows = 256 / kWindowBits;

  blst_p2 table[kTableSize];
  std::memset(&table[0], 0, sizeof(table[0]));
  table[1] = p.projective();
  for (int i = 2; i < kTableSize; ++i) {
    blst_p2_add_or_double(&table[i], &table[i - 1], &table[1]);
  }

  const auto scalar = a.ToLittleEndian();
  blst_p2 acc;
  std::memset(&acc, 0, sizeof(acc));
  for (int w = kWindows - 1; w >= 0; --w) {
    for (int d = 0; d < kWindowBits; ++d) blst_p2_double(&acc, &acc);
    const int byte = scalar[w / 2];
    const int nibble = (w % 2) ? (byte >> 4) : (byte & 0x0f);
    blst_p2_add_or_double(&acc, &acc, &table[nibble]);
  }
  return G2Point(acc);
}

// --- pairing ----------------------------------------------------------------

MillerAccumulator MillerLoop(std::span<const PairingInput> pairs) {
  if (pairs.empty()) {
    throw InvalidArgumentError("Miller loop needs at least one pair");
  }
  std::vector<const blst_p1_affine*> ps;
  std::vector<const blst_p2_affine*> qs;
  ps.reserve(pairs.size());
  qs.reserve(pairs.size());
  for (const auto& pair : pairs) {
    if (pair.p.IsIdentity() || pair.q.IsIdentity()) {
      throw InvalidArgumentError("identity point passed to the Miller loop");
    }
    ps.push_back(&pair.p.affine());
    qs.push_back(&pair.q.affine());
  }
  internal::CountOp(&OpCounts::miller_loops);
  internal::CountOp(&OpCounts::miller_loop_pairs, pairs.size());

  blst_fp12 out;
  if (pairs.size() == 1) {
    blst_miller_loop(&out, qs[0], ps[0]);
  } else {
    // blst merges up to 16 pairs per loop and multiplies the chunk results.
    blst_miller_loop_n(&out, qs.data(), ps.data(), pairs.size());
  }
  return MillerAccumulator(out);
}

MillerAccumulator MulAccumulators(const MillerAccumulator& a,
                                  const MillerAccumulator& b) {
  blst_fp12 out;
  blst_fp12_mul(&out, &a.fp12(), &b.fp12());
  return MillerAccumulator(out);
}

GtElement FinalExponentiation(const MillerAccumulator& acc) {
  internal::CountOp(&OpCounts::final_exponentiations);
  blst_fp12 out;
  blst_final_exp(&out, &acc.fp12());
  return GtElement(out);
}

GtElement Pairing(const G1Point& p, const G2Point& q) {
  internal::CountOp(&OpCounts::pairings);
  const PairingInput pair{p, q};
  return FinalExponentiation(MillerLoop(std::span(&pair, 1)));
}

GtElement GtMul(const GtElement& a, const GtElement& b) {
  internal::CountOp(&OpCounts::gt_muls);
  blst_fp12 out;
  blst_fp12_mul(&out, &a.fp12(), &b.fp12());
  return GtElement(out);
}

GtElement GtCyclotomicSquare(const GtElement& a) {
  internal::CountOp(&OpCounts::gt_cyclotomic_squares);
  blst_fp12 out;
  blst_fp12_cyclotomic_sqr(&out, &a.fp12());
  return GtElement(out);
}

GtElement GtInverse(const GtElement& a) {
  blst_fp12 out = a.fp12();
  blst_fp12_conjugate(&out);
  return GtElement(out);
}

GtElement GtExp(const GtElement& a, const ZqScalar& e) {
  const auto bits = e.ToLittleEndian();
  blst_fp12 acc = *blst_fp12_one();
  blst_fp12 product;
  for (int i = static_cast<int>(kScalarBits) - 1; i >= 0; --i) {
    blst_fp12_cyclotomic_sqr(&acc, &acc);
    blst_fp12_mul(&product, &acc, &a.fp12());
    const bool bit = (bits[i / 8] >> (i % 8)) & 1;
    acc = SelectFp12(bit, product, acc);
  }
  return GtElement(acc);
}

bool GtInGroup(const GtElement& a) { return blst_fp12_in_group(&a.fp12()); }

// --- encodings --------------------------------------------------------------

std::vector<uint8_t> SerializePoint(const G1Point& p, bool compressed) {
  std::vector<uint8_t> out(compressed ? kG1CompressedBytes
                                      : kG1UncompressedBytes);
  if (compressed) {
    blst_p1_affine_compress(out.data(), &p.affine());
  } else {
    blst_p1_affine_serialize(out.data(), &p.affine());
  }
  return out;
}

std::vector<uint8_t> SerializePoint(const G2Point& p, bool compressed) {
  std::vector<uint8_t> out(compressed ? kG2CompressedBytes
                                      : kG2UncompressedBytes);
  if (compressed) {
    blst_p2_affine_compress(out.data(), &p.affine());
  } else {
    blst_p2_affine_serialize(out.data(), &p.affine());
  }
  return out;
}

G1Point DeserializeG1(std::span<const uint8_t> bytes, bool compressed) {
  CheckLengthAndFlag(bytes,
                     compressed ? kG1CompressedBytes : kG1UncompressedBytes,
                     compressed, "G1");
  blst_p1_affine p;
  const BLST_ERROR err = compressed ? blst_p1_uncompress(&p, bytes.data())
                                    : blst_p1_deserialize(&p, bytes.data());
  if (err != BLST_SUCCESS) ThrowDecode(ReasonFor(err), "G1");
  if (!blst_p1_affine_in_g1(&p)) {
    ThrowDecode(PointDecodeError::Reason::kNotInSubgroup, "G1");
  }
  return G1Point(p);
}

G2Point DeserializeG2(std::span<const uint8_t> bytes, bool compressed) {
  CheckLengthAndFlag(bytes,
                     compressed ? kG2CompressedBytes : kG2UncompressedBytes,
                     compressed, "G2");
  blst_p2_affine p;
  const BLST_ERROR err = compressed ? blst_p2_uncompress(&p, bytes.data())
                                    : blst_p2_deserialize(&p, bytes.data());
  if (err != BLST_SUCCESS) ThrowDecode(ReasonFor(err), "G2");
  if (!blst_p2_affine_in_g2(&p)) {
    ThrowDecode(PointDecodeError::Reason::kNotInSubgroup, "G2");
  }
  return G2Point(p);
}

std::array<uint8_t, kGtBytes> SerializeGt(const GtElement& a) {
  std::array<uint8_t, kGtBytes> out;
  blst_bendian_from_fp12(out.data(), &a.fp12());
  return out;
}

namespace internal {

GtElement DeserializeGtCanonical(std::span<const uint8_t> bytes) {
  if (bytes.size() != kGtBytes) {
    ThrowDecode(PointDecodeError::Reason::kBadLength, "GT");
  }
  // Coefficient order mirrors blst_bendian_from_fp12.
  blst_fp12 f;
  const uint8_t* in = bytes.data();
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 2; ++j) {
      blst_fp_from_bendian(&f.fp6[j].fp2[i].fp[0], in);
      in += 48;
      blst_fp_from_bendian(&f.fp6[j].fp2[i].fp[1], in);
      in += 48;
    }
  }
  GtElement out(f);
  const auto round_trip = SerializeGt(out);
  if (std::memcmp(round_trip.data(), bytes.data(), kGtBytes) != 0) {
    ThrowDecode(PointDecodeError::Reason::kBadEncoding, "GT");
  }
  return out;
}

}  // namespace internal

GtElement DeserializeGt(std::span<const uint8_t> bytes) {
  GtElement out = internal::DeserializeGtCanonical(bytes);
  if (!GtInGroup(out)) {
    ThrowDecode(PointDecodeError::Reason::kNotInSubgroup, "GT");
  }
  return out;
}

}  // namespace fhipe
