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

#include "fhipe/fhipe.h"

#include <limits>
#include <string>

#include "fhipe/errors.h"

namespace fhipe {
namespace {

std::vector<ZqScalar> EncodeVector(const PlainVector& v) {
  std::vector<ZqScalar> out;
  out.reserve(v.values.size());
  for (int64_t x : v.values) out.push_back(EncodeSigned(x));
  return out;
}

void CheckVectorForParams(const PublicParams& pp, const PlainVector& v) {
  if (v.values.size() != pp.n) {
    throw InvalidArgumentError("vector length " +
                               std::to_string(v.values.size()) +
                               " does not match n = " + std::to_string(pp.n));
  }
  v.Validate();
}

}  // namespace

void PublicParams::Validate() const {
  if (curve != CurveId::kBls12_381) throw InvalidArgumentError("unknown curve");
  if (n == 0) throw InvalidArgumentError("dimension n must be >= 1");
  DlogParams::Create(s, is_signed);
}

void CheckElementBounds(const PublicParams& pp, uint64_t bound_x,
                        uint64_t bound_y) {
  const unsigned __int128 worst =
      static_cast<unsigned __int128>(pp.n) * bound_x * bound_y;
  if (worst >= pp.s) {
    throw InvalidArgumentError(
        "n * Bx * By must be below the decryption bound s");
  }
}

void PlainVector::Validate() const {
  for (size_t i = 0; i < values.size(); ++i) {
    const int64_t v = values[i];
    if (v == std::numeric_limits<int64_t>::min()) {
      throw InvalidArgumentError("element out of range");
    }
    const uint64_t magnitude = static_cast<uint64_t>(v < 0 ? -v : v);
    if (magnitude > bound || (!is_signed && v < 0)) {
      throw InvalidArgumentError("element " + std::to_string(i) + " = " +
                                 std::to_string(v) +
                                 " violates the declared bound");
    }
  }
}

SetupResult Setup(uint32_t n, uint64_t s, bool is_signed, RandomSource& rng) {
  PublicParams pp;
  pp.n = n;
  pp.s = s;
  pp.is_signed = is_signed;
  pp.Validate();
  MatrixZq b = SampleInvertibleMatrix(n, rng);
  return {pp, MasterSecretKeyFromMatrix(pp, b)};
}

MasterSecretKey MasterSecretKeyFromMatrix(const PublicParams& pp,
                                          const MatrixZq& b) {
  pp.Validate();
  if (b.n() != pp.n) throw InvalidArgumentError("matrix dimension != n");
  return {pp, DualOf(b), G1Generator(), G2Generator()};
}

FunctionKey KeyGen(const MasterSecretKey& msk, const PlainVector& x,
                   RandomSource& rng) {
  CheckVectorForParams(msk.pp, x);
  const ZqScalar blinding_alpha = RandomNonzeroScalar(rng);
  const std::vector<ZqScalar> xb =
      RowVectorTimesMatrix(EncodeVector(x), msk.dual.b);

  FunctionKey key;
  key.k1 = ScalarMulG1(blinding_alpha * msk.dual.det_b, msk.g1);
  key.k2.reserve(xb.size());
  for (const ZqScalar& e : xb) {
    key.k2.push_back(ScalarMulG1(blinding_alpha * e, msk.g1));
  }
  return key;
}

Ciphertext Encrypt(const MasterSecretKey& msk, const PlainVector& y,
                   RandomSource& rng) {
  CheckVectorForParams(msk.pp, y);
  const ZqScalar blinding_beta = RandomNonzeroScalar(rng);
  const std::vector<ZqScalar> yb =
      RowVectorTimesMatrix(EncodeVector(y), msk.dual.b_star);

  Ciphertext ct;
  ct.c1 = ScalarMulG2(blinding_beta, msk.g2);
  ct.c2.reserve(yb.size());
  for (const ZqScalar& e : yb) {
    ct.c2.push_back(ScalarMulG2(blinding_beta * e, msk.g2));
  }
  return ct;
}

ZqScalar EncodeSigned(int64_t v) {
  if (v == std::numeric_limits<int64_t>::min()) {
    throw InvalidArgumentError("magnitude overflow in signed encoding");
  }
  return ZqScalar::FromInt64(v);
}

int64_t DecodeSigned(uint64_t shifted, uint64_t s) {
  if (s == 0 || shifted > 2 * (s - 1)) {
    throw InvalidArgumentError("shifted exponent outside [0, 2s - 2]");
  }
  return static_cast<int64_t>(shifted) - static_cast<int64_t>(s - 1);
}

int64_t DecodeSigned(const ZqScalar& z) { return ToInt64(z); }

DecryptionElements ComputeDecryptionElements(const FunctionKey& sk,
                                             const Ciphertext& ct,
                                             MultiPairingStrategy strategy) {
  if (sk.k2.size() != ct.c2.size()) {
    throw InvalidArgumentError("function key and ciphertext dimensions differ");
  }
  DecryptionElements out;
  out.d1 = Pairing(sk.k1, ct.c1);

  std::vector<PairingInput> pairs;
  pairs.reserve(sk.k2.size());
  for (size_t i = 0; i < sk.k2.size(); ++i) {
    if (sk.k2[i].IsIdentity() || ct.c2[i].IsIdentity()) continue;
    pairs.push_back({sk.k2[i], ct.c2[i]});
  }
  out.active_pairs = pairs.size();
  if (!pairs.empty()) out.d2 = MultiPairing(pairs, strategy);
  return out;
}

std::optional<int64_t> SolveInnerProduct(const PublicParams& pp,
                                         const DecryptionElements& elements,
                                         const DecryptOptions& options) {
  const DlogParams params = pp.dlog_params();
  const DlogTable* table = options.table;
  std::optional<DlogTable> local;
  if (table == nullptr || table->alpha() != params.table_alpha ||
      !(table->base() == elements.d1)) {
    local = DlogTable::BuildPowerTree(elements.d1, params.table_alpha);
    if (options.fast_lookup) local->EnableFastLookup();
    table = &*local;
  }

  if (params.is_signed) {
    return BsgsSigned(elements.d1, elements.d2, params, *table);
  }
  const auto z = Bsgs(elements.d1, elements.d2, params, *table);
  if (!z) return std::nullopt;
  return static_cast<int64_t>(*z);
}

std::optional<int64_t> Decrypt(const PublicParams& pp, const FunctionKey& sk,
                               const Ciphertext& ct,
                               const DecryptOptions& options) {
  pp.Validate();
  if (sk.k2.size() != pp.n || ct.c2.size() != pp.n) {
    throw InvalidArgumentError("key/ciphertext dimension does not match n");
  }
  return SolveInnerProduct(
      pp, ComputeDecryptionElements(sk, ct, options.strategy), options);
}

}  // namespace fhipe
