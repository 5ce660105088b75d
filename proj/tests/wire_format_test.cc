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

#include "fhipe/wire_format.h"

#include <gtest/gtest.h>

#include <filesystem>

#include "fhipe/errors.h"

namespace fhipe {
namespace {

PlainVector Ones(size_t n) { return {std::vector<int64_t>(n, 1), 1, false}; }

TEST(WireFormatTest, HeaderLayout) {
  FileHeader h;
  h.kind = FileKind::kFunctionKey;
  h.compressed = true;
  h.pp.n = 0x01020304;
  h.pp.s = 0x1122334455667788ULL;
  h.pp.is_signed = true;
  const auto bytes = EncodeHeader(h);
  ASSERT_EQ(bytes.size(), kFileHeaderBytes);
  const std::vector<uint8_t> expected = {
      'F', 'H', 'I', 'P', 0x01, 0x02, 0x01, 0x03, 0x04, 0x03,
      0x02, 0x01, 0x88, 0x77, 0x66, 0x55, 0x44, 0x33, 0x22, 0x11};
  EXPECT_EQ(bytes, expected);
  EXPECT_EQ(DecodeHeader(bytes), h);
}

TEST(WireFormatTest, HeaderRejections) {
  FileHeader h;
  h.pp.n = 3;
  h.pp.s = 10;
  const auto good = EncodeHeader(h);
  for (size_t pos : {0u, 4u, 6u}) {
    auto bad = good;
    bad[pos] ^= 0x40;
    EXPECT_THROW(DecodeHeader(bad), FormatError) << pos;
  }
  auto bad_kind = good;
  bad_kind[5] = 0x09;
  EXPECT_THROW(DecodeHeader(bad_kind), FormatError);
  auto bad_flags = good;
  bad_flags[7] = 0x80;
  EXPECT_THROW(DecodeHeader(bad_flags), FormatError);
  auto zero_n = good;
  zero_n[8] = 0;
  EXPECT_THROW(DecodeHeader(zero_n), FormatError);
  EXPECT_THROW(DecodeHeader(std::span(good).first(19)), FormatError);
}

TEST(WireFormatTest, PayloadSizeFormulas) {
  EXPECT_EQ(CiphertextPayloadBytes(100, false), 19392u);
  EXPECT_EQ(CiphertextPayloadBytes(100, true), 9696u);
  EXPECT_EQ(CiphertextPayloadBytes(1, false), 384u);
  EXPECT_EQ(FunctionKeyPayloadBytes(100, false), 9696u);
  EXPECT_EQ(FunctionKeyPayloadBytes(100, true), 4848u);
  EXPECT_EQ(MasterKeyPayloadBytes(4), 1056u);
}

TEST(WireFormatTest, CiphertextAndKeyRoundTrip) {
  SeededRandom rng(41);
  for (uint32_t n : {1u, 10u}) {
    const auto setup = fhipe::Setup(n, 4096, n == 10, rng);
    const auto ct = Encrypt(setup.msk, Ones(n), rng);
    const auto key = KeyGen(setup.msk, Ones(n), rng);
    for (bool compressed : {false, true}) {
      const auto ct_bytes = WriteCiphertext(setup.pp, ct, compressed);
      EXPECT_EQ(ct_bytes.size(),
                kFileHeaderBytes + CiphertextPayloadBytes(n, compressed));
      const auto ct_back = ReadCiphertext(ct_bytes);
      EXPECT_EQ(ct_back.pp, setup.pp);
      EXPECT_EQ(WriteCiphertext(ct_back.pp, ct_back.ct, compressed), ct_bytes);

      const auto key_bytes = WriteFunctionKey(setup.pp, key, compressed);
      const auto key_back = ReadFunctionKey(key_bytes);
      EXPECT_EQ(WriteFunctionKey(key_back.pp, key_back.key, compressed),
                key_bytes);
      EXPECT_EQ(Decrypt(setup.pp, key_back.key, ct_back.ct),
                static_cast<int64_t>(n));
    }
  }
}

TEST(WireFormatTest, StructuralErrors) {
  SeededRandom rng(42);
  const auto setup = fhipe::Setup(2, 4096, false, rng);
  const auto ct_bytes =
      WriteCiphertext(setup.pp, Encrypt(setup.msk, Ones(2), rng), false);
  EXPECT_THROW(ReadCiphertext(std::span(ct_bytes).first(ct_bytes.size() - 1)),
               FormatError);
  auto trailing = ct_bytes;
  trailing.push_back(0);
  EXPECT_THROW(ReadCiphertext(trailing), FormatError);
  EXPECT_THROW(ReadFunctionKey(ct_bytes), FormatError);
  auto corrupt = ct_bytes;
  corrupt[kFileHeaderBytes + 191] ^= 0x01;
  EXPECT_THROW(ReadCiphertext(corrupt), PointDecodeError);
}

TEST(WireFormatTest, MasterKeyRoundTripAndTamperDetection) {
  SeededRandom rng(43);
  const auto setup = fhipe::Setup(3, 4096, false, rng);
  const auto bytes = WriteMasterKey(setup.msk);
  EXPECT_EQ(bytes.size(), kFileHeaderBytes + MasterKeyPayloadBytes(3));
  const auto back = ReadMasterKey(bytes);
  EXPECT_EQ(back.dual.b, setup.msk.dual.b);
  EXPECT_EQ(WriteMasterKey(back), bytes);

  // Every single-bit flip in the payload is caught, either as a
  // non-canonical scalar or as a failed algebraic check.
  size_t detected = 0;
  for (size_t byte = kFileHeaderBytes; byte < bytes.size(); ++byte) {
    for (int bit = 0; bit < 8; bit += 3) {
      auto t = bytes;
      t[byte] ^= static_cast<uint8_t>(1u << bit);
      try {
        ReadMasterKey(t);
      } catch (const IntegrityError&) {
        ++detected;
        continue;
      } catch (const FormatError&) {
        ++detected;
        continue;
      }
      ADD_FAILURE() << "undetected flip at byte " << byte << " bit " << bit;
    }
  }
  EXPECT_GT(detected, 0u);
}

TEST(WireFormatTest, DlogTableFileRoundTrip) {
  PublicParams pp;
  pp.n = 2;
  pp.s = 256;
  const auto table =
      DlogTable::BuildPowerTree(Pairing(G1Generator(), G2Generator()), 16);
  const auto bytes = WriteDlogTableFile(pp, table);
  const auto back = ReadDlogTableFile(bytes);
  EXPECT_EQ(back.pp, pp);
  EXPECT_EQ(WriteDlogTableFile(back.pp, back.table), bytes);
}

TEST(WireFormatTest, VectorCsv) {
  const auto v = ParseVectorCsv("1\n-2\n\n  3 \r\n", 10, true);
  EXPECT_EQ(v.values, (std::vector<int64_t>{1, -2, 3}));
  // Typographic minus sign.
  const auto rssi = ParseVectorCsv("\xE2\x88\x92" "70\n\xE2\x88\x92" "55\n",
                                   100, true);
  EXPECT_EQ(rssi.values, (std::vector<int64_t>{-70, -55}));
  try {
    ParseVectorCsv("1\n2\nthree\n", 10, true);
    FAIL();
  } catch (const FormatError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  }
  EXPECT_THROW(ParseVectorCsv("-1\n", 10, false), InvalidArgumentError);
  EXPECT_THROW(ParseVectorCsv("11\n", 10, true), InvalidArgumentError);
  EXPECT_THROW(ParseVectorCsv("\n\n", 10, true), FormatError);
}

TEST(WireFormatTest, FileHelpers) {
  const auto dir = std::filesystem::temp_directory_path();
  const auto path = dir / "fhipe_wire_format_test.bin";
  const std::vector<uint8_t> data = {1, 2, 3, 0, 255};
  WriteFileBytes(path, data);
  EXPECT_EQ(ReadFileBytes(path), data);
  std::filesystem::remove(path);
  EXPECT_THROW(ReadFileBytes(path), IoError);
  EXPECT_THROW(WriteFileBytes(dir / "no-such-dir" / "x", data), IoError);
}

}  // namespace
}  // namespace fhipe
