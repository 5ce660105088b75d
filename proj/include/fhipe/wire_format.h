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

// Byte layouts for keys and ciphertexts. Every file starts with a 20-byte
// header:
//
//   offset  size  field
//   0       4     magic "FHIP"
//   4       1     version (0x01)
//   5       1     kind (0x01 msk, 0x02 function key, 0x03 ciphertext,
//                       0x04 dlog table)
//   6       1     curve id (0x01 BLS12-381)
//   7       1     flags (bit0 compressed points, bit1 signed mode)
//   8       4     n, little-endian
//   12      8     s, little-endian
//
// Payloads:
//   ciphertext    c1 || c2[0..n)          G2 points, 192 or 96 bytes each
//   function key  k1 || k2[0..n)          G1 points, 96 or 48 bytes each
//   msk           B || B* || det(B)       32-byte little-endian scalars,
//                                         matrices row-major
//   dlog table    "FHDT" table image      see DlogTable::Serialize

#ifndef FHIPE_WIRE_FORMAT_H_
#define FHIPE_WIRE_FORMAT_H_

#include <cstdint>
#include <filesystem>
#include <span>
#include <string_view>
#include <vector>

#include "fhipe/fhipe.h"

namespace fhipe {

inline constexpr size_t kFileHeaderBytes = 20;

enum class FileKind : uint8_t {
  kMasterKey = 0x01,
  kFunctionKey = 0x02,
  kCiphertext = 0x03,
  kDlogTable = 0x04,
};

struct FileHeader {
  FileKind kind = FileKind::kCiphertext;
  bool compressed = false;
  PublicParams pp;

  bool operator==(const FileHeader&) const = default;
};

std::vector<uint8_t> EncodeHeader(const FileHeader& header);
// Throws FormatError for an unknown magic, version, kind or curve, or n == 0.
FileHeader DecodeHeader(std::span<const uint8_t> bytes);

size_t CiphertextPayloadBytes(size_t n, bool compressed);
size_t FunctionKeyPayloadBytes(size_t n, bool compressed);
size_t MasterKeyPayloadBytes(size_t n);

struct CiphertextFile {
  PublicParams pp;
  Ciphertext ct;
  bool compressed = false;
};

struct FunctionKeyFile {
  PublicParams pp;
  FunctionKey key;
  bool compressed = false;
};

std::vector<uint8_t> WriteCiphertext(const PublicParams& pp,
                                     const Ciphertext& ct, bool compressed);
// Validates curve and subgroup membership of every point.
CiphertextFile ReadCiphertext(std::span<const uint8_t> bytes);

std::vector<uint8_t> WriteFunctionKey(const PublicParams& pp,
                                      const FunctionKey& key, bool compressed);
FunctionKeyFile ReadFunctionKey(std::span<const uint8_t> bytes);

std::vector<uint8_t> WriteMasterKey(const MasterSecretKey& msk);
// Recomputes det(B) and B * (B*)^T; throws IntegrityError on any mismatch.
MasterSecretKey ReadMasterKey(std::span<const uint8_t> bytes);

struct DlogTableFile {
  PublicParams pp;
  DlogTable table;
};

std::vector<uint8_t> WriteDlogTableFile(const PublicParams& pp,
                                        const DlogTable& table);
// Runs the table's integrity checks; throws IntegrityError on failure.
DlogTableFile ReadDlogTableFile(std::span<const uint8_t> bytes);

// One decimal integer per line. Throws FormatError naming the offending line
// for syntax errors and InvalidArgumentError for bound violations.
PlainVector ParseVectorCsv(std::string_view text, uint64_t bound,
                           bool is_signed);
PlainVector ReadVectorCsv(const std::filesystem::path& path, uint64_t bound,
                          bool is_signed);

// Throws IoError.
std::vector<uint8_t> ReadFileBytes(const std::filesystem::path& path);
std::string ReadFileText(const std::filesystem::path& path);
void WriteFileBytes(const std::filesystem::path& path,
                    std::span<const uint8_t> bytes);
void WriteFileText(const std::filesystem::path& path, std::string_view text);

}  // namespace fhipe

#endif  // FHIPE_WIRE_FORMAT_H_
