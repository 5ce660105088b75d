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

#include <charconv>
#include <cstring>
#include <fstream>
#include <iterator>
#include <string>

#include "fhipe/errors.h"

namespace fhipe {
namespace {

constexpr char kMagic[4] = {'F', 'H', 'I', 'P'};
constexpr uint8_t kVersion = 0x01;
constexpr uint8_t kFlagCompressed = 0x01;
constexpr uint8_t kFlagSigned = 0x02;

void PutLe(std::vector<uint8_t>& out, uint64_t v, int bytes) {
  for (int i = 0; i < bytes; ++i) out.push_back(static_cast<uint8_t>(v >> (8 * i)));
}

uint64_t GetLe(const uint8_t* in, int bytes) {
  uint64_t v = 0;
  for (int i = 0; i < bytes; ++i) v |= static_cast<uint64_t>(in[i]) << (8 * i);
  return v;
}

void Append(std::vector<uint8_t>& out, std::span<const uint8_t> bytes) {
  out.insert(out.end(), bytes.begin(), bytes.end());
}

// Checks kind and exact total length, returning the decoded header.
FileHeader ExpectFile(std::span<const uint8_t> bytes, FileKind kind,
                      size_t (*payload_bytes)(size_t, bool)) {
  const FileHeader header = DecodeHeader(bytes);
  if (header.kind != kind) throw FormatError("unexpected file kind");
  const size_t expected =
      kFileHeaderBytes + payload_bytes(header.pp.n, header.compressed);
  if (bytes.size() < expected) throw FormatError("file truncated");
  if (bytes.size() > expected) throw FormatError("trailing bytes after payload");
  return header;
}

ZqScalar ReadScalar(const uint8_t* in) {
  auto v = ZqScalar::FromLittleEndian(std::span<const uint8_t, kScalarBytes>(
      in, kScalarBytes));
  if (!v) throw FormatError("scalar is not a canonical element of Z_q");
  return *v;
}

MatrixZq ReadMatrix(const uint8_t*& in, size_t n) {
  std::vector<ZqScalar> entries;
  entries.reserve(n * n);
  for (size_t i = 0; i < n * n; ++i, in += kScalarBytes) {
    entries.push_back(ReadScalar(in));
  }
  return MatrixZq(n, std::move(entries));
}

// Strips surrounding ASCII whitespace.
std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

std::vector<uint8_t> EncodeHeader(const FileHeader& header) {
  std::vector<uint8_t> out;
  out.reserve(kFileHeaderBytes);
  out.insert(out.end(), std::begin(kMagic), std::end(kMagic));
  out.push_back(kVersion);
  out.push_back(static_cast<uint8_t>(header.kind));
  out.push_back(static_cast<uint8_t>(header.pp.curve));
  out.push_back((header.compressed ? kFlagCompressed : 0) |
                (header.pp.is_signed ? kFlagSigned : 0));
  PutLe(out, header.pp.n, 4);
  PutLe(out, header.pp.s, 8);
  return out;
}

FileHeader DecodeHeader(std::span<const uint8_t> bytes) {
  if (bytes.size() < kFileHeaderBytes) throw FormatError("file truncated");
  if (std::memcmp(bytes.data(), kMagic, 4) != 0) {
    throw FormatError("bad magic (not an FHIP file)");
  }
  if (bytes[4] != kVersion) throw FormatError("unsupported format version");
  if (bytes[5] < 0x01 || bytes[5] > 0x04) throw FormatError("unknown file kind");
  if (bytes[6] != static_cast<uint8_t>(CurveId::kBls12_381)) {
    throw FormatError("unknown curve id");
  }
  if ((bytes[7] & ~(kFlagCompressed | kFlagSigned)) != 0) {
    throw FormatError("unknown header flags");
  }
  FileHeader header;
  header.kind = static_cast<FileKind>(bytes[5]);
  header.compressed = (bytes[7] & kFlagCompressed) != 0;
  header.pp.curve = CurveId::kBls12_381;
  header.pp.is_signed = (bytes[7] & kFlagSigned) != 0;
  header.pp.n = static_cast<uint32_t>(GetLe(bytes.data() + 8, 4));
  header.pp.s = GetLe(bytes.data() + 12, 8);
  if (header.pp.n == 0) throw FormatError("header declares n = 0");
  if (header.pp.s == 0) throw FormatError("header declares s = 0");
  return header;
}

size_t CiphertextPayloadBytes(size_t n, bool compressed) {
  return (n + 1) * (compressed ? kG2CompressedBytes : kG2UncompressedBytes);
}

size_t FunctionKeyPayloadBytes(size_t n, bool compressed) {
  return (n + 1) * (compressed ? kG1CompressedBytes : kG1UncompressedBytes);
}

size_t MasterKeyPayloadBytes(size_t n) {
  return (2 * n * n + 1) * kScalarBytes;
}

std::vector<uint8_t> WriteCiphertext(const PublicParams& pp,
                                     const Ciphertext& ct, bool compressed) {
  if (ct.c2.size() != pp.n) {
    throw InvalidArgumentError("ciphertext dimension does not match n");
  }
  std::vector<uint8_t> out = EncodeHeader({FileKind::kCiphertext, compressed, pp});
  out.reserve(kFileHeaderBytes + CiphertextPayloadBytes(pp.n, compressed));
  Append(out, SerializePoint(ct.c1, compressed));
  for (const auto& p : ct.c2) Append(out, SerializePoint(p, compressed));
  return out;
}

CiphertextFile ReadCiphertext(std::span<const uint8_t> bytes) {
  const FileHeader h =
      ExpectFile(bytes, FileKind::kCiphertext, &CiphertextPayloadBytes);
  const size_t point = h.compressed ? kG2CompressedBytes : kG2UncompressedBytes;
  CiphertextFile out{h.pp, {}, h.compressed};
  size_t offset = kFileHeaderBytes;
  out.ct.c1 = DeserializeG2(bytes.subspan(offset, point), h.compressed);
  offset += point;
  out.ct.c2.reserve(h.pp.n);
  for (uint32_t i = 0; i < h.pp.n; ++i, offset += point) {
    out.ct.c2.push_back(DeserializeG2(bytes.subspan(offset, point), h.compressed));
  }
  return out;
}

std::vector<uint8_t> WriteFunctionKey(const PublicParams& pp,
                                      const FunctionKey& key, bool compressed) {
  if (key.k2.size() != pp.n) {
    throw InvalidArgumentError("function key dimension does not match n");
  }
  std::vector<uint8_t> out =
      EncodeHeader({FileKind::kFunctionKey, compressed, pp});
  out.reserve(kFileHeaderBytes + FunctionKeyPayloadBytes(pp.n, compressed));
  Append(out, SerializePoint(key.k1, compressed));
  for (const auto& p : key.k2) Append(out, SerializePoint(p, compressed));
  return out;
}

FunctionKeyFile ReadFunctionKey(std::span<const uint8_t> bytes) {
  const FileHeader h =
      ExpectFile(bytes, FileKind::kFunctionKey, &FunctionKeyPayloadBytes);
  const size_t point = h.compressed ? kG1CompressedBytes : kG1UncompressedBytes;
  FunctionKeyFile out{h.pp, {}, h.compressed};
  size_t offset = kFileHeaderBytes;
  out.key.k1 = DeserializeG1(bytes.subspan(offset, point), h.compressed);
  offset += point;
  out.key.k2.reserve(h.pp.n);
  for (uint32_t i = 0; i < h.pp.n; ++i, offset += point) {
    out.key.k2.push_back(
        DeserializeG1(bytes.subspan(offset, point), h.compressed));
  }
  return out;
}

std::vector<uint8_t> WriteMasterKey(const MasterSecretKey& msk) {
  std::vector<uint8_t> out =
      EncodeHeader({FileKind::kMasterKey, false, msk.pp});
  out.reserve(kFileHeaderBytes + MasterKeyPayloadBytes(msk.pp.n));
  for (const auto& e : msk.dual.b.entries()) Append(out, e.ToLittleEndian());
  for (const auto& e : msk.dual.b_star.entries()) Append(out, e.ToLittleEndian());
  Append(out, msk.dual.det_b.ToLittleEndian());
  return out;
}

MasterSecretKey ReadMasterKey(std::span<const uint8_t> bytes) {
  const FileHeader h = ExpectFile(
      bytes, FileKind::kMasterKey,
      [](size_t n, bool) { return MasterKeyPayloadBytes(n); });
  if (h.compressed) throw FormatError("master key cannot be compressed");
  try {
    h.pp.Validate();
  } catch (const InvalidArgumentError& e) {
    throw FormatError(std::string("bad public parameters: ") + e.what());
  }

  const uint8_t* in = bytes.data() + kFileHeaderBytes;
  MatrixZq b = ReadMatrix(in, h.pp.n);
  MatrixZq b_star = ReadMatrix(in, h.pp.n);
  const ZqScalar det = ReadScalar(in);

  DualMatrixPair dual{std::move(b), std::move(b_star), det};
  try {
    if (!(ComputeDetAndInverse(dual.b).det == det)) {
      throw IntegrityError("master key: stored det(B) does not match B");
    }
  } catch (const SingularMatrixError&) {
    throw IntegrityError("master key: B is singular");
  }
  if (!dual.SatisfiesDualIdentity()) {
    throw IntegrityError("master key: B * (B*)^T != det(B) * I");
  }
  return {h.pp, std::move(dual), G1Generator(), G2Generator()};
}

std::vector<uint8_t> WriteDlogTableFile(const PublicParams& pp,
                                        const DlogTable& table) {
  std::vector<uint8_t> out = EncodeHeader({FileKind::kDlogTable, false, pp});
  Append(out, table.Serialize());
  return out;
}

DlogTableFile ReadDlogTableFile(std::span<const uint8_t> bytes) {
  const FileHeader h = DecodeHeader(bytes);
  if (h.kind != FileKind::kDlogTable) throw FormatError("unexpected file kind");
  return {h.pp, DlogTable::Deserialize(bytes.subspan(kFileHeaderBytes))};
}

PlainVector ParseVectorCsv(std::string_view text, uint64_t bound,
                           bool is_signed) {
  PlainVector out;
  out.bound = bound;
  out.is_signed = is_signed;
  size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const size_t eol = text.find('\n');
    std::string line(Trim(text.substr(0, eol)));
    text.remove_prefix(eol == std::string_view::npos ? text.size() : eol + 1);
    if (line.empty()) continue;

    // Accept the typographic minus sign (U+2212) as well as '-'.
    static constexpr std::string_view kUnicodeMinus = "\xE2\x88\x92";
    if (line.starts_with(kUnicodeMinus)) {
      line.replace(0, kUnicodeMinus.size(), "-");
    }
    int64_t v = 0;
    const char* first = line.data();
    const char* last = line.data() + line.size();
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last) {
      throw FormatError("line " + std::to_string(line_no) +
                        ": expected a decimal integer, got '" + line + "'");
    }
    if (v < 0 && !is_signed) {
      throw InvalidArgumentError("line " + std::to_string(line_no) +
                                 ": negative value in unsigned vector");
    }
    const uint64_t magnitude =
        v < 0 ? ~static_cast<uint64_t>(v) + 1 : static_cast<uint64_t>(v);
    if (magnitude > bound) {
      throw InvalidArgumentError("line " + std::to_string(line_no) + ": |" +
                                 std::to_string(v) + "| exceeds bound " +
                                 std::to_string(bound));
    }
    out.values.push_back(v);
  }
  if (out.values.empty()) throw FormatError("vector file has no values");
  return out;
}

PlainVector ReadVectorCsv(const std::filesystem::path& path, uint64_t bound,
                          bool is_signed) {
  return ParseVectorCsv(ReadFileText(path), bound, is_signed);
}

std::vector<uint8_t> ReadFileBytes(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  return std::vector<uint8_t>(std::istreambuf_iterator<char>(in), {});
}

std::string ReadFileText(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  return std::string(std::istreambuf_iterator<char>(in), {});
}

void WriteFileBytes(const std::filesystem::path& path,
                    std::span<const uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("short write to " + path.string());
}

void WriteFileText(const std::filesystem::path& path, std::string_view text) {
  WriteFileBytes(path, std::span(reinterpret_cast<const uint8_t*>(text.data()),
                                 text.size()));
}

}  // namespace fhipe
