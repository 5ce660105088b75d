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

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <memory>
#include <optional>

#include "fhipe/apps.h"
#include "fhipe/errors.h"
#include "fhipe/fhipe.h"
#include "fhipe/rng.h"
#include "fhipe/wire_format.h"

namespace py = pybind11;

namespace fhipe {
namespace {

std::unique_ptr<RandomSource> MakeRng(std::optional<uint64_t> seed) {
  if (seed) return std::make_unique<SeededRandom>(*seed);
  return std::make_unique<OsRandom>();
}

std::span<const uint8_t> AsSpan(const py::bytes& b) {
  const std::string_view view = b;
  return {reinterpret_cast<const uint8_t*>(view.data()), view.size()};
}

py::bytes ToBytes(const std::vector<uint8_t>& v) {
  return py::bytes(reinterpret_cast<const char*>(v.data()), v.size());
}

// Without a declared bound the vector's own largest magnitude is used.
PlainVector MakeVector(std::vector<int64_t> values,
                       std::optional<uint64_t> bound, bool is_signed) {
  uint64_t widest = 0;
  for (int64_t v : values) {
    widest = std::max(widest, v < 0 ? 0 - static_cast<uint64_t>(v)
                                    : static_cast<uint64_t>(v));
  }
  return {std::move(values), bound.value_or(widest), is_signed};
}

MultiPairingStrategy Strategy(const std::string& name) {
  const auto s = ParseStrategy(name);
  if (!s) throw InvalidArgumentError("unknown multi-pairing strategy: " + name);
  return *s;
}

}  // namespace
}  // namespace fhipe

PYBIND11_MODULE(_fhipe, m) {
  using namespace fhipe;
  m.doc() = "Function-hiding inner product encryption over BLS12-381";

  auto error = py::register_exception<Error>(m, "Error");
  py::register_exception<InvalidArgumentError>(m, "InvalidArgumentError",
                                               error);
  py::register_exception<SingularMatrixError>(m, "SingularMatrixError", error);
  py::register_exception<RngFailureError>(m, "RngFailureError", error);
  py::register_exception<PointDecodeError>(m, "PointDecodeError", error);
  py::register_exception<FormatError>(m, "FormatError", error);
  py::register_exception<IoError>(m, "IoError", error);
  py::register_exception<IntegrityError>(m, "IntegrityError", error);

  py::class_<PublicParams>(m, "PublicParams")
      .def(py::init([](uint32_t n, uint64_t s, bool is_signed) {
             PublicParams pp;
             pp.n = n;
             pp.s = s;
             pp.is_signed = is_signed;
             pp.Validate();
             return pp;
           }),
           py::arg("n"), py::arg("s"), py::arg("signed") = false)
      .def_readonly("n", &PublicParams::n)
      .def_readonly("s", &PublicParams::s)
      .def_readonly("signed", &PublicParams::is_signed)
      .def_property_readonly(
          "table_alpha",
          [](const PublicParams& pp) { return pp.dlog_params().table_alpha; })
      .def(py::self == py::self)
      .def("__repr__", [](const PublicParams& pp) {
        return "PublicParams(n=" + std::to_string(pp.n) +
               ", s=" + std::to_string(pp.s) +
               ", signed=" + (pp.is_signed ? "True" : "False") + ")";
      });

  py::class_<MasterSecretKey>(m, "MasterSecretKey")
      .def_readonly("pp", &MasterSecretKey::pp);
  py::class_<FunctionKey>(m, "FunctionKey");
  py::class_<Ciphertext>(m, "Ciphertext");

  m.def(
      "setup",
      [](uint32_t n, uint64_t s, bool is_signed, std::optional<uint64_t> seed) {
        auto rng = MakeRng(seed);
        return Setup(n, s, is_signed, *rng).msk;
      },
      py::arg("n"), py::arg("s"), py::arg("signed") = false,
      py::arg("seed") = py::none(),
      "Samples a master secret key. Pass seed only for reproducible tests.");

  m.def(
      "keygen",
      [](const MasterSecretKey& msk, std::vector<int64_t> x,
         std::optional<uint64_t> bound, bool is_signed,
         std::optional<uint64_t> seed) {
        auto rng = MakeRng(seed);
        return KeyGen(msk, MakeVector(std::move(x), bound, is_signed),
                      *rng);
      },
      py::arg("msk"), py::arg("x"), py::arg("bound") = py::none(),
      py::arg("signed") = true, py::arg("seed") = py::none());

  m.def(
      "encrypt",
      [](const MasterSecretKey& msk, std::vector<int64_t> y,
         std::optional<uint64_t> bound, bool is_signed,
         std::optional<uint64_t> seed) {
        auto rng = MakeRng(seed);
        return Encrypt(msk, MakeVector(std::move(y), bound, is_signed),
                       *rng);
      },
      py::arg("msk"), py::arg("y"), py::arg("bound") = py::none(),
      py::arg("signed") = true, py::arg("seed") = py::none());

  m.def(
      "decrypt",
      [](const PublicParams& pp, const FunctionKey& key, const Ciphertext& ct,
         const std::string& strategy) {
        DecryptOptions options;
        options.strategy = Strategy(strategy);
        py::gil_scoped_release release;
        return Decrypt(pp, key, ct, options);
      },
      py::arg("pp"), py::arg("key"), py::arg("ct"),
      py::arg("strategy") = "shared-ml-fe",
      "Returns the inner product, or None when it is out of range.");

  m.def("write_master_key",
        [](const MasterSecretKey& msk) { return ToBytes(WriteMasterKey(msk)); });
  m.def("read_master_key",
        [](const py::bytes& b) { return ReadMasterKey(AsSpan(b)); });
  m.def(
      "write_function_key",
      [](const PublicParams& pp, const FunctionKey& key, bool compressed) {
        return ToBytes(WriteFunctionKey(pp, key, compressed));
      },
      py::arg("pp"), py::arg("key"), py::arg("compressed") = false);
  m.def("read_function_key", [](const py::bytes& b) {
    auto f = ReadFunctionKey(AsSpan(b));
    return py::make_tuple(f.pp, f.key);
  });
  m.def(
      "write_ciphertext",
      [](const PublicParams& pp, const Ciphertext& ct, bool compressed) {
        return ToBytes(WriteCiphertext(pp, ct, compressed));
      },
      py::arg("pp"), py::arg("ct"), py::arg("compressed") = false);
  m.def("read_ciphertext", [](const py::bytes& b) {
    auto f = ReadCiphertext(AsSpan(b));
    return py::make_tuple(f.pp, f.ct);
  });

  m.def("classify_plain",
        [](const std::vector<int64_t>& w, const std::vector<int64_t>& s,
           int64_t threshold) {
          return std::string(ClassName(ClassifyPlain(w, s, threshold)));
        });
  m.def("classify_encrypted",
        [](const PublicParams& pp, const FunctionKey& key, const Ciphertext& ct,
           int64_t threshold) -> std::optional<std::string> {
          const auto c = ClassifyEncrypted(pp, key, ct, threshold);
          if (!c) return std::nullopt;
          return std::string(ClassName(*c));
        });

  py::class_<LocalizationConfig>(m, "LocalizationConfig")
      .def(py::init([](uint32_t n_aps, uint32_t quant_bits, uint64_t spread) {
             LocalizationConfig c;
             c.n_aps = n_aps;
             c.quant_bits = quant_bits;
             c.spread = spread;
             return c;
           }),
           py::arg("n_aps") = 4, py::arg("quant_bits") = 6,
           py::arg("spread") = 63)
      .def_readwrite("n_aps", &LocalizationConfig::n_aps)
      .def_readwrite("quant_bits", &LocalizationConfig::quant_bits)
      .def_readwrite("spread", &LocalizationConfig::spread)
      .def_readwrite("dbm_min", &LocalizationConfig::dbm_min)
      .def_readwrite("dbm_max", &LocalizationConfig::dbm_max)
      .def_property_readonly("dimension", &AugmentedDimension);

  m.def("quantize_rssi", &QuantizeRssi);
  m.def("augment_query", [](const std::vector<int64_t>& v,
                            const LocalizationConfig& c) {
    return AugmentQueryFingerprint(v, c).values;
  });
  m.def("augment_db_entry", [](const std::vector<int64_t>& w,
                               const LocalizationConfig& c) {
    return AugmentDbEntry(w, c).values;
  });
  m.def(
      "nearest_neighbors",
      [](const PublicParams& pp, const Ciphertext& ct,
         const std::vector<FunctionKey>& keys,
         const std::vector<uint64_t>& indices, size_t k) {
        const auto r = NearestNeighbors(pp, ct, keys, indices, k);
        return py::make_tuple(r.indices, r.distances);
      },
      py::arg("pp"), py::arg("ct"), py::arg("keys"), py::arg("indices"),
      py::arg("k"), "Returns (indices, distances), nearest first.");
}
