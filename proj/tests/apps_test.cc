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

#include "fhipe/apps.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "fhipe/errors.h"
#include "json.hpp"
#include "oracle.h"

namespace fhipe {
namespace {

TEST(AppsTest, QuantBounds) {
  EXPECT_EQ(QuantBound(6, false), 63u);
  EXPECT_EQ(QuantBound(12, true), 2047u);
  EXPECT_THROW(QuantBound(0, false), InvalidArgumentError);
}

TEST(AppsTest, AugmentationIdentityIsExact) {
  LocalizationConfig config;
  config.n_aps = 2;
  const std::vector<int64_t> v = {1, 2}, w = {3, 1};
  const auto q = AugmentQueryFingerprint(v, config);
  const auto d = AugmentDbEntry(w, config);
  EXPECT_EQ(q.values, (std::vector<int64_t>{1, 1, 2, 5}));
  EXPECT_EQ(d.values, (std::vector<int64_t>{10, -6, -2, 1}));
  EXPECT_EQ(oracle::InnerProduct(q.values, d.values), 5);
}

TEST(AppsTest, AugmentationIdentityRandomized) {
  std::mt19937_64 gen(51);
  for (uint32_t n_aps : {1u, 4u, 8u, 20u}) {
    LocalizationConfig config;
    config.n_aps = n_aps;
    for (int t = 0; t < 200; ++t) {
      const auto v = oracle::RandomVector(gen, n_aps, 0, 63);
      const auto w = oracle::RandomVector(gen, n_aps, 0, 63);
      oracle::BigInt dist = 0;
      for (size_t j = 0; j < v.size(); ++j) {
        dist += oracle::BigInt(v[j] - w[j]) * (v[j] - w[j]);
      }
      EXPECT_EQ(oracle::InnerProduct(AugmentQueryFingerprint(v, config).values,
                                     AugmentDbEntry(w, config).values),
                dist);
    }
  }
}

TEST(AppsTest, AugmentationRejectsBadInput) {
  LocalizationConfig config;
  config.n_aps = 2;
  EXPECT_THROW(AugmentQueryFingerprint(std::vector<int64_t>{1}, config),
               InvalidArgumentError);
  EXPECT_THROW(AugmentDbEntry(std::vector<int64_t>{1, 64}, config),
               InvalidArgumentError);
  EXPECT_THROW(AugmentDbEntry(std::vector<int64_t>{-1, 0}, config),
               InvalidArgumentError);
}

TEST(AppsTest, LocalizationParameterChecks) {
  LocalizationConfig config;  // N = 4
  EXPECT_EQ(AugmentedDimension(config), 6u);
  PublicParams pp;
  pp.n = 6;
  pp.s = DlogParams::ForTableAlpha(64, false).bound;
  config.spread = 31;  // 4 * 961 = 3844 < 4096
  EXPECT_NO_THROW(ValidateLocalizationParams(config, pp));
  config.spread = 63;  // 15876 >= 4096
  EXPECT_THROW(ValidateLocalizationParams(config, pp), InvalidArgumentError);
  config.spread = 31;
  pp.n = 5;
  EXPECT_THROW(ValidateLocalizationParams(config, pp), InvalidArgumentError);
}

TEST(AppsTest, RssiQuantization) {
  LocalizationConfig config;
  EXPECT_EQ(QuantizeRssi(-100, config), 0);
  EXPECT_EQ(QuantizeRssi(-37, config), 63);
  EXPECT_EQ(QuantizeRssi(-70, config), 30);
  EXPECT_EQ(QuantizeRssi(-120, config), 0);
  EXPECT_EQ(QuantizeRssi(-10, config), 63);
}

TEST(AppsTest, DatabaseCsv) {
  const auto db = ParseFingerprintDatabase("# header\n0,1,2\n7, 3 ,4\n");
  EXPECT_EQ(db.n_aps, 2u);
  ASSERT_EQ(db.entries.size(), 2u);
  EXPECT_EQ(db.entries[1].index, 7u);
  EXPECT_EQ(db.entries[1].rssi, (std::vector<int64_t>{3, 4}));
  EXPECT_THROW(ParseFingerprintDatabase("0,1,2\n1,2\n"), FormatError);
  EXPECT_THROW(ParseFingerprintDatabase("0,1,x\n"), FormatError);
  EXPECT_THROW(ParseFingerprintDatabase("0,1,\n"), FormatError);
  EXPECT_THROW(ParseFingerprintDatabase(""), FormatError);
}

TEST(AppsTest, EncryptedNearestNeighborsMatchPlaintext) {
  SeededRandom rng(52);
  std::mt19937_64 gen(52);
  LocalizationConfig config;
  config.spread = 31;
  const auto setup = fhipe::Setup(6, 4096, false, rng);
  ValidateLocalizationParams(config, setup.pp);

  std::vector<std::vector<int64_t>> db;
  std::vector<FunctionKey> keys;
  std::vector<uint64_t> indices;
  for (uint64_t i = 0; i < 9; ++i) {
    db.push_back(oracle::RandomVector(gen, 4, 16, 47));
    keys.push_back(KeyGen(setup.msk, AugmentDbEntry(db.back(), config), rng));
    indices.push_back(i);
  }
  // The query duplicates entry 5, so that entry ranks first at distance 0.
  const auto query = db[5];
  const auto ct =
      Encrypt(setup.msk, AugmentQueryFingerprint(query, config), rng);
  const auto result = NearestNeighbors(setup.pp, ct, keys, indices, 9);

  std::vector<int64_t> plain;
  for (const auto& e : db) plain.push_back(PlainSquaredDistance(query, e));
  std::vector<uint64_t> order(9);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](uint64_t a, uint64_t b) { return plain[a] < plain[b]; });

  EXPECT_EQ(result.failures, 0u);
  EXPECT_EQ(result.indices, order);
  EXPECT_EQ(result.indices.front(), 5u);
  EXPECT_EQ(result.distances.front(), 0);
  for (size_t i = 0; i < 9; ++i) EXPECT_EQ(result.all_distances[i], plain[i]);

  const auto top2 = NearestNeighbors(setup.pp, ct, keys, indices, 2);
  EXPECT_EQ(top2.indices, std::vector<uint64_t>(order.begin(), order.begin() + 2));
}

TEST(AppsTest, TieBreakAndFailures) {
  SeededRandom rng(53);
  LocalizationConfig config;
  config.n_aps = 1;
  const auto setup = fhipe::Setup(3, 100, false, rng);
  // Entries 9 and 4 sit at the same distance from the query; 2 is too far.
  std::vector<FunctionKey> keys = {
      KeyGen(setup.msk, AugmentDbEntry(std::vector<int64_t>{12}, config), rng),
      KeyGen(setup.msk, AugmentDbEntry(std::vector<int64_t>{8}, config), rng),
      KeyGen(setup.msk, AugmentDbEntry(std::vector<int64_t>{40}, config), rng)};
  const std::vector<uint64_t> indices = {9, 4, 2};
  const auto ct = Encrypt(
      setup.msk, AugmentQueryFingerprint(std::vector<int64_t>{10}, config), rng);
  const auto r = NearestNeighbors(setup.pp, ct, keys, indices, 3);
  EXPECT_EQ(r.indices, (std::vector<uint64_t>{4, 9}));
  EXPECT_EQ(r.failures, 1u);
  EXPECT_FALSE(r.all_distances[2].has_value());

  const auto hidden = nlohmann::json::parse(NeighborResultToJson(r, false));
  EXPECT_FALSE(hidden.contains("distances"));
  EXPECT_EQ(hidden["indices"], nlohmann::json({4, 9}));
  const auto shown = nlohmann::json::parse(NeighborResultToJson(r, true));
  EXPECT_EQ(shown["distances"], nlohmann::json({4, 4}));
}

TEST(AppsTest, ClassifierBoundaryAndPlainDecision) {
  SeededRandom rng(54);
  const uint32_t n = 4;
  const auto setup = fhipe::Setup(n, 4 * 2047 * 63 + 1, true, rng);
  ClassifierModel model;
  model.weights = {{1, 0, 0, 0}, 2047, true};
  model.threshold = 17;
  ValidateClassifier(model, 63, setup.pp);
  const auto key = KeyGen(setup.msk, model.weights, rng);
  const PlainVector at_threshold{{17, 5, 6, 7}, 63, false};
  const PlainVector above{{18, 5, 6, 7}, 63, false};
  EXPECT_EQ(ClassifyEncrypted(setup.pp, key,
                              Encrypt(setup.msk, at_threshold, rng), 17),
            Class::kC0);
  EXPECT_EQ(ClassifyEncrypted(setup.pp, key, Encrypt(setup.msk, above, rng), 17),
            Class::kC1);
  EXPECT_EQ(ClassifyPlain(model.weights.values, at_threshold.values, 17),
            Class::kC0);
}

TEST(AppsTest, ClassifierRandomAgreement) {
  SeededRandom rng(55);
  std::mt19937_64 gen(55);
  const uint32_t n = 20;
  const auto setup = fhipe::Setup(n, uint64_t{n} * 2047 * 63 + 1, true, rng);
  for (int t = 0; t < 10; ++t) {
    ClassifierModel model;
    model.weights = {oracle::RandomVector(gen, n, -2047, 2047), 2047, true};
    model.threshold = oracle::RandomVector(gen, 1, -5000, 5000)[0];
    const PlainVector sample{oracle::RandomVector(gen, n, 0, 63), 63, false};
    ValidateClassifier(model, 63, setup.pp);
    EXPECT_EQ(ClassifyEncrypted(setup.pp, KeyGen(setup.msk, model.weights, rng),
                                Encrypt(setup.msk, sample, rng),
                                model.threshold),
              ClassifyPlain(model.weights.values, sample.values,
                            model.threshold));
  }
}

TEST(AppsTest, ClassifierValidation) {
  PublicParams pp;
  pp.n = 188;
  pp.is_signed = true;
  pp.s = DlogParams::ForTableAlpha(16384, true).bound;
  ClassifierModel model;
  model.weights = {std::vector<int64_t>(188, 0), 2047, true};
  EXPECT_NO_THROW(ValidateClassifier(model, 63, pp));
  EXPECT_EQ(pp.dlog_params().table_alpha, 16384u);
  pp.s = 188 * 2047 * 63;  // one short of the requirement
  EXPECT_THROW(ValidateClassifier(model, 63, pp), InvalidArgumentError);
  pp.n = 10;
  EXPECT_THROW(ValidateClassifier(model, 63, pp), InvalidArgumentError);
}

TEST(AppsTest, ModelFileParsing) {
  const auto model = ParseClassifierModel(
      "5\n-2047\n0\n", R"({"threshold": -12, "quant_bits": 12, "signed": true})");
  EXPECT_EQ(model.weights.values, (std::vector<int64_t>{5, -2047, 0}));
  EXPECT_EQ(model.threshold, -12);
  EXPECT_EQ(model.weights.bound, 2047u);
  EXPECT_THROW(ParseClassifierModel("5\n", "{"), FormatError);
  EXPECT_THROW(ParseClassifierModel("5\n", R"({"threshold": 1})"), FormatError);
  EXPECT_THROW(
      ParseClassifierModel(
          "4096\n", R"({"threshold": 0, "quant_bits": 12, "signed": true})"),
      InvalidArgumentError);
}

}  // namespace
}  // namespace fhipe
