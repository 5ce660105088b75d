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

#include "fhipe/multipairing.h"

#include <algorithm>

#include "fhipe/errors.h"

namespace fhipe {

std::string_view StrategyName(MultiPairingStrategy s) {
  switch (s) {
    case MultiPairingStrategy::kNaiveProduct:
      return "naive";
    case MultiPairingStrategy::kSharedFe:
      return "shared-fe";
    case MultiPairingStrategy::kSharedMlFe:
      return "shared-ml-fe";
  }
  return "unknown";
}

std::optional<MultiPairingStrategy> ParseStrategy(std::string_view name) {
  for (auto s : {MultiPairingStrategy::kNaiveProduct,
                 MultiPairingStrategy::kSharedFe,
                 MultiPairingStrategy::kSharedMlFe}) {
    if (StrategyName(s) == name) return s;
  }
  return std::nullopt;
}

GtElement MultiPairing(std::span<const PairingInput> pairs,
                       MultiPairingStrategy strategy) {
  if (pairs.empty()) {
    throw InvalidArgumentError("multi-pairing needs at least one pair");
  }
  internal::CountOp(&OpCounts::multi_pairings);
  internal::CountOp(&OpCounts::multi_pairing_pairs, pairs.size());

  switch (strategy) {
    case MultiPairingStrategy::kNaiveProduct: {
      GtElement acc = Pairing(pairs[0].p, pairs[0].q);
      for (size_t j = 1; j < pairs.size(); ++j) {
        acc = GtMul(acc, Pairing(pairs[j].p, pairs[j].q));
      }
      return acc;
    }
    case MultiPairingStrategy::kSharedFe: {
      MillerAccumulator acc = MillerLoop(pairs.subspan(0, 1));
      for (size_t j = 1; j < pairs.size(); ++j) {
        acc = MulAccumulators(acc, MillerLoop(pairs.subspan(j, 1)));
      }
      return FinalExponentiation(acc);
    }
    case MultiPairingStrategy::kSharedMlFe: {
      const size_t first = std::min(pairs.size(), kMaxMergedMillerPairs);
      MillerAccumulator acc = MillerLoop(pairs.subspan(0, first));
      for (size_t start = first; start < pairs.size();
           start += kMaxMergedMillerPairs) {
        const size_t len = std::min(kMaxMergedMillerPairs, pairs.size() - start);
        acc = MulAccumulators(acc, MillerLoop(pairs.subspan(start, len)));
      }
      return FinalExponentiation(acc);
    }
  }
  throw InvalidArgumentError("unknown multi-pairing strategy");
}

}  // namespace fhipe
