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

#ifndef FHIPE_MULTIPAIRING_H_
#define FHIPE_MULTIPAIRING_H_

#include <optional>
#include <span>
#include <string_view>

#include "fhipe/pairing.h"

namespace fhipe {

// How the product of n pairings is evaluated. All strategies return the
// same element; they differ only in how much work they share.
enum class MultiPairingStrategy {
  kNaiveProduct,  // n full pairings, n-1 GT multiplications
  kSharedFe,      // n Miller loops, accumulators multiplied, one FE
  kSharedMlFe,    // one merged Miller loop over all pairs, one FE
};

// Upper bound on pairs per merged Miller loop call. Longer lists are split
// into chunks whose accumulators are multiplied before the single FE.
inline constexpr size_t kMaxMergedMillerPairs = 64;

// "naive", "shared-fe", "shared-ml-fe".
std::string_view StrategyName(MultiPairingStrategy s);
std::optional<MultiPairingStrategy> ParseStrategy(std::string_view name);

// prod_j e(P_j, Q_j). Throws InvalidArgumentError on an empty list or an
// identity point.
GtElement MultiPairing(std::span<const PairingInput> pairs,
                       MultiPairingStrategy strategy =
                           MultiPairingStrategy::kSharedMlFe);

}  // namespace fhipe

#endif  // FHIPE_MULTIPAIRING_H_
