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

#ifndef FHIPE_TOOLS_ALLOC_TRACKER_H_
#define FHIPE_TOOLS_ALLOC_TRACKER_H_

#include "fhipe/bench.h"

namespace fhipe::tools {

// Peak live heap bytes seen by the replaced global operator new since the
// last Reset(), net of what was live at the reset.
class AllocMemoryMeter final : public MemoryMeter {
 public:
  void Reset() override;
  uint64_t PeakBytes() override;
  std::string_view method() const override { return "alloc-peak"; }

 private:
  uint64_t baseline_ = 0;
};

}  // namespace fhipe::tools

#endif  // FHIPE_TOOLS_ALLOC_TRACKER_H_
