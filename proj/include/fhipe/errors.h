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

#ifndef FHIPE_ERRORS_H_
#define FHIPE_ERRORS_H_

#include <stdexcept>
#include <string>

namespace fhipe {

// Base class of every exception thrown by the library. Protocol outcomes
// such as an out-of-range inner product are return values, never errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Violated precondition: bad dimension, bound overflow, bad parameter.
class InvalidArgumentError : public Error {
 public:
  using Error::Error;
};

class SingularMatrixError : public Error {
 public:
  using Error::Error;
};

// The randomness source produced a degenerate value more often than any
// working generator plausibly would.
class RngFailureError : public Error {
 public:
  using Error::Error;
};

class PointDecodeError : public Error {
 public:
  enum class Reason { kBadLength, kBadEncoding, kNotOnCurve, kNotInSubgroup };

  PointDecodeError(Reason reason, const std::string& what)
      : Error(what), reason_(reason) {}

  Reason reason() const { return reason_; }

 private:
  Reason reason_;
};

// Malformed file or text input (bad header, truncation, parse failure).
class FormatError : public Error {
 public:
  using Error::Error;
};

// File system failure while reading or writing an artifact.
class IoError : public Error {
 public:
  using Error::Error;
};

// A decoded structure failed its algebraic self-check.
class IntegrityError : public Error {
 public:
  using Error::Error;
};

}  // namespace fhipe

#endif  // FHIPE_ERRORS_H_
