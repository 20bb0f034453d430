/*
 * Copyright 2026 The SEBQ Authors.
 *
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

#ifndef SEBQ_ERRORS_H_
#define SEBQ_ERRORS_H_

#include <stdexcept>
#include <string>

namespace sebq {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition on an argument (range, length, parameter guard) failed.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Table shape or symbol range is wrong, independent of the Latin property.
class StructuralError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

// A table is well formed but some row or column repeats a symbol.
class LatinPropertyError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class PaddingError : public Error {
 public:
  using Error::Error;
};

class FrameError : public Error {
 public:
  enum class Reason { kBadMagic, kBadVersion, kTruncated, kInconsistent };

  FrameError(Reason reason, const std::string& what)
      : Error(what), reason_(reason) {}

  Reason reason() const { return reason_; }

 private:
  Reason reason_;
};

// An adversary broke a rule of the security experiment it is playing.
class QueryViolation : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public QueryViolation {
 public:
  using QueryViolation::QueryViolation;
};

// The oracle was configured in a way the requested attack cannot use.
class UnsupportedConfiguration : public Error {
 public:
  using Error::Error;
};

}  // namespace sebq

#endif  // SEBQ_ERRORS_H_
