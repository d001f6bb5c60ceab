// Copyright 2026 The forumgame Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FORUMGAME_ERROR_H_
#define FORUMGAME_ERROR_H_

#include <stdexcept>
#include <string>

namespace forumgame {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid or contradictory configuration (caps, rounds, missing statistics).
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Malformed input data. Carries the 1-based line number when known.
class DataError : public Error {
 public:
  explicit DataError(const std::string& what, long line = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  long line() const { return line_; }

 private:
  long line_;
};

// Index or argument outside its valid domain.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Exhaustive search refused because the subset count exceeds the budget.
class InstanceTooLarge : public Error {
 public:
  using Error::Error;
};

// Subset-sum instance violates the preconditions of the bilinear reduction.
class ReductionInfeasible : public Error {
 public:
  using Error::Error;
};

// No usable decision threshold could be derived from validation data.
class CalibrationError : public Error {
 public:
  using Error::Error;
};

// A recovery-rate denominator is zero.
class UndefinedRateError : public Error {
 public:
  using Error::Error;
};

}  // namespace forumgame

#endif  // FORUMGAME_ERROR_H_
