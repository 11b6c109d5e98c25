// Copyright 2026 The qseries Authors
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

#ifndef QSERIES_ERRORS_HPP
#define QSERIES_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qseries {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands live in different coefficient rings.
class RingMismatchError : public Error {
 public:
  using Error::Error;
};

// A coefficient was requested at or beyond the trusted precision, or an
// operation would need more precision than its input carries.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

// Division by a series whose lowest coefficient is not a unit.
class NonUnitError : public Error {
 public:
  using Error::Error;
};

// A rational coefficient could not be mapped into the target ring.
class IntegralityError : public Error {
 public:
  using Error::Error;
};

// A precondition on the arguments of an operation was violated.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

}  // namespace qseries

#endif  // QSERIES_ERRORS_HPP
