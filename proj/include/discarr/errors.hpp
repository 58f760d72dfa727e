// Copyright 2026 The Authors.
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

#pragma once

#include <stdexcept>
#include <string>

namespace discarr {

// Base of every error raised by the library. The CLI maps the subclasses
// onto exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Shape mismatch: non-square determinant, wrong vector length, wrong |L|.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Zero vectors, dependent point sets, vanishing minors.
class DegenerateInput : public Error {
 public:
  using Error::Error;
};

// Two quadratic scalars with different radicands met in one operation.
class FieldMismatch : public Error {
 public:
  using Error::Error;
};

// An arrangement failed the genericity predicate where it was required.
class NonGeneric : public Error {
 public:
  using Error::Error;
};

// Caller broke an operation's precondition (unknown label, VG passed where
// NVG is required, ...).
class ContractViolation : public Error {
 public:
  using Error::Error;
};

// Malformed text or file content.
class ParseError : public Error {
 public:
  using Error::Error;
};

// A generator could not produce a valid instance within its retry cap, or
// was asked for an unsupported parameter.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

// An inequality that holds for every minimal non-very generic intersection
// was observed to fail. Always an arithmetic bug; the message carries the
// full witness.
class TheoremViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace discarr
