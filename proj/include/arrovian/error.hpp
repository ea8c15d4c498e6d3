// Copyright 2026 The Arrovian Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace arrovian {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input: bad tables, size mismatches, parse errors.
class InputError : public Error {
 public:
  using Error::Error;
};

/// An exhaustive computation would exceed the enumeration guard.
class GuardError : public Error {
 public:
  using Error::Error;
};

/// A rule failed the axioms required by an operation (e.g. unanimity + IIA).
class NotArrovianError : public Error {
 public:
  using Error::Error;
};

/// A coalition map or filter violates a structural condition.
class ValidationError : public Error {
 public:
  using Error::Error;
};

}  // namespace arrovian
