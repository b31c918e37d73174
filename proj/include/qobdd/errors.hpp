// Copyright 2026 The qobdd Authors
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

namespace qobdd {

/// Base class for every error raised by the library.
class QobddError : public std::runtime_error {
 public:
  explicit QobddError(const std::string &what) : std::runtime_error(what) {}
};

/// A bit string does not match the arity it is evaluated against.
class LengthMismatch : public QobddError {
 public:
  using QobddError::QobddError;
};

/// Modulus below 2, or a residue paired with the wrong modulus.
class InvalidModulus : public QobddError {
 public:
  using QobddError::QobddError;
};

class ModulusMismatch : public QobddError {
 public:
  using QobddError::QobddError;
};

/// Error rate outside the open interval (0, 1).
class InvalidError : public QobddError {
 public:
  using QobddError::QobddError;
};

/// Goodness is undefined for b = 0 mod m.
class ZeroB : public QobddError {
 public:
  using QobddError::QobddError;
};

/// A requested exhaustive enumeration exceeds its tractability guard.
class TooLarge : public QobddError {
 public:
  using QobddError::QobddError;
};

class NonPowerOfTwoT : public QobddError {
 public:
  using QobddError::QobddError;
};

class InvalidArgument : public QobddError {
 public:
  using QobddError::QobddError;
};

class InvalidGroup : public QobddError {
 public:
  using QobddError::QobddError;
};

class NotSubgroup : public QobddError {
 public:
  using QobddError::QobddError;
};

class NotNormal : public QobddError {
 public:
  using QobddError::QobddError;
};

}  // namespace qobdd
