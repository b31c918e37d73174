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

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>

#include "qobdd/errors.hpp"

namespace qobdd {

using BigInt = boost::multiprecision::cpp_int;

/// Parses a base-10 integer with an optional leading minus sign.
inline BigInt parse_bigint(std::string_view text) {
  if (text.empty()) throw InvalidArgument("empty integer literal");
  std::size_t pos = 0;
  bool negative = false;
  if (text[0] == '-' || text[0] == '+') {
    negative = text[0] == '-';
    pos = 1;
  }
  if (pos == text.size()) throw InvalidArgument("malformed integer literal");
  BigInt value = 0;
  for (; pos < text.size(); ++pos) {
    char c = text[pos];
    if (c < '0' || c > '9') {
      throw InvalidArgument("malformed integer literal: " + std::string(text));
    }
    value = value * 10 + (c - '0');
  }
  return negative ? BigInt(-value) : value;
}

inline std::string to_decimal(const BigInt &value) { return value.str(); }

inline BigInt pow_big(const BigInt &base, unsigned exponent) {
  return boost::multiprecision::pow(base, exponent);
}

/// Natural logarithm of a positive integer that may exceed the double range.
inline double log_big(const BigInt &value) {
  if (value <= 0) throw InvalidArgument("log of non-positive integer");
  const unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(value)) + 1;
  if (bits <= 1000) return std::log(value.convert_to<double>());
  const unsigned shift = bits - 64;
  const BigInt head = value >> shift;
  return std::log(head.convert_to<double>()) + shift * std::log(2.0);
}

/// The ring Z_m. Immutable; value is at least 2.
class Modulus {
 public:
  explicit Modulus(BigInt value) : value_(std::move(value)) {
    if (value_ < 2) {
      throw InvalidModulus("modulus must be at least 2, got " + value_.str());
    }
  }
  Modulus(std::int64_t value) : Modulus(BigInt(value)) {}  // NOLINT

  const BigInt &value() const { return value_; }
  std::string str() const { return value_.str(); }

  /// Fits in 32 bits, so products of two residues fit in 64.
  bool is_small() const { return value_ <= 0xffffffffu; }

  friend bool operator==(const Modulus &a, const Modulus &b) {
    return a.value_ == b.value_;
  }

 private:
  BigInt value_;
};

/// A canonical representative in [0, m).
class Residue {
 public:
  Residue(BigInt value, Modulus modulus)
      : value_(std::move(value)), modulus_(std::move(modulus)) {
    if (value_ < 0 || value_ >= modulus_.value()) {
      throw InvalidModulus("residue " + value_.str() + " outside [0, " +
                           modulus_.str() + ")");
    }
  }

  const BigInt &value() const { return value_; }
  const Modulus &modulus() const { return modulus_; }
  bool is_zero() const { return value_ == 0; }

  friend bool operator==(const Residue &a, const Residue &b) {
    return a.value_ == b.value_ && a.modulus_ == b.modulus_;
  }

 private:
  BigInt value_;
  Modulus modulus_;
};

/// Canonical value of x in [0, m).
inline BigInt reduce_value(const BigInt &x, const BigInt &m) {
  BigInt r = x % m;
  if (r < 0) r += m;
  return r;
}

inline Residue reduce(const BigInt &x, const Modulus &m) {
  return Residue(reduce_value(x, m.value()), m);
}

/// (x mod m) / m in double precision, with the reduction done exactly.
inline double unit_fraction(const BigInt &x, const BigInt &m) {
  const BigInt r = reduce_value(x, m);
  if (r == 0) return 0.0;
  const unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(m)) + 1;
  if (bits <= 1000) return r.convert_to<double>() / m.convert_to<double>();
  const unsigned shift = bits - 64;
  return (r >> shift).convert_to<double>() / (m >> shift).convert_to<double>();
}

}  // namespace qobdd
