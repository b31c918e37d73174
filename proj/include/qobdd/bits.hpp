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

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qobdd/errors.hpp"

namespace qobdd {

/// An input assignment sigma_1..sigma_n; element j-1 holds sigma_j (0 or 1).
using Bits = std::vector<std::uint8_t>;

inline Bits parse_bits(std::string_view text) {
  Bits bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw InvalidArgument("bit string may contain only 0 and 1: " +
                            std::string(text));
    }
    bits.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return bits;
}

inline std::string to_string(const Bits &bits) {
  std::string out;
  out.reserve(bits.size());
  for (auto b : bits) out.push_back(b ? '1' : '0');
  return out;
}

/// Reads index as an n-bit binary number, sigma_1 being the most significant bit.
inline Bits bits_from_index(std::uint64_t index, std::size_t n) {
  Bits bits(n);
  for (std::size_t j = 0; j < n; ++j) {
    bits[j] = static_cast<std::uint8_t>((index >> (n - 1 - j)) & 1u);
  }
  return bits;
}

inline std::uint64_t index_from_bits(const Bits &bits) {
  std::uint64_t index = 0;
  for (auto b : bits) index = (index << 1) | (b & 1u);
  return index;
}

}  // namespace qobdd
