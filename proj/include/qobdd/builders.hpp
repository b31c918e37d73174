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

// Linear characteristic polynomials of MOD_m, EQ_n, Palindrome_n and PERM_n.

#include <vector>

#include "qobdd/polynomial.hpp"

namespace qobdd {

/// x_1 + ... + x_n over Z_m.
inline LinearPolynomial mod_polynomial(std::size_t n, const BigInt &m) {
  if (n < 1) throw InvalidArgument("MOD_m needs n >= 1");
  std::vector<BigInt> coeffs(n + 1, 1);
  coeffs[0] = 0;
  return LinearPolynomial(Modulus(m), std::move(coeffs));
}

/// sum x_i 2^{i-1} - sum y_i 2^{i-1} over Z_{2^n}. Arity 2n: x_1..x_n, then
/// y_1..y_n.
inline LinearPolynomial eq_polynomial(std::size_t n) {
  if (n < 1) throw InvalidArgument("EQ_n needs n >= 1");
  std::vector<BigInt> coeffs(2 * n + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    BigInt w = pow_big(BigInt(2), static_cast<unsigned>(i - 1));
    coeffs[i] = w;
    coeffs[n + i] = -w;
  }
  return LinearPolynomial(Modulus(pow_big(BigInt(2), static_cast<unsigned>(n))),
                          std::move(coeffs));
}

/// Compares x_1..x_h with x_n..x_{n-h+1} (h = floor(n/2)) over Z_{2^h}. For
/// odd n the middle coefficient reduces to zero.
inline LinearPolynomial palindrome_polynomial(std::size_t n) {
  if (n < 2) throw InvalidArgument("Palindrome_n needs n >= 2");
  const std::size_t half = n / 2;
  const std::size_t upper_start = (n + 1) / 2;
  std::vector<BigInt> coeffs(n + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    if (i <= half) coeffs[i] += pow_big(BigInt(2), static_cast<unsigned>(i - 1));
    if (i >= upper_start) coeffs[i] -= pow_big(BigInt(2), static_cast<unsigned>(n - i));
  }
  return LinearPolynomial(Modulus(pow_big(BigInt(2), static_cast<unsigned>(half))),
                          std::move(coeffs));
}

/// Permutation-matrix test on n^2 row-major variables over Z_{(n+1)^{2n}}:
/// row counts land in base-(n+1) digits 0..n-1, column counts in n..2n-1,
/// and the constant subtracts the all-ones digit pattern.
inline LinearPolynomial perm_polynomial(std::size_t n) {
  if (n < 1) throw InvalidArgument("PERM_n needs n >= 1");
  const BigInt base = BigInt(n + 1);
  std::vector<BigInt> coeffs(n * n + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      coeffs[(i - 1) * n + j] = pow_big(base, static_cast<unsigned>(i - 1)) +
                                pow_big(base, static_cast<unsigned>(n + j - 1));
    }
  }
  BigInt ones = 0;
  for (std::size_t i = 1; i <= 2 * n; ++i) ones += pow_big(base, static_cast<unsigned>(i - 1));
  coeffs[0] = -ones;
  return LinearPolynomial(Modulus(pow_big(base, static_cast<unsigned>(2 * n))),
                          std::move(coeffs));
}

}  // namespace qobdd
