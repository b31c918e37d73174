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

// Compiles linear polynomials and linear characteristics into read-once
// quantum branching programs. Layout of basis index: branch * 2^l + targets,
// where the branch register holds log2(t) qubits and target qubit 1 is the
// most significant of the l target bits.

#include <array>
#include <bit>
#include <cmath>
#include <numbers>
#include <vector>

#include "qobdd/goodset.hpp"
#include "qobdd/polynomial.hpp"
#include "qobdd/qbp.hpp"

namespace qobdd {

/// 2x2 rotation about y that turns |0> into cos(h)|0> + sin(h)|1>; this is
/// R_y(2h).
inline std::array<Complex, 4> ry_half_angle(double half) {
  const double c = std::cos(half);
  const double s = std::sin(half);
  return {Complex(c), Complex(-s), Complex(s), Complex(c)};
}

/// H^{(x)log t} on the branch register, identity on `targets` target qubits.
inline UnitaryMatrix branch_hadamard(std::size_t t, std::size_t targets) {
  const std::size_t block = std::size_t{1} << targets;
  const double scale = 1.0 / std::sqrt(static_cast<double>(t));
  std::vector<UnitaryMatrix::Entry> entries;
  entries.reserve(t * t * block);
  for (std::size_t a = 0; a < t; ++a) {
    for (std::size_t b = 0; b < t; ++b) {
      const double sign = (std::popcount(a & b) & 1) ? -scale : scale;
      for (std::size_t s = 0; s < block; ++s) entries.push_back({a * block + s, b * block + s, sign});
    }
  }
  return UnitaryMatrix::from_entries(t * block, std::move(entries));
}

/// Block-diagonal operator: within branch i the target register undergoes
/// the tensor product over s of rotations with half-angles half_angles[i][s].
inline UnitaryMatrix branch_rotations(const std::vector<std::vector<double>> &half_angles,
                                      std::size_t targets) {
  const std::size_t t = half_angles.size();
  const std::size_t block = std::size_t{1} << targets;
  std::vector<UnitaryMatrix::Entry> entries;
  entries.reserve(t * block * block);
  std::vector<std::array<Complex, 4>> gates(targets);
  for (std::size_t i = 0; i < t; ++i) {
    for (std::size_t s = 0; s < targets; ++s) gates[s] = ry_half_angle(half_angles[i][s]);
    for (std::size_t r = 0; r < block; ++r) {
      for (std::size_t c = 0; c < block; ++c) {
        Complex v = 1.0;
        for (std::size_t s = 0; s < targets && v != Complex(0.0); ++s) {
          const std::size_t shift = targets - 1 - s;
          v *= gates[s][((r >> shift) & 1u) * 2 + ((c >> shift) & 1u)];
        }
        if (v != Complex(0.0)) entries.push_back({i * block + r, i * block + c, v});
      }
    }
  }
  return UnitaryMatrix::from_entries(t * block, std::move(entries));
}

struct SingleCompilation {
  LinearPolynomial polynomial;
  GoodSet good_set;
  QuantumBranchingProgram program;
};

struct GeneralCompilation {
  Characteristic characteristic;
  GoodSet good_set;
  QuantumBranchingProgram program;
};

namespace detail {

inline void check_compatible(const Modulus &m, const GoodSet &set) {
  if (!(m == set.modulus())) {
    throw ModulusMismatch("polynomial is over Z_" + m.str() + " but the good set over Z_" +
                          set.modulus().str());
  }
}

inline void check_power_of_two(const GoodSet &set) {
  if (!set.size_is_power_of_two()) {
    throw NonPowerOfTwoT("good set size " + std::to_string(set.size()) +
                         " is not a power of two");
  }
}

/// Half-angles scale * pi * ((k_i c) mod m)/m for each branch i and each
/// coefficient in `coeffs` (one per target qubit).
inline std::vector<std::vector<double>> half_angles(const GoodSet &set,
                                                    const std::vector<const BigInt *> &coeffs,
                                                    double scale) {
  std::vector<std::vector<double>> out(set.size(), std::vector<double>(coeffs.size()));
  for (std::size_t i = 0; i < set.size(); ++i) {
    for (std::size_t s = 0; s < coeffs.size(); ++s) {
      out[i][s] = scale * std::numbers::pi * unit_fraction(set[i] * *coeffs[s], set.modulus().value());
    }
  }
  return out;
}

}  // namespace detail

/// Single-polynomial fingerprint program of width 2t. Reading x_j = 1 rotates
/// the target by R_y(4 pi k_i c_j / m) inside branch i; the constant term and
/// a second Hadamard layer come last, and only |0...0>|0> accepts.
inline SingleCompilation compile_single(const LinearPolynomial &p, const GoodSet &set) {
  detail::check_compatible(p.modulus(), set);
  detail::check_power_of_two(set);
  const std::size_t t = set.size();
  const std::size_t d = 2 * t;
  const UnitaryMatrix identity = UnitaryMatrix::identity(d);
  std::vector<Instruction> instructions;
  instructions.reserve(p.arity());
  for (std::size_t j = 1; j <= p.arity(); ++j) {
    instructions.push_back(Instruction{
        j, identity, branch_rotations(detail::half_angles(set, {&p.coefficient(j)}, 2.0), 1)});
  }
  const UnitaryMatrix constant = branch_rotations(detail::half_angles(set, {&p.coefficient(0)}, 2.0), 1);
  UnitaryMatrix post = branch_hadamard(t, 1) * constant;
  QuantumBranchingProgram program(d, p.arity(), branch_hadamard(t, 1), std::move(instructions),
                                  std::move(post), StateVector::basis(d, 0), {0});
  return SingleCompilation{p, set, std::move(program)};
}

/// Characteristic fingerprint program of width t * 2^l. Target qubit s
/// carries cos(pi k_i g_s / m)|0> + sin(pi k_i g_s / m)|1> in branch i; the
/// final state is measured directly and accepted when all targets read 0.
inline GeneralCompilation compile_general(const Characteristic &chi, const GoodSet &set) {
  detail::check_compatible(chi.modulus(), set);
  detail::check_power_of_two(set);
  const std::size_t t = set.size();
  const std::size_t l = chi.size();
  const std::size_t block = std::size_t{1} << l;
  const std::size_t d = t * block;
  const UnitaryMatrix identity = UnitaryMatrix::identity(d);
  auto layer = [&](std::size_t j) {
    std::vector<const BigInt *> coeffs;
    for (const auto &g : chi.polynomials()) coeffs.push_back(&g.coefficient(j));
    return branch_rotations(detail::half_angles(set, coeffs, 1.0), l);
  };
  std::vector<Instruction> instructions;
  instructions.reserve(chi.arity());
  for (std::size_t j = 1; j <= chi.arity(); ++j) instructions.push_back(Instruction{j, identity, layer(j)});
  std::vector<std::size_t> accepting;
  for (std::size_t i = 0; i < t; ++i) accepting.push_back(i * block);
  QuantumBranchingProgram program(d, chi.arity(), branch_hadamard(t, l), std::move(instructions),
                                  layer(0), StateVector::basis(d, 0), std::move(accepting));
  return GeneralCompilation{chi, set, std::move(program)};
}

/// (1/t^2) (sum_i cos(2 pi k_i g(sigma) / m))^2.
inline double closed_form_single(const LinearPolynomial &p, const GoodSet &set, const Bits &sigma) {
  detail::check_compatible(p.modulus(), set);
  const BigInt g = evaluate_linear_value(p, sigma);
  if (g == 0) return 1.0;
  const double mean = set.cosine_total(g) / static_cast<double>(set.size());
  return mean * mean;
}

/// (1/t) sum_i prod_j cos^2(pi k_i g_j(sigma) / m).
inline double closed_form_general(const Characteristic &chi, const GoodSet &set, const Bits &sigma) {
  detail::check_compatible(chi.modulus(), set);
  std::vector<BigInt> values;
  for (const auto &g : chi.polynomials()) values.push_back(evaluate_linear_value(g, sigma));
  const BigInt &m = set.modulus().value();
  double total = 0.0;
  for (const auto &k : set.parameters()) {
    double term = 1.0;
    for (const auto &g : values) {
      const double c = std::cos(std::numbers::pi * unit_fraction(k * g, m));
      term *= c * c;
    }
    total += term;
  }
  return total / static_cast<double>(set.size());
}

/// Ceiling on false acceptance of the characteristic program for a good set.
inline double error_bound_general(double epsilon) {
  check_epsilon(epsilon);
  return 0.5 + std::sqrt(epsilon) / 2.0;
}

}  // namespace qobdd
