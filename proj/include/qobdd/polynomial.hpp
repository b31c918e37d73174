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

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qobdd/bits.hpp"
#include "qobdd/modular.hpp"

namespace qobdd {

/// g = c_0 + c_1 x_1 + ... + c_n x_n over Z_m, coefficients kept canonical.
class LinearPolynomial {
 public:
  /// coefficients[0] is the constant term; any integers, reduced on entry.
  LinearPolynomial(Modulus modulus, std::vector<BigInt> coefficients)
      : modulus_(std::move(modulus)), coeffs_(std::move(coefficients)) {
    if (coeffs_.size() < 2) {
      throw InvalidArgument("linear polynomial needs arity >= 1");
    }
    for (auto &c : coeffs_) c = reduce_value(c, modulus_.value());
  }

  const Modulus &modulus() const { return modulus_; }
  std::size_t arity() const { return coeffs_.size() - 1; }

  /// Coefficient of x_j for j in [1, n]; j = 0 is the constant term.
  const BigInt &coefficient(std::size_t j) const { return coeffs_.at(j); }
  Residue residue(std::size_t j) const { return Residue(coeffs_.at(j), modulus_); }
  const std::vector<BigInt> &coefficients() const { return coeffs_; }

  friend bool operator==(const LinearPolynomial &a, const LinearPolynomial &b) {
    return a.modulus_ == b.modulus_ && a.coeffs_ == b.coeffs_;
  }

 private:
  Modulus modulus_;
  std::vector<BigInt> coeffs_;
};

inline void check_length(const Bits &sigma, std::size_t arity) {
  if (sigma.size() != arity) {
    throw LengthMismatch("input has " + std::to_string(sigma.size()) +
                         " bits, expected " + std::to_string(arity));
  }
}

inline BigInt evaluate_linear_value(const LinearPolynomial &p, const Bits &sigma) {
  check_length(sigma, p.arity());
  BigInt sum = p.coefficient(0);
  for (std::size_t j = 1; j <= p.arity(); ++j) {
    if (sigma[j - 1]) sum += p.coefficient(j);
  }
  return reduce_value(sum, p.modulus().value());
}

inline Residue evaluate_linear(const LinearPolynomial &p, const Bits &sigma) {
  return Residue(evaluate_linear_value(p, sigma), p.modulus());
}

/// A monomial coefficient * prod_{j in vars} x_j; vars sorted, 1-based.
struct Monomial {
  BigInt coefficient;
  std::vector<std::size_t> vars;
};

/// Sum of multilinear monomials, merged by variable set. Zero terms are
/// dropped so equal polynomials compare equal.
class MultilinearPolynomial {
 public:
  MultilinearPolynomial(Modulus modulus, std::size_t arity,
                        std::vector<Monomial> monomials = {})
      : modulus_(std::move(modulus)), arity_(arity) {
    std::map<std::vector<std::size_t>, BigInt> merged;
    for (auto &m : monomials) {
      auto vars = m.vars;
      std::sort(vars.begin(), vars.end());
      if (std::adjacent_find(vars.begin(), vars.end()) != vars.end()) {
        throw InvalidArgument("monomial repeats a variable");
      }
      for (auto v : vars) {
        if (v < 1 || v > arity_) {
          throw InvalidArgument("monomial variable " + std::to_string(v) +
                                " outside [1, " + std::to_string(arity_) + "]");
        }
      }
      merged[vars] += m.coefficient;
    }
    for (auto &[vars, coeff] : merged) {
      BigInt c = reduce_value(coeff, modulus_.value());
      if (c != 0) monomials_.push_back(Monomial{std::move(c), vars});
    }
  }

  const Modulus &modulus() const { return modulus_; }
  std::size_t arity() const { return arity_; }
  const std::vector<Monomial> &monomials() const { return monomials_; }

  std::size_t degree() const {
    std::size_t d = 0;
    for (const auto &m : monomials_) d = std::max(d, m.vars.size());
    return d;
  }

  friend bool operator==(const MultilinearPolynomial &a,
                         const MultilinearPolynomial &b) {
    if (!(a.modulus_ == b.modulus_) || a.arity_ != b.arity_ ||
        a.monomials_.size() != b.monomials_.size()) {
      return false;
    }
    for (std::size_t i = 0; i < a.monomials_.size(); ++i) {
      if (a.monomials_[i].vars != b.monomials_[i].vars ||
          a.monomials_[i].coefficient != b.monomials_[i].coefficient) {
        return false;
      }
    }
    return true;
  }

 private:
  Modulus modulus_;
  std::size_t arity_;
  std::vector<Monomial> monomials_;
};

inline Residue evaluate_multilinear(const MultilinearPolynomial &p,
                                    const Bits &sigma) {
  check_length(sigma, p.arity());
  BigInt sum = 0;
  for (const auto &m : p.monomials()) {
    bool on = std::all_of(m.vars.begin(), m.vars.end(),
                          [&](std::size_t v) { return sigma[v - 1] != 0; });
    if (on) sum += m.coefficient;
  }
  return reduce(sum, p.modulus());
}

/// Degree-1 multilinear polynomials convert to linear ones; nullopt otherwise.
inline std::optional<LinearPolynomial> as_linear(const MultilinearPolynomial &p) {
  if (p.degree() > 1 || p.arity() == 0) return std::nullopt;
  std::vector<BigInt> coeffs(p.arity() + 1, 0);
  for (const auto &m : p.monomials()) {
    coeffs[m.vars.empty() ? 0 : m.vars.front()] = m.coefficient;
  }
  return LinearPolynomial(p.modulus(), std::move(coeffs));
}

/// A nonempty family of linear polynomials sharing modulus and arity; all of
/// them vanish exactly on the accepted inputs.
class Characteristic {
 public:
  explicit Characteristic(std::vector<LinearPolynomial> polynomials)
      : polys_(std::move(polynomials)) {
    if (polys_.empty()) throw InvalidArgument("characteristic must be nonempty");
    for (const auto &p : polys_) {
      if (!(p.modulus() == polys_.front().modulus())) {
        throw ModulusMismatch("characteristic polynomials disagree on modulus");
      }
      if (p.arity() != polys_.front().arity()) {
        throw InvalidArgument("characteristic polynomials disagree on arity");
      }
    }
  }

  const Modulus &modulus() const { return polys_.front().modulus(); }
  std::size_t arity() const { return polys_.front().arity(); }
  std::size_t size() const { return polys_.size(); }
  const LinearPolynomial &operator[](std::size_t i) const { return polys_.at(i); }
  const std::vector<LinearPolynomial> &polynomials() const { return polys_; }

 private:
  std::vector<LinearPolynomial> polys_;
};

enum class Polarity { kPositive, kNegated };

struct Literal {
  std::size_t variable;  // 1-based
  Polarity polarity;
};

/// K_1 v ... v K_l, each K_i a conjunction of literals.
class SOPFormula {
 public:
  SOPFormula(std::size_t arity, std::vector<std::vector<Literal>> products)
      : arity_(arity), products_(std::move(products)) {
    if (arity_ == 0) throw InvalidArgument("formula arity must be positive");
    for (const auto &product : products_) {
      if (product.empty()) throw InvalidArgument("empty product in formula");
      std::vector<std::size_t> seen;
      for (const auto &lit : product) {
        if (lit.variable < 1 || lit.variable > arity_) {
          throw InvalidArgument("literal variable out of range");
        }
        seen.push_back(lit.variable);
      }
      std::sort(seen.begin(), seen.end());
      if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
        throw InvalidArgument("variable repeated within a product");
      }
    }
  }

  std::size_t arity() const { return arity_; }
  const std::vector<std::vector<Literal>> &products() const { return products_; }

 private:
  std::size_t arity_;
  std::vector<std::vector<Literal>> products_;
};

/// Replaces each negated literal by (1 - x_j), multiplies out every product
/// and sums them over Z_{2^n}. Given an SOP of not-f, the result vanishes
/// exactly where f holds.
inline MultilinearPolynomial sop_to_polynomial(const SOPFormula &sop_of_negation) {
  const std::size_t n = sop_of_negation.arity();
  Modulus modulus(pow_big(BigInt(2), static_cast<unsigned>(n)));
  std::vector<Monomial> terms;
  for (const auto &product : sop_of_negation.products()) {
    std::vector<std::size_t> positive, negated;
    for (const auto &lit : product) {
      (lit.polarity == Polarity::kPositive ? positive : negated).push_back(lit.variable);
    }
    // prod_{p} x_p * prod_{q} (1 - x_q) = sum_{S subset negated} (-1)^|S| x_{P u S}
    const std::size_t subsets = std::size_t{1} << negated.size();
    for (std::size_t mask = 0; mask < subsets; ++mask) {
      std::vector<std::size_t> vars = positive;
      int sign = 1;
      for (std::size_t b = 0; b < negated.size(); ++b) {
        if (mask & (std::size_t{1} << b)) {
          vars.push_back(negated[b]);
          sign = -sign;
        }
      }
      terms.push_back(Monomial{BigInt(sign), std::move(vars)});
    }
  }
  return MultilinearPolynomial(std::move(modulus), n, std::move(terms));
}

/// One full minterm per row where the table is 1. Row r encodes sigma with
/// sigma_1 as the most significant bit.
inline SOPFormula truth_table_to_sop(const std::vector<bool> &negation_table) {
  const std::size_t rows = negation_table.size();
  if (rows < 2 || (rows & (rows - 1)) != 0) {
    throw InvalidArgument("truth table length must be a power of two >= 2");
  }
  std::size_t n = 0;
  while ((std::size_t{1} << n) < rows) ++n;
  std::vector<std::vector<Literal>> products;
  for (std::size_t row = 0; row < rows; ++row) {
    if (!negation_table[row]) continue;
    std::vector<Literal> minterm;
    for (std::size_t j = 1; j <= n; ++j) {
      bool set = (row >> (n - j)) & 1u;
      minterm.push_back({j, set ? Polarity::kPositive : Polarity::kNegated});
    }
    products.push_back(std::move(minterm));
  }
  return SOPFormula(n, std::move(products));
}

}  // namespace qobdd
