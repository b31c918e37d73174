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

// Hidden Subgroup Function: finite groups given by Cayley tables, normal
// subgroups, coset decompositions and the two-polynomial characteristic.

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qobdd/fingerprint.hpp"

namespace qobdd {

using Element = std::size_t;

/// A finite group over elements 0..N-1 given by its multiplication table.
class FiniteGroup {
 public:
  /// Associativity is checked exhaustively for N <= 64.
  explicit FiniteGroup(std::vector<std::vector<Element>> cayley) : table_(std::move(cayley)) {
    const std::size_t n = table_.size();
    if (n == 0) throw InvalidGroup("group must be nonempty");
    for (const auto &row : table_) {
      if (row.size() != n) throw InvalidGroup("Cayley table must be square");
      std::vector<char> seen(n, 0);
      for (auto x : row) {
        if (x >= n) throw InvalidGroup("Cayley table entry out of range");
        if (seen[x]++) throw InvalidGroup("Cayley table row is not a permutation");
      }
    }
    for (std::size_t c = 0; c < n; ++c) {
      std::vector<char> seen(n, 0);
      for (std::size_t r = 0; r < n; ++r) {
        if (seen[table_[r][c]]++) throw InvalidGroup("Cayley table column is not a permutation");
      }
    }
    bool found = false;
    for (Element e = 0; e < n && !found; ++e) {
      bool neutral = true;
      for (Element x = 0; x < n && neutral; ++x) neutral = table_[e][x] == x && table_[x][e] == x;
      if (neutral) {
        identity_ = e;
        found = true;
      }
    }
    if (!found) throw InvalidGroup("no identity element");
    inverse_.assign(n, 0);
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        if (table_[a][b] == identity_) inverse_[a] = b;
      }
      if (table_[inverse_[a]][a] != identity_) throw InvalidGroup("element without two-sided inverse");
    }
    if (n <= 64) {
      for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b)
          for (Element c = 0; c < n; ++c)
            if (table_[table_[a][b]][c] != table_[a][table_[b][c]]) {
              throw InvalidGroup("operation is not associative");
            }
    }
  }

  /// Z_N under addition.
  static FiniteGroup cyclic(std::size_t order) {
    if (order == 0) throw InvalidGroup("group order must be positive");
    std::vector<std::vector<Element>> table(order, std::vector<Element>(order));
    for (Element a = 0; a < order; ++a)
      for (Element b = 0; b < order; ++b) table[a][b] = (a + b) % order;
    return FiniteGroup(std::move(table));
  }

  std::size_t order() const { return table_.size(); }
  Element identity() const { return identity_; }
  Element op(Element a, Element b) const { return table_[a][b]; }
  Element inverse(Element a) const { return inverse_[a]; }
  const std::vector<std::vector<Element>> &table() const { return table_; }

 private:
  std::vector<std::vector<Element>> table_;
  Element identity_ = 0;
  std::vector<Element> inverse_;
};

/// A subgroup K with aK = Ka for every a.
class NormalSubgroup {
 public:
  NormalSubgroup(const FiniteGroup &group, std::vector<Element> elements)
      : elements_(std::move(elements)) {
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
    const std::size_t n = group.order();
    std::vector<char> member(n, 0);
    for (auto e : elements_) {
      if (e >= n) throw NotSubgroup("subgroup element out of range");
      member[e] = 1;
    }
    if (elements_.empty() || !member[group.identity()]) {
      throw NotSubgroup("subgroup must contain the identity");
    }
    for (auto a : elements_) {
      if (!member[group.inverse(a)]) throw NotSubgroup("subgroup is not closed under inverse");
      for (auto b : elements_) {
        if (!member[group.op(a, b)]) throw NotSubgroup("subgroup is not closed under the operation");
      }
    }
    for (Element a = 0; a < n; ++a) {
      std::vector<Element> left, right;
      for (auto k : elements_) {
        left.push_back(group.op(a, k));
        right.push_back(group.op(k, a));
      }
      std::sort(left.begin(), left.end());
      std::sort(right.begin(), right.end());
      if (left != right) {
        throw NotNormal("subgroup is not normal: cosets of element " + std::to_string(a) + " differ");
      }
    }
  }

  /// The cyclic subgroup generated by one element.
  static NormalSubgroup generated_by(const FiniteGroup &group, Element generator) {
    if (generator >= group.order()) throw NotSubgroup("generator out of range");
    std::vector<Element> elements{group.identity()};
    for (Element x = generator; x != group.identity(); x = group.op(x, generator)) elements.push_back(x);
    return NormalSubgroup(group, std::move(elements));
  }

  std::size_t size() const { return elements_.size(); }
  const std::vector<Element> &elements() const { return elements_; }

 private:
  std::vector<Element> elements_;
};

/// Cosets ordered by their smallest element, each listed in ascending order.
/// Position 0 of each coset is its representative.
struct CosetDecomposition {
  std::vector<std::vector<Element>> cosets;
  std::vector<std::size_t> coset_of;     // element -> coset index a
  std::vector<std::size_t> position_of;  // element -> position q within its coset
};

inline CosetDecomposition coset_decomposition(const FiniteGroup &group, const NormalSubgroup &subgroup) {
  const std::size_t n = group.order();
  CosetDecomposition out;
  out.coset_of.assign(n, n);
  out.position_of.assign(n, 0);
  for (Element a = 0; a < n; ++a) {
    if (out.coset_of[a] != n) continue;
    std::vector<Element> coset;
    for (auto k : subgroup.elements()) coset.push_back(group.op(a, k));
    std::sort(coset.begin(), coset.end());
    for (std::size_t q = 0; q < coset.size(); ++q) {
      out.coset_of[coset[q]] = out.cosets.size();
      out.position_of[coset[q]] = q;
    }
    out.cosets.push_back(std::move(coset));
  }
  return out;
}

/// Validates normality first; throws NotNormal (or NotSubgroup) on failure.
inline CosetDecomposition coset_decomposition(const FiniteGroup &group,
                                              const std::vector<Element> &subgroup) {
  return coset_decomposition(group, NormalSubgroup(group, subgroup));
}

/// HSF on n = |G| * ceil(log2 (G:K)) input bits. Element e's value occupies
/// bits e*w+1 .. e*w+w, most significant first, and encodes value - 1.
class HsfInstance {
 public:
  HsfInstance(FiniteGroup group, NormalSubgroup subgroup)
      : group_(std::move(group)),
        subgroup_(std::move(subgroup)),
        cosets_(coset_decomposition(group_, subgroup_)) {
    index_ = cosets_.cosets.size();
    if (index_ < 2) throw InvalidArgument("HSF needs index (G:K) >= 2");
    bits_ = ceil_log2(index_);
    arity_ = group_.order() * bits_;
  }

  const FiniteGroup &group() const { return group_; }
  const NormalSubgroup &subgroup() const { return subgroup_; }
  const CosetDecomposition &cosets() const { return cosets_; }
  std::size_t index() const { return index_; }
  std::size_t bits_per_value() const { return bits_; }
  std::size_t arity() const { return arity_; }

  /// 1-based input variable holding bit `bit` (0 = most significant) of
  /// element e's value.
  std::size_t variable(Element e, std::size_t bit) const { return e * bits_ + bit + 1; }

 private:
  FiniteGroup group_;
  NormalSubgroup subgroup_;
  CosetDecomposition cosets_;
  std::size_t index_ = 0;
  std::size_t bits_ = 0;
  std::size_t arity_ = 0;
};

/// Values chi_e in [1, r], or nullopt when some block decodes past r.
inline std::optional<std::vector<std::size_t>> decode_input(const HsfInstance &inst, const Bits &sigma) {
  check_length(sigma, inst.arity());
  const std::size_t w = inst.bits_per_value();
  std::vector<std::size_t> values(inst.group().order());
  for (Element e = 0; e < values.size(); ++e) {
    std::size_t block = 0;
    for (std::size_t b = 0; b < w; ++b) block = (block << 1) | sigma[e * w + b];
    if (block >= inst.index()) return std::nullopt;
    values[e] = block + 1;
  }
  return values;
}

/// Inverse of decode_input; accepts any value in [1, 2^w] so that promise
/// violations can be encoded too.
inline Bits encode_input(const HsfInstance &inst, const std::vector<std::size_t> &values) {
  if (values.size() != inst.group().order()) throw LengthMismatch("one value per group element expected");
  const std::size_t w = inst.bits_per_value();
  Bits sigma(inst.arity());
  for (Element e = 0; e < values.size(); ++e) {
    if (values[e] < 1 || values[e] > (std::size_t{1} << w)) throw InvalidArgument("value does not fit the block width");
    const std::size_t block = values[e] - 1;
    for (std::size_t b = 0; b < w; ++b) sigma[e * w + b] = static_cast<std::uint8_t>((block >> (w - 1 - b)) & 1u);
  }
  return sigma;
}

/// Valid decoding and exactly (G:K) distinct values.
inline bool satisfies_promise(const HsfInstance &inst, const Bits &sigma) {
  const auto values = decode_input(inst, sigma);
  if (!values) return false;
  return std::set<std::size_t>(values->begin(), values->end()).size() == inst.index();
}

/// 1 iff sigma decodes, chi is constant on every coset and distinct across
/// cosets.
inline bool hsf_eval(const HsfInstance &inst, const Bits &sigma) {
  const auto values = decode_input(inst, sigma);
  if (!values) return false;
  std::set<std::size_t> coset_values;
  for (const auto &coset : inst.cosets().cosets) {
    const std::size_t v = (*values)[coset.front()];
    for (auto e : coset) {
      if ((*values)[e] != v) return false;
    }
    coset_values.insert(v);
  }
  return coset_values.size() == inst.index();
}

/// {g1, g2} over Z_{2^n}. g1 weights each cyclic within-coset difference
/// chi_{a,q} - chi_{a,q-1} by 2^{(|K|a+q)w}; g2 is the representatives' sum
/// minus r(r+1)/2. Each chi expands into its bits plus the constant 1.
inline Characteristic hsf_characteristic(const HsfInstance &inst) {
  const std::size_t n = inst.arity();
  const std::size_t w = inst.bits_per_value();
  const std::size_t ksize = inst.subgroup().size();
  const std::size_t r = inst.index();
  const Modulus modulus(pow_big(BigInt(2), static_cast<unsigned>(n)));
  const auto &cosets = inst.cosets().cosets;

  std::vector<BigInt> g1(n + 1, 0);
  for (std::size_t a = 0; a < cosets.size(); ++a) {
    for (std::size_t q = 0; q < ksize; ++q) {
      const BigInt weight = pow_big(BigInt(2), static_cast<unsigned>((ksize * a + q) * w));
      const Element current = cosets[a][q];
      const Element previous = cosets[a][(q + ksize - 1) % ksize];
      for (std::size_t b = 0; b < w; ++b) {
        const BigInt bit_weight = weight << (w - 1 - b);
        g1[inst.variable(current, b)] += bit_weight;
        g1[inst.variable(previous, b)] -= bit_weight;
      }
    }
  }

  std::vector<BigInt> g2(n + 1, 0);
  g2[0] = BigInt(r) - BigInt(r * (r + 1) / 2);
  for (const auto &coset : cosets) {
    for (std::size_t b = 0; b < w; ++b) g2[inst.variable(coset.front(), b)] += BigInt(1) << (w - 1 - b);
  }
  return Characteristic({LinearPolynomial(modulus, std::move(g1)), LinearPolynomial(modulus, std::move(g2))});
}

inline GeneralCompilation compile_hsf(const HsfInstance &inst, const GoodSet &set) {
  return compile_general(hsf_characteristic(inst), set);
}

/// Samples an (unverified) set over Z_{2^n} and compiles.
inline GeneralCompilation compile_hsf(const HsfInstance &inst, double epsilon, std::uint64_t seed) {
  const Characteristic chi = hsf_characteristic(inst);
  return compile_general(chi, sample(epsilon, chi.modulus(), seed));
}

}  // namespace qobdd
