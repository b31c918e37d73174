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
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qobdd/bits.hpp"
#include "qobdd/errors.hpp"

namespace qobdd {

using Complex = std::complex<double>;

inline constexpr double kUnitarityTolerance = 1e-9;
inline constexpr double kNormTolerance = 1e-9;

/// A d x d complex matrix acting on program states. Entries are held in
/// compressed rows; zero entries are not stored. Unitarity is a checked
/// property (is_unitary), not a construction invariant, so that malformed
/// programs can be loaded and reported by validate().
class UnitaryMatrix {
 public:
  struct Entry {
    std::size_t row;
    std::size_t col;
    Complex value;
  };

  UnitaryMatrix() = default;

  static UnitaryMatrix identity(std::size_t d) {
    std::vector<Entry> entries;
    entries.reserve(d);
    for (std::size_t i = 0; i < d; ++i) entries.push_back({i, i, 1.0});
    return from_entries(d, std::move(entries));
  }

  /// Row-major d*d values.
  static UnitaryMatrix from_dense(std::size_t d, std::span<const Complex> values) {
    if (values.size() != d * d) {
      throw InvalidArgument("dense matrix needs " + std::to_string(d * d) + " entries");
    }
    std::vector<Entry> entries;
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t c = 0; c < d; ++c) {
        const Complex v = values[r * d + c];
        if (v != Complex(0.0, 0.0)) entries.push_back({r, c, v});
      }
    }
    return from_entries(d, std::move(entries));
  }

  /// Duplicate positions are summed.
  static UnitaryMatrix from_entries(std::size_t d, std::vector<Entry> entries) {
    UnitaryMatrix m;
    m.dim_ = d;
    std::sort(entries.begin(), entries.end(), [](const Entry &a, const Entry &b) {
      return a.row != b.row ? a.row < b.row : a.col < b.col;
    });
    m.row_start_.assign(d + 1, 0);
    for (std::size_t i = 0; i < entries.size(); ++i) {
      const auto &e = entries[i];
      if (e.row >= d || e.col >= d) throw InvalidArgument("matrix entry out of range");
      if (!m.cols_.empty() && m.last_row_ == e.row && m.cols_.back() == e.col) {
        m.values_.back() += e.value;
        continue;
      }
      m.cols_.push_back(e.col);
      m.values_.push_back(e.value);
      m.last_row_ = e.row;
      ++m.row_start_[e.row + 1];
    }
    for (std::size_t r = 0; r < d; ++r) m.row_start_[r + 1] += m.row_start_[r];
    return m;
  }

  std::size_t dimension() const { return dim_; }
  std::size_t nonzeros() const { return values_.size(); }

  Complex at(std::size_t row, std::size_t col) const {
    const auto begin = cols_.begin() + static_cast<std::ptrdiff_t>(row_start_.at(row));
    const auto end = cols_.begin() + static_cast<std::ptrdiff_t>(row_start_.at(row + 1));
    auto it = std::lower_bound(begin, end, col);
    if (it == end || *it != col) return 0.0;
    return values_[static_cast<std::size_t>(it - cols_.begin())];
  }

  std::vector<Complex> dense() const {
    std::vector<Complex> out(dim_ * dim_, 0.0);
    for_each([&](std::size_t r, std::size_t c, Complex v) { out[r * dim_ + c] = v; });
    return out;
  }

  template <typename Fn>
  void for_each(Fn &&fn) const {
    for (std::size_t r = 0; r < dim_; ++r) {
      for (std::size_t k = row_start_[r]; k < row_start_[r + 1]; ++k) fn(r, cols_[k], values_[k]);
    }
  }

  /// out = M in; the spans must not alias.
  void apply(std::span<const Complex> in, std::span<Complex> out) const {
    for (std::size_t r = 0; r < dim_; ++r) {
      Complex acc = 0.0;
      for (std::size_t k = row_start_[r]; k < row_start_[r + 1]; ++k) acc += values_[k] * in[cols_[k]];
      out[r] = acc;
    }
  }

  /// max |(M^dagger M - I)_{jk}| <= tol.
  bool is_unitary(double tol = kUnitarityTolerance) const {
    if (dim_ == 0) return false;
    std::vector<Complex> gram(dim_ * dim_, 0.0);
    for (std::size_t r = 0; r < dim_; ++r) {
      for (std::size_t a = row_start_[r]; a < row_start_[r + 1]; ++a) {
        const Complex left = std::conj(values_[a]);
        for (std::size_t b = row_start_[r]; b < row_start_[r + 1]; ++b) {
          gram[cols_[a] * dim_ + cols_[b]] += left * values_[b];
        }
      }
    }
    for (std::size_t j = 0; j < dim_; ++j) {
      for (std::size_t k = 0; k < dim_; ++k) {
        const Complex expected = j == k ? 1.0 : 0.0;
        if (std::abs(gram[j * dim_ + k] - expected) > tol) return false;
      }
    }
    return true;
  }

  /// Every stored entry lies in a diagonal block of the given size.
  bool is_block_diagonal(std::size_t block) const {
    bool ok = true;
    for_each([&](std::size_t r, std::size_t c, Complex) { ok = ok && r / block == c / block; });
    return ok;
  }

  bool is_identity() const {
    if (nonzeros() != dim_) return false;
    bool ok = true;
    for_each([&](std::size_t r, std::size_t c, Complex v) { ok = ok && r == c && v == Complex(1.0); });
    return ok;
  }

  /// a * b (apply b first).
  friend UnitaryMatrix operator*(const UnitaryMatrix &a, const UnitaryMatrix &b) {
    if (a.dim_ != b.dim_) throw InvalidArgument("matrix dimensions differ");
    std::vector<Entry> entries;
    std::vector<Complex> row(a.dim_, 0.0);
    std::vector<char> touched(a.dim_, 0);
    std::vector<std::size_t> cols;
    for (std::size_t r = 0; r < a.dim_; ++r) {
      cols.clear();
      for (std::size_t k = a.row_start_[r]; k < a.row_start_[r + 1]; ++k) {
        const std::size_t mid = a.cols_[k];
        for (std::size_t q = b.row_start_[mid]; q < b.row_start_[mid + 1]; ++q) {
          const std::size_t c = b.cols_[q];
          if (!touched[c]) {
            touched[c] = 1;
            cols.push_back(c);
          }
          row[c] += a.values_[k] * b.values_[q];
        }
      }
      for (std::size_t c : cols) {
        if (row[c] != Complex(0.0, 0.0)) entries.push_back({r, c, row[c]});
        row[c] = 0.0;
        touched[c] = 0;
      }
    }
    return from_entries(a.dim_, std::move(entries));
  }

 private:
  std::size_t dim_ = 0;
  std::size_t last_row_ = 0;
  std::vector<std::size_t> row_start_;
  std::vector<std::size_t> cols_;
  std::vector<Complex> values_;
};

/// One read of x_{variable}: on_zero is applied when it is 0, on_one otherwise.
struct Instruction {
  std::size_t variable;  // 1-based
  UnitaryMatrix on_zero;
  UnitaryMatrix on_one;
};

class StateVector {
 public:
  StateVector() = default;
  explicit StateVector(std::vector<Complex> amplitudes) : amps_(std::move(amplitudes)) {}

  static StateVector basis(std::size_t d, std::size_t index) {
    if (index >= d) throw InvalidArgument("basis index out of range");
    std::vector<Complex> a(d, 0.0);
    a[index] = 1.0;
    return StateVector(std::move(a));
  }

  std::size_t dimension() const { return amps_.size(); }
  const std::vector<Complex> &amplitudes() const { return amps_; }
  Complex operator[](std::size_t i) const { return amps_.at(i); }

  double norm_squared() const {
    double s = 0.0;
    for (const auto &a : amps_) s += std::norm(a);
    return s;
  }
  bool is_normalized(double tol = kNormTolerance) const {
    return std::abs(std::sqrt(norm_squared()) - 1.0) <= tol;
  }

 private:
  std::vector<Complex> amps_;
};

/// Q = <T, |psi_0>, M_accept> with optional input-independent unitaries run
/// before the first read and after the last.
class QuantumBranchingProgram {
 public:
  QuantumBranchingProgram(std::size_t dimension, std::size_t arity,
                          std::optional<UnitaryMatrix> pre,
                          std::vector<Instruction> instructions,
                          std::optional<UnitaryMatrix> post, StateVector initial,
                          std::vector<std::size_t> accepting)
      : dim_(dimension),
        arity_(arity),
        pre_(std::move(pre)),
        instructions_(std::move(instructions)),
        post_(std::move(post)),
        initial_(std::move(initial)),
        accepting_(std::move(accepting)) {
    std::sort(accepting_.begin(), accepting_.end());
    accepting_.erase(std::unique(accepting_.begin(), accepting_.end()), accepting_.end());
  }

  std::size_t dimension() const { return dim_; }
  std::size_t arity() const { return arity_; }
  const std::optional<UnitaryMatrix> &pre_transform() const { return pre_; }
  const std::vector<Instruction> &instructions() const { return instructions_; }
  const std::optional<UnitaryMatrix> &post_transform() const { return post_; }
  const StateVector &initial_state() const { return initial_; }
  const std::vector<std::size_t> &accepting_states() const { return accepting_; }

 private:
  std::size_t dim_;
  std::size_t arity_;
  std::optional<UnitaryMatrix> pre_;
  std::vector<Instruction> instructions_;
  std::optional<UnitaryMatrix> post_;
  StateVector initial_;
  std::vector<std::size_t> accepting_;
};

/// Every broken invariant, one message each; empty when the program is valid.
inline std::vector<std::string> validate(const QuantumBranchingProgram &q) {
  std::vector<std::string> violations;
  const std::size_t d = q.dimension();
  if (d == 0) violations.push_back("dimension must be positive");
  if (q.arity() == 0) violations.push_back("arity must be positive");
  auto check_matrix = [&](const UnitaryMatrix &m, const std::string &where) {
    if (m.dimension() != d) {
      violations.push_back(where + ": dimension mismatch");
    } else if (!m.is_unitary()) {
      violations.push_back(where + ": non-unitary");
    }
  };
  if (q.pre_transform()) check_matrix(*q.pre_transform(), "pre-transform");
  for (std::size_t j = 0; j < q.instructions().size(); ++j) {
    const auto &ins = q.instructions()[j];
    const std::string where = "instruction " + std::to_string(j + 1);
    if (ins.variable < 1 || ins.variable > q.arity()) {
      violations.push_back(where + ": variable index out of range");
    }
    check_matrix(ins.on_zero, where + " on 0");
    check_matrix(ins.on_one, where + " on 1");
  }
  if (q.post_transform()) check_matrix(*q.post_transform(), "post-transform");
  if (q.initial_state().dimension() != d) {
    violations.push_back("initial state: dimension mismatch");
  } else if (!q.initial_state().is_normalized()) {
    violations.push_back("initial state: not normalized");
  }
  if (q.accepting_states().empty()) violations.push_back("accepting set is empty");
  for (auto a : q.accepting_states()) {
    if (a >= d) {
      violations.push_back("accepting index " + std::to_string(a) + " out of range");
      break;
    }
  }
  return violations;
}

/// No variable is read by more than one instruction.
inline bool is_read_once(const QuantumBranchingProgram &q) {
  std::vector<std::size_t> vars;
  for (const auto &ins : q.instructions()) vars.push_back(ins.variable);
  std::sort(vars.begin(), vars.end());
  return std::adjacent_find(vars.begin(), vars.end()) == vars.end();
}

/// Called with the state after each applied transform.
using StepObserver = std::function<void(const std::vector<Complex> &)>;

/// |psi_sigma> = post * U_l(sigma_{i_l}) ... U_1(sigma_{i_1}) * pre |psi_0>.
inline StateVector run(const QuantumBranchingProgram &q, const Bits &sigma,
                       const StepObserver &observer = nullptr) {
  if (sigma.size() != q.arity()) {
    throw LengthMismatch("input has " + std::to_string(sigma.size()) + " bits, program reads " +
                         std::to_string(q.arity()));
  }
  if (q.initial_state().dimension() != q.dimension()) {
    throw InvalidArgument("initial state dimension differs from program width");
  }
  std::vector<Complex> state = q.initial_state().amplitudes();
  std::vector<Complex> scratch(state.size());
  auto step = [&](const UnitaryMatrix &m) {
    if (m.dimension() != state.size()) throw InvalidArgument("matrix dimension differs from program width");
    m.apply(state, scratch);
    state.swap(scratch);
    if (observer) observer(state);
  };
  if (q.pre_transform()) step(*q.pre_transform());
  for (const auto &ins : q.instructions()) {
    if (ins.variable < 1 || ins.variable > sigma.size()) {
      throw InvalidArgument("instruction reads variable out of range");
    }
    step(sigma[ins.variable - 1] ? ins.on_one : ins.on_zero);
  }
  if (q.post_transform()) step(*q.post_transform());
  return StateVector(std::move(state));
}

/// ||M_accept |psi_sigma>||^2.
inline double accept_probability(const QuantumBranchingProgram &q, const Bits &sigma) {
  const StateVector final_state = run(q, sigma);
  double p = 0.0;
  for (auto a : q.accepting_states()) p += std::norm(final_state[a]);
  return p;
}

struct ProgramMetrics {
  std::size_t width;
  std::size_t length;
  std::size_t qubits;

  friend bool operator==(const ProgramMetrics &, const ProgramMetrics &) = default;
};

inline std::size_t ceil_log2(std::size_t d) {
  std::size_t q = 0;
  while ((std::size_t{1} << q) < d) ++q;
  return q;
}

inline ProgramMetrics metrics(const QuantumBranchingProgram &q) {
  return {q.dimension(), q.instructions().size(), ceil_log2(q.dimension())};
}

}  // namespace qobdd
