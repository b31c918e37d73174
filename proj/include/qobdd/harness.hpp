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

// Brute-force verification of compiled programs against Boolean oracles.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <limits>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include "qobdd/builders.hpp"
#include "qobdd/fingerprint.hpp"
#include "qobdd/hsf.hpp"

namespace qobdd {

using BooleanFunction = std::function<bool(const Bits &)>;
using InputPredicate = std::function<bool(const Bits &)>;
using ReferenceProbability = std::function<double(const Bits &)>;

inline constexpr std::size_t kExhaustiveLimit = 24;
inline constexpr std::uint64_t kDefaultSamples = 100000;
inline constexpr double kOneSidedTolerance = 1e-9;

// Reference definitions of the shipped functions, written directly from
// their combinatorial meaning.

inline BooleanFunction mod_function(std::uint64_t m) {
  return [m](const Bits &s) {
    return static_cast<std::uint64_t>(std::count(s.begin(), s.end(), 1)) % m == 0;
  };
}

/// x = sigma_1..sigma_n, y = sigma_{n+1}..sigma_{2n}.
inline BooleanFunction eq_function(std::size_t n) {
  return [n](const Bits &s) { return std::equal(s.begin(), s.begin() + n, s.begin() + n); };
}

inline BooleanFunction palindrome_function() {
  return [](const Bits &s) { return std::equal(s.begin(), s.end(), s.rbegin()); };
}

/// Row-major n x n matrix with exactly one 1 per row and per column.
inline BooleanFunction perm_function(std::size_t n) {
  return [n](const Bits &s) {
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t row = 0, col = 0;
      for (std::size_t j = 0; j < n; ++j) {
        row += s[i * n + j];
        col += s[j * n + i];
      }
      if (row != 1 || col != 1) return false;
    }
    return true;
  };
}

struct Exhaustive {};
struct Sampled {
  std::uint64_t count = kDefaultSamples;
  std::uint64_t seed = 0;
};
using SweepMode = std::variant<Exhaustive, Sampled>;

/// Aggregate over a set of inputs. merge() is associative and commutative
/// (min, max and sums of integers only), so any partition of the sweep
/// yields the same result.
struct SweepStats {
  std::uint64_t visited = 0;
  std::uint64_t filtered_out = 0;
  std::uint64_t ones = 0;
  std::uint64_t zeros = 0;
  std::optional<double> min_accept_on_ones;
  std::optional<double> max_accept_on_zeros;
  double max_reference_gap = 0.0;

  void record(bool oracle_value, double probability) {
    if (oracle_value) {
      ++ones;
      min_accept_on_ones = std::min(min_accept_on_ones.value_or(probability), probability);
    } else {
      ++zeros;
      max_accept_on_zeros = std::max(max_accept_on_zeros.value_or(probability), probability);
    }
  }

  friend SweepStats merge(const SweepStats &a, const SweepStats &b) {
    SweepStats out;
    out.visited = a.visited + b.visited;
    out.filtered_out = a.filtered_out + b.filtered_out;
    out.ones = a.ones + b.ones;
    out.zeros = a.zeros + b.zeros;
    auto pick = [](const std::optional<double> &x, const std::optional<double> &y, auto f) {
      if (!x) return y;
      if (!y) return x;
      return std::optional<double>(f(*x, *y));
    };
    out.min_accept_on_ones = pick(a.min_accept_on_ones, b.min_accept_on_ones,
                                  [](double p, double q) { return std::min(p, q); });
    out.max_accept_on_zeros = pick(a.max_accept_on_zeros, b.max_accept_on_zeros,
                                   [](double p, double q) { return std::max(p, q); });
    out.max_reference_gap = std::max(a.max_reference_gap, b.max_reference_gap);
    return out;
  }

  friend bool operator==(const SweepStats &, const SweepStats &) = default;
};

struct VerifyOptions {
  SweepMode mode = Exhaustive{};
  /// Inputs failing the filter are counted in filtered_out and skipped.
  InputPredicate promise;
  /// Independent prediction of the acceptance probability; the largest
  /// deviation from the simulator is recorded.
  ReferenceProbability reference;
  unsigned workers = 1;
};

struct VerificationReport {
  std::string function_name;
  std::size_t arity = 0;
  double epsilon = 0.0;
  std::size_t t = 0;
  SweepMode mode = Exhaustive{};
  SweepStats stats;
  double bound = 0.0;
  bool pass = false;
  ProgramMetrics metrics{};
  std::optional<GoodSetSelection> good_set;
};

/// pass <=> every 1-input accepted with probability 1 (within 1e-9) and
/// every 0-input strictly below the bound.
inline bool one_sided_pass(const SweepStats &stats, double bound) {
  const bool ones_ok = !stats.min_accept_on_ones || *stats.min_accept_on_ones >= 1.0 - kOneSidedTolerance;
  const bool zeros_ok = !stats.max_accept_on_zeros || *stats.max_accept_on_zeros < bound;
  return ones_ok && zeros_ok;
}

/// Inputs of a sweep in visiting order. Exhaustive sweeps enumerate
/// 0..2^n-1 (sigma_1 most significant); sampled sweeps draw bits from a
/// seeded mt19937_64.
class InputSource {
 public:
  InputSource(std::size_t arity, const SweepMode &mode) : arity_(arity) {
    if (std::holds_alternative<Exhaustive>(mode)) {
      if (arity > kExhaustiveLimit) {
        throw TooLarge("exhaustive sweep over " + std::to_string(arity) + " variables exceeds the limit of " +
                       std::to_string(kExhaustiveLimit));
      }
      count_ = std::uint64_t{1} << arity;
    } else {
      const auto &sampled = std::get<Sampled>(mode);
      count_ = sampled.count;
      std::mt19937_64 engine(sampled.seed);
      samples_.reserve(count_);
      for (std::uint64_t i = 0; i < count_; ++i) {
        Bits bits(arity);
        std::uint64_t word = 0;
        for (std::size_t j = 0; j < arity; ++j) {
          if (j % 64 == 0) word = engine();
          bits[j] = static_cast<std::uint8_t>((word >> (j % 64)) & 1u);
        }
        samples_.push_back(std::move(bits));
      }
    }
  }

  std::uint64_t size() const { return count_; }
  Bits operator[](std::uint64_t i) const { return samples_.empty() ? bits_from_index(i, arity_) : samples_[i]; }

 private:
  std::size_t arity_;
  std::uint64_t count_ = 0;
  std::vector<Bits> samples_;
};

/// Folds `visit` over the inputs, split into `workers` contiguous ranges.
template <typename Stats, typename Visit>
Stats sweep_partitioned(const InputSource &inputs, unsigned workers, Visit visit) {
  workers = std::max(1u, workers);
  const std::uint64_t n = inputs.size();
  const std::uint64_t chunk = (n + workers - 1) / workers;
  std::vector<Stats> partial(workers);
  auto run_range = [&](unsigned w) {
    const std::uint64_t lo = std::min(n, w * chunk);
    const std::uint64_t hi = std::min(n, lo + chunk);
    for (std::uint64_t i = lo; i < hi; ++i) visit(partial[w], inputs[i]);
  };
  if (workers == 1) {
    run_range(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run_range, w);
    for (auto &th : pool) th.join();
  }
  Stats total;
  for (const auto &p : partial) total = merge(total, p);
  return total;
}

inline SweepStats sweep(const BooleanFunction &oracle, const QuantumBranchingProgram &program,
                        const VerifyOptions &options) {
  const InputSource inputs(program.arity(), options.mode);
  return sweep_partitioned<SweepStats>(inputs, options.workers, [&](SweepStats &stats, const Bits &sigma) {
    ++stats.visited;
    if (options.promise && !options.promise(sigma)) {
      ++stats.filtered_out;
      return;
    }
    const double p = accept_probability(program, sigma);
    stats.record(oracle(sigma), p);
    if (options.reference) {
      stats.max_reference_gap = std::max(stats.max_reference_gap, std::abs(options.reference(sigma) - p));
    }
  });
}

inline VerificationReport verify(std::string name, const BooleanFunction &oracle,
                                 const QuantumBranchingProgram &program, double bound,
                                 const VerifyOptions &options = {}) {
  VerificationReport report;
  report.function_name = std::move(name);
  report.arity = program.arity();
  report.mode = options.mode;
  report.bound = bound;
  report.metrics = metrics(program);
  report.stats = sweep(oracle, program, options);
  report.pass = one_sided_pass(report.stats, bound);
  return report;
}

/// Nonzero values taken by the polynomials on the swept inputs, sorted.
inline std::vector<BigInt> realized_residues(const std::vector<LinearPolynomial> &polys, std::size_t arity,
                                             const SweepMode &mode = Exhaustive{},
                                             const InputPredicate &promise = nullptr) {
  const InputSource inputs(arity, mode);
  std::set<BigInt> values;
  for (std::uint64_t i = 0; i < inputs.size(); ++i) {
    const Bits sigma = inputs[i];
    if (promise && !promise(sigma)) continue;
    for (const auto &p : polys) {
      BigInt v = evaluate_linear_value(p, sigma);
      if (v != 0) values.insert(std::move(v));
    }
  }
  return {values.begin(), values.end()};
}

enum class GoodSetPolicy {
  kAuto,              // exhaustive when m fits the verification limit
  kExhaustive,
  kRealizedResidues,  // goodness on the swept inputs' nonzero values only
};

inline GoodSetSelection choose_good_set(const std::vector<LinearPolynomial> &polys, std::size_t arity,
                                        double epsilon, std::uint64_t seed, GoodSetPolicy policy,
                                        const SweepMode &mode = Exhaustive{},
                                        const InputPredicate &promise = nullptr) {
  const Modulus &m = polys.front().modulus();
  const bool exhaustive =
      policy == GoodSetPolicy::kExhaustive || (policy == GoodSetPolicy::kAuto && m.value() <= kDefaultVerifyLimit);
  if (exhaustive) return select_good_set(epsilon, m, seed);
  const auto residues = realized_residues(polys, arity, mode, promise);
  return select_good_set(epsilon, m, seed, &residues);
}

/// A named single-polynomial function with its reference oracle and the
/// documented deterministic OBDD width lower bound.
struct FunctionCase {
  std::string name;
  LinearPolynomial polynomial;
  BooleanFunction oracle;
  std::string deterministic_bound;
};

inline FunctionCase mod_case(std::size_t n, std::uint64_t m) {
  return {"MOD_" + std::to_string(m), mod_polynomial(n, BigInt(m)), mod_function(m), "Omega(m)"};
}
inline FunctionCase eq_case(std::size_t n) {
  return {"EQ_" + std::to_string(n), eq_polynomial(n), eq_function(n), "2^Omega(n)"};
}
inline FunctionCase palindrome_case(std::size_t n) {
  return {"Palindrome_" + std::to_string(n), palindrome_polynomial(n), palindrome_function(), "2^Omega(n)"};
}
inline FunctionCase perm_case(std::size_t n) {
  return {"PERM_" + std::to_string(n), perm_polynomial(n), perm_function(n), "Omega(2^n n^(-5/2))"};
}

struct SingleCampaign {
  SingleCompilation compilation;
  VerificationReport report;
};

/// Picks a verified good set, compiles, and checks the one-sided contract
/// with the closed form as reference.
inline SingleCampaign run_single_campaign(const FunctionCase &fn, double epsilon, std::uint64_t seed,
                                          GoodSetPolicy policy = GoodSetPolicy::kAuto,
                                          const SweepMode &mode = Exhaustive{}, unsigned workers = 1) {
  const std::size_t n = fn.polynomial.arity();
  GoodSetSelection selection = choose_good_set({fn.polynomial}, n, epsilon, seed, policy, mode);
  SingleCompilation compiled = compile_single(fn.polynomial, selection.set);
  VerifyOptions options;
  options.mode = mode;
  options.workers = workers;
  options.reference = [&](const Bits &s) { return closed_form_single(compiled.polynomial, compiled.good_set, s); };
  VerificationReport report = verify(fn.name, fn.oracle, compiled.program, epsilon, options);
  report.epsilon = epsilon;
  report.t = compiled.good_set.size();
  report.good_set = std::move(selection);
  return {std::move(compiled), std::move(report)};
}

struct HsfCampaign {
  GeneralCompilation compilation;
  VerificationReport report;
};

/// Sweeps an HSF instance under the promise (valid decoding, exactly (G:K)
/// distinct values), with goodness checked on the realized residues.
inline HsfCampaign run_hsf_campaign(const HsfInstance &inst, double epsilon, std::uint64_t seed,
                                    const SweepMode &mode = Exhaustive{}, unsigned workers = 1) {
  const Characteristic chi = hsf_characteristic(inst);
  InputPredicate promise = [&inst](const Bits &s) { return satisfies_promise(inst, s); };
  GoodSetSelection selection =
      choose_good_set(chi.polynomials(), inst.arity(), epsilon, seed, GoodSetPolicy::kRealizedResidues, mode, promise);
  GeneralCompilation compiled = compile_general(chi, selection.set);
  VerifyOptions options;
  options.mode = mode;
  options.workers = workers;
  options.promise = promise;
  options.reference = [&](const Bits &s) { return closed_form_general(compiled.characteristic, compiled.good_set, s); };
  const std::string name = "HSF(|G|=" + std::to_string(inst.group().order()) +
                           ",|K|=" + std::to_string(inst.subgroup().size()) + ")";
  auto oracle = [&inst](const Bits &s) { return hsf_eval(inst, s); };
  VerificationReport report = verify(name, oracle, compiled.program, error_bound_general(epsilon), options);
  report.epsilon = epsilon;
  report.t = compiled.good_set.size();
  report.good_set = std::move(selection);
  return {std::move(compiled), std::move(report)};
}

struct WidthEntry {
  std::string function_name;
  const QuantumBranchingProgram *program;
  std::string deterministic_bound;
};

struct WidthRow {
  std::string function_name;
  ProgramMetrics metrics;
  std::string deterministic_bound;
};

/// Measured quantum widths next to the cited deterministic lower bounds.
/// The bounds are documentation strings; nothing about them is computed.
inline std::vector<WidthRow> width_table(const std::vector<WidthEntry> &entries) {
  std::vector<WidthRow> rows;
  rows.reserve(entries.size());
  for (const auto &e : entries) rows.push_back({e.function_name, metrics(*e.program), e.deterministic_bound});
  return rows;
}

inline std::string format_width_table(const std::vector<WidthRow> &rows) {
  if (rows.empty()) return "";
  std::string out = "function            width   qubits  length  deterministic OBDD width\n";
  for (const auto &r : rows) {
    char line[256];
    std::snprintf(line, sizeof line, "%-18s  %6zu  %6zu  %6zu  %s\n", r.function_name.c_str(), r.metrics.width,
                  r.metrics.qubits, r.metrics.length, r.deterministic_bound.c_str());
    out += line;
  }
  return out;
}

}  // namespace qobdd
