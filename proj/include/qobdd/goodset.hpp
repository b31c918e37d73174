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
#include <cstdint>
#include <numbers>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "qobdd/modular.hpp"

namespace qobdd {

inline void check_epsilon(double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw InvalidError("error rate must lie in (0, 1), got " + std::to_string(epsilon));
  }
}

/// ceil((2/eps) ln 2m), the set size that drives the per-b failure
/// probability of a random set below 1/m.
inline std::uint64_t required_size_raw(double epsilon, const BigInt &m) {
  check_epsilon(epsilon);
  if (m < 2) throw InvalidModulus("modulus must be at least 2");
  const double raw = (2.0 / epsilon) * (std::log(2.0) + log_big(m));
  return static_cast<std::uint64_t>(std::ceil(raw));
}

/// required_size_raw rounded up to a power of two.
inline std::uint64_t required_size(double epsilon, const BigInt &m) {
  std::uint64_t raw = required_size_raw(epsilon, m);
  std::uint64_t t = 1;
  while (t < raw) t <<= 1;
  return t;
}

/// 2 exp(-eps t / 2): chance that t uniform parameters fail for one fixed b.
inline double azuma_failure_bound(double epsilon, std::uint64_t t) {
  if (t < 1) throw InvalidArgument("t must be positive");
  return 2.0 * std::exp(-epsilon * static_cast<double>(t) / 2.0);
}

/// Fingerprint parameters k_1..k_t in [0, m) together with the error rate they
/// are meant to achieve. Goodness itself is a property checked separately.
class GoodSet {
 public:
  GoodSet(Modulus modulus, double epsilon, std::vector<BigInt> parameters)
      : modulus_(std::move(modulus)), epsilon_(epsilon), params_(std::move(parameters)) {
    check_epsilon(epsilon_);
    if (params_.empty()) throw InvalidArgument("good set must be nonempty");
    for (const auto &k : params_) {
      if (k < 0 || k >= modulus_.value()) {
        throw InvalidArgument("parameter " + k.str() + " outside [0, " +
                              modulus_.str() + ")");
      }
    }
    if (modulus_.is_small()) {
      small_.reserve(params_.size());
      for (const auto &k : params_) small_.push_back(k.convert_to<std::uint64_t>());
    }
  }

  const Modulus &modulus() const { return modulus_; }
  double epsilon() const { return epsilon_; }
  std::size_t size() const { return params_.size(); }
  const std::vector<BigInt> &parameters() const { return params_; }
  const BigInt &operator[](std::size_t i) const { return params_.at(i); }

  bool size_is_power_of_two() const {
    const std::size_t t = size();
    return (t & (t - 1)) == 0;
  }
  bool meets_size_bound() const {
    return size() >= required_size_raw(epsilon_, modulus_.value());
  }

  /// Sum_i cos(2 pi ((k_i b) mod m) / m) for b already reduced to [0, m).
  double cosine_total(const BigInt &reduced_b) const {
    double total = 0.0;
    if (!small_.empty()) {
      const std::uint64_t m = modulus_.value().convert_to<std::uint64_t>();
      const std::uint64_t b = reduced_b.convert_to<std::uint64_t>();
      return cosine_total_small(b, m);
    }
    for (const auto &k : params_) {
      total += std::cos(2.0 * std::numbers::pi * unit_fraction(k * reduced_b, modulus_.value()));
    }
    return total;
  }

  double cosine_total_small(std::uint64_t b, std::uint64_t m) const {
    double total = 0.0;
    const double md = static_cast<double>(m);
    for (auto k : small_) {
      const std::uint64_t r = (k * b) % m;
      total += std::cos(2.0 * std::numbers::pi * (static_cast<double>(r) / md));
    }
    return total;
  }

 private:
  Modulus modulus_;
  double epsilon_;
  std::vector<BigInt> params_;
  std::vector<std::uint64_t> small_;
};

/// (1/t^2) (sum_i cos(2 pi k_i b / m))^2, the acceptance amplitude squared of
/// the single-polynomial fingerprint when g(sigma) = b.
inline double cosine_sum(const GoodSet &set, const BigInt &b) {
  const BigInt reduced = reduce_value(b, set.modulus().value());
  if (reduced == 0) throw ZeroB("goodness is undefined for b = 0 mod m");
  const double mean = set.cosine_total(reduced) / static_cast<double>(set.size());
  return mean * mean;
}

inline double cosine_sum(const GoodSet &set, const Residue &b) {
  if (!(b.modulus() == set.modulus())) throw ModulusMismatch("residue modulus differs");
  return cosine_sum(set, b.value());
}

inline bool is_good_for(const GoodSet &set, const BigInt &b) {
  return cosine_sum(set, b) < set.epsilon();
}

inline constexpr std::uint64_t kDefaultVerifyLimit = std::uint64_t{1} << 20;

/// Checks goodness for every b in [1, m-1]; by periodicity of cos this
/// covers every b != 0 mod m. The range is split across `workers` threads
/// and the verdicts are and-ed.
inline bool verify_exhaustive(const GoodSet &set,
                              std::uint64_t limit = kDefaultVerifyLimit,
                              unsigned workers = 1) {
  if (set.modulus().value() > limit) {
    throw TooLarge("modulus " + set.modulus().str() + " exceeds verification limit " +
                   std::to_string(limit));
  }
  const std::uint64_t m = set.modulus().value().convert_to<std::uint64_t>();
  const double t = static_cast<double>(set.size());
  const double eps = set.epsilon();
  auto check_range = [&](std::uint64_t lo, std::uint64_t hi) {
    for (std::uint64_t b = lo; b < hi; ++b) {
      const double mean = set.cosine_total_small(b, m) / t;
      if (!(mean * mean < eps)) return false;
    }
    return true;
  };
  workers = std::max(1u, workers);
  if (workers == 1) return check_range(1, m);
  std::vector<char> verdicts(workers, 1);
  std::vector<std::thread> pool;
  const std::uint64_t span = (m - 1 + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t lo = 1 + w * span;
    const std::uint64_t hi = std::min<std::uint64_t>(m, lo + span);
    pool.emplace_back([&, w, lo, hi] { verdicts[w] = lo >= hi || check_range(lo, hi); });
  }
  for (auto &th : pool) th.join();
  return std::all_of(verdicts.begin(), verdicts.end(), [](char v) { return v != 0; });
}

/// Goodness restricted to the given values; multiples of m are skipped.
inline bool verify_on(const GoodSet &set, std::span<const BigInt> residues) {
  for (const auto &b : residues) {
    if (reduce_value(b, set.modulus().value()) == 0) continue;
    if (!is_good_for(set, b)) return false;
  }
  return true;
}

/// Uniform integer in [0, bound) from raw 64-bit engine output by masked
/// rejection, so the stream is identical on every platform.
inline BigInt uniform_below(std::mt19937_64 &engine, const BigInt &bound) {
  if (bound <= 1) return 0;
  const BigInt top = bound - 1;
  const unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(top)) + 1;
  const unsigned words = (bits + 63) / 64;
  const unsigned spare = words * 64 - bits;
  for (;;) {
    BigInt candidate = 0;
    for (unsigned w = 0; w < words; ++w) {
      candidate = (candidate << 64) | BigInt(engine());
    }
    candidate >>= spare;
    if (candidate < bound) return candidate;
  }
}

/// Draws required_size(eps, m) parameters uniformly from [0, m). Not verified.
inline GoodSet sample(double epsilon, const Modulus &m, std::uint64_t seed) {
  const std::uint64_t t = required_size(epsilon, m.value());
  std::mt19937_64 engine(seed);
  std::vector<BigInt> params;
  params.reserve(t);
  for (std::uint64_t i = 0; i < t; ++i) params.push_back(uniform_below(engine, m.value()));
  return GoodSet(m, epsilon, std::move(params));
}

enum class GoodSetCheck { kExhaustive, kRealizedResidues, kUnverified };

inline const char *to_string(GoodSetCheck check) {
  switch (check) {
    case GoodSetCheck::kExhaustive: return "exhaustive";
    case GoodSetCheck::kRealizedResidues: return "realized-residues";
    case GoodSetCheck::kUnverified: return "unverified";
  }
  return "unverified";
}

struct GoodSetSelection {
  GoodSet set;
  std::uint64_t seed;  // seed that produced `set`
  GoodSetCheck check;
};

/// Samples with seeds seed, seed+1, ... until a set passes verification.
/// With `realized` given, goodness is checked on exactly those values;
/// otherwise exhaustively when m <= limit, and not at all beyond that.
inline GoodSetSelection select_good_set(double epsilon, const Modulus &m, std::uint64_t seed,
                                        const std::vector<BigInt> *realized = nullptr,
                                        unsigned attempts = 64,
                                        std::uint64_t limit = kDefaultVerifyLimit) {
  if (realized == nullptr && m.value() > limit) {
    return {sample(epsilon, m, seed), seed, GoodSetCheck::kUnverified};
  }
  for (unsigned a = 0; a < attempts; ++a) {
    const std::uint64_t s = seed + a;
    GoodSet candidate = sample(epsilon, m, s);
    if (realized != nullptr) {
      if (verify_on(candidate, *realized)) {
        return {std::move(candidate), s, GoodSetCheck::kRealizedResidues};
      }
    } else if (verify_exhaustive(candidate, limit)) {
      return {std::move(candidate), s, GoodSetCheck::kExhaustive};
    }
  }
  throw QobddError("no good set found in " + std::to_string(attempts) + " attempts");
}

}  // namespace qobdd
