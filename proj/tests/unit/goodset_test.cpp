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

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "qobdd/goodset.hpp"

namespace qobdd {
namespace {

GoodSet make_set(std::int64_t m, double eps, std::vector<std::int64_t> ks) {
  std::vector<BigInt> params(ks.begin(), ks.end());
  return GoodSet(Modulus(m), eps, std::move(params));
}

TEST(RequiredSize, Examples) {
  EXPECT_EQ(required_size_raw(0.5, 1024), 31u);
  EXPECT_EQ(required_size(0.5, 1024), 32u);
  EXPECT_EQ(required_size_raw(0.25, 64), 39u);
  EXPECT_EQ(required_size(0.25, 64), 64u);
  EXPECT_EQ(required_size_raw(0.9, 2), 4u);
  EXPECT_EQ(required_size(0.9, 2), 4u);
}

TEST(RequiredSize, RejectsBadEpsilon) {
  EXPECT_THROW(required_size(0.0, 8), InvalidError);
  EXPECT_THROW(required_size(1.0, 8), InvalidError);
  EXPECT_THROW(required_size(-0.1, 8), InvalidError);
}

TEST(RequiredSize, Monotone) {
  for (std::int64_t m : {2, 3, 17, 1024, 99991}) {
    std::uint64_t previous = required_size(0.01, m);
    for (double eps = 0.02; eps < 1.0; eps += 0.01) {
      const auto t = required_size(eps, m);
      EXPECT_LE(t, previous);
      previous = t;
    }
  }
  for (double eps : {0.1, 0.25, 0.5, 0.9}) {
    std::uint64_t previous = required_size(eps, 2);
    for (std::int64_t m = 3; m < 5000; m += 37) {
      const auto t = required_size(eps, m);
      EXPECT_GE(t, previous);
      previous = t;
    }
  }
}

TEST(CosineSum, CubeRoots) {
  const auto k = make_set(3, 0.3, {1, 2});
  EXPECT_NEAR(cosine_sum(k, 1), 0.25, 1e-12);
  EXPECT_NEAR(cosine_sum(k, 2), 0.25, 1e-12);
}

TEST(CosineSum, AllZeroParameters) {
  const auto k = make_set(17, 0.5, {0, 0, 0, 0});
  for (int b = 1; b < 17; ++b) EXPECT_EQ(cosine_sum(k, b), 1.0);
}

TEST(CosineSum, ZeroBRejected) {
  const auto k = make_set(3, 0.3, {1, 2});
  EXPECT_THROW(cosine_sum(k, 0), ZeroB);
  EXPECT_THROW(cosine_sum(k, 6), ZeroB);
  EXPECT_THROW(is_good_for(k, 3), ZeroB);
}

TEST(CosineSum, RangeAndPeriodicity) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const std::uint64_t m = 2 + rng() % 500;
    std::vector<std::uint64_t> ks(1 + rng() % 16);
    std::vector<BigInt> params;
    for (auto &k : ks) {
      k = rng() % m;
      params.push_back(k);
    }
    const GoodSet set(Modulus(BigInt(m)), 0.5, params);
    for (int probe = 0; probe < 20; ++probe) {
      std::uint64_t b = 1 + rng() % (m - 1);
      const double c = cosine_sum(set, b);
      EXPECT_GE(c, 0.0);
      EXPECT_LE(c, 1.0);
      EXPECT_NEAR(c, static_cast<double>(oracle::cosine_sum_ld(ks, m, b)), 1e-12);
      const std::int64_t shift = static_cast<std::int64_t>(rng() % 7) - 3;
      EXPECT_DOUBLE_EQ(cosine_sum(set, BigInt(b) + BigInt(shift) * BigInt(m)), c);
    }
  }
}

TEST(CosineSum, LargeModulusUsesExactReduction) {
  // k b = m^2/8 + 3m/4 + 1 = 3m/4 + 1 (mod m), so the cosine is ~0; a
  // floating product would lose the residue entirely.
  const BigInt m = pow_big(2, 90);
  const GoodSet set(Modulus(m), 0.5, {m / 2 + 1});
  EXPECT_LT(cosine_sum(set, m / 4 + 1), 1e-20);
}

TEST(IsGoodFor, Examples) {
  EXPECT_TRUE(is_good_for(make_set(3, 0.3, {1, 2}), 1));
  EXPECT_FALSE(is_good_for(make_set(3, 0.2, {1, 2}), 1));
  EXPECT_FALSE(is_good_for(make_set(5, 0.99, {0, 0}), 3));
}

TEST(VerifyExhaustive, Examples) {
  EXPECT_TRUE(verify_exhaustive(make_set(3, 0.3, {1, 2})));
  EXPECT_FALSE(verify_exhaustive(make_set(3, 0.2, {1, 2})));
  const GoodSet big(Modulus(BigInt(1) << 20), 0.5, {1, 2});
  EXPECT_THROW(verify_exhaustive(big, std::uint64_t{1} << 16), TooLarge);
}

TEST(VerifyExhaustive, SampledSetPassesForSomeSeed) {
  int passing = 0;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const GoodSet k = sample(0.25, Modulus(64), seed);
    ASSERT_EQ(k.size(), required_size(0.25, 64));
    passing += verify_exhaustive(k);
  }
  EXPECT_GE(passing, 1);
}

TEST(VerifyExhaustive, PartitionInvariant) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const GoodSet k = sample(0.3, Modulus(257), seed);
    const bool serial = verify_exhaustive(k, kDefaultVerifyLimit, 1);
    for (unsigned workers : {2u, 3u, 7u, 300u}) {
      EXPECT_EQ(verify_exhaustive(k, kDefaultVerifyLimit, workers), serial);
    }
  }
}

TEST(VerifyOn, SkipsMultiplesOfModulus) {
  const auto k = make_set(3, 0.3, {1, 2});
  std::vector<BigInt> residues{0, 1, 3, 5};
  EXPECT_TRUE(verify_on(k, residues));
  EXPECT_FALSE(verify_on(make_set(3, 0.2, {1, 2}), residues));
}

TEST(Sample, Deterministic) {
  const auto a = sample(0.25, Modulus(64), 5);
  const auto b = sample(0.25, Modulus(64), 5);
  EXPECT_EQ(a.parameters(), b.parameters());
  EXPECT_NE(a.parameters(), sample(0.25, Modulus(64), 6).parameters());
}

TEST(Sample, SizeAndRange) {
  const auto k = sample(0.25, Modulus(64), 9);
  EXPECT_EQ(k.size(), 64u);
  EXPECT_TRUE(k.size_is_power_of_two());
  EXPECT_TRUE(k.meets_size_bound());
  for (const auto &p : k.parameters()) {
    EXPECT_GE(p, 0);
    EXPECT_LT(p, 64);
  }
  const BigInt m = pow_big(3, 100);
  for (const auto &p : sample(0.5, Modulus(m), 1).parameters()) {
    EXPECT_GE(p, 0);
    EXPECT_LT(p, m);
  }
}

TEST(UniformBelow, CoversSmallRangeUniformly) {
  std::mt19937_64 engine(3);
  std::vector<int> counts(5, 0);
  for (int i = 0; i < 50000; ++i) ++counts[uniform_below(engine, 5).convert_to<int>()];
  for (int c : counts) EXPECT_NEAR(c, 10000, 500);
}

TEST(AzumaBound, Examples) {
  EXPECT_NEAR(azuma_failure_bound(0.5, 31), 8.6148508115e-4, 1e-12);
  EXPECT_LE(azuma_failure_bound(0.5, 31), 1.0 / 1024);
  EXPECT_NEAR(azuma_failure_bound(0.25, 39), 0.0152701884377, 1e-12);
  EXPECT_LE(azuma_failure_bound(0.25, 39), 1.0 / 64);
  double previous = azuma_failure_bound(0.3, 1);
  for (std::uint64_t t = 2; t < 400; ++t) {
    const double b = azuma_failure_bound(0.3, t);
    EXPECT_LT(b, previous);
    previous = b;
  }
}

TEST(AzumaBound, HoldsAtRequiredSize) {
  for (std::int64_t m : {2, 3, 64, 1024, 65536}) {
    for (double eps : {0.1, 0.25, 0.5}) {
      EXPECT_LE(azuma_failure_bound(eps, required_size_raw(eps, m)), 1.0 / static_cast<double>(m) + 1e-15);
    }
  }
}

TEST(Sample, SuccessRateMeetsAzumaFloor) {
  const std::int64_t m = 64;
  const double eps = 0.25;
  int passing = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) passing += verify_exhaustive(sample(eps, Modulus(m), seed));
  const double floor = 1.0 - static_cast<double>(m - 1) * azuma_failure_bound(eps, required_size_raw(eps, m));
  EXPECT_GE(passing / 20.0, floor);
}

TEST(SelectGoodSet, ExhaustiveAndRealized) {
  const auto chosen = select_good_set(0.2, Modulus(3), 1);
  EXPECT_EQ(chosen.check, GoodSetCheck::kExhaustive);
  EXPECT_TRUE(verify_exhaustive(chosen.set));
  EXPECT_EQ(chosen.set.parameters(), sample(0.2, Modulus(3), chosen.seed).parameters());

  std::vector<BigInt> residues{5, 17};
  const auto spot = select_good_set(0.2, Modulus(BigInt(1) << 30), 4, &residues);
  EXPECT_EQ(spot.check, GoodSetCheck::kRealizedResidues);
  EXPECT_TRUE(verify_on(spot.set, residues));

  const auto unverified = select_good_set(0.2, Modulus(BigInt(1) << 30), 4);
  EXPECT_EQ(unverified.check, GoodSetCheck::kUnverified);
}

TEST(GoodSet, ConstructionChecks) {
  EXPECT_THROW(make_set(3, 0.3, {}), InvalidArgument);
  EXPECT_THROW(make_set(3, 0.3, {3}), InvalidArgument);
  EXPECT_THROW(make_set(3, 1.5, {1}), InvalidError);
  EXPECT_FALSE(make_set(3, 0.3, {1, 2, 0}).size_is_power_of_two());
  EXPECT_FALSE(make_set(3, 0.3, {1, 2}).meets_size_bound());
}

}  // namespace
}  // namespace qobdd
