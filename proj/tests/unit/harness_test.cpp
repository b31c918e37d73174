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

#include "oracles.hpp"
#include "qobdd/harness.hpp"

namespace qobdd {
namespace {

TEST(Verify, ModThreeExhaustive) {
  const auto campaign = run_single_campaign(mod_case(10, 3), 0.2, 1, GoodSetPolicy::kExhaustive);
  const auto &r = campaign.report;
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.stats.visited, 1024u);
  EXPECT_EQ(r.stats.ones + r.stats.zeros, 1024u);
  EXPECT_NEAR(*r.stats.min_accept_on_ones, 1.0, 1e-9);
  EXPECT_LT(*r.stats.max_accept_on_zeros, 0.2);
  EXPECT_LE(r.stats.max_reference_gap, 1e-6);
  EXPECT_EQ(r.t, 32u);
  EXPECT_EQ(r.good_set->check, GoodSetCheck::kExhaustive);
}

TEST(Verify, ConstantTrueWithZeroPolynomial) {
  const LinearPolynomial zero(Modulus(7), {0, 0, 0});
  const auto c = compile_single(zero, sample(0.3, Modulus(7), 0));
  const auto r = verify("TRUE", [](const Bits &) { return true; }, c.program, 0.3);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.stats.zeros, 0u);
  EXPECT_FALSE(r.stats.max_accept_on_zeros.has_value());
}

TEST(Verify, PermThreeExhaustive) {
  const auto campaign = run_single_campaign(perm_case(3), 0.2, 0);
  EXPECT_TRUE(campaign.report.pass);
  EXPECT_EQ(campaign.report.stats.visited, 512u);
  EXPECT_EQ(campaign.report.stats.ones, 6u);  // 3! permutation matrices
  EXPECT_EQ(campaign.report.good_set->check, GoodSetCheck::kExhaustive);
}

TEST(Verify, DetectsBrokenProgram) {
  // A program that always accepts violates the bound on 0-inputs.
  const LinearPolynomial zero(Modulus(3), {0, 0, 0, 0});
  const auto c = compile_single(zero, sample(0.3, Modulus(3), 0));
  const auto r = verify("MOD_3", mod_function(3), c.program, 0.3);
  EXPECT_FALSE(r.pass);
  EXPECT_NEAR(*r.stats.max_accept_on_zeros, 1.0, 1e-9);
}

TEST(Verify, ExhaustiveGuard) {
  const auto g = mod_polynomial(25, 3);
  const auto c = compile_single(g, sample(0.3, g.modulus(), 0));
  EXPECT_THROW(verify("MOD_3", mod_function(3), c.program, 0.3), TooLarge);
  VerifyOptions sampled;
  sampled.mode = Sampled{500, 9};
  const auto r = verify("MOD_3", mod_function(3), c.program, 0.3, sampled);
  EXPECT_EQ(r.stats.visited, 500u);
}

TEST(Verify, SampledModeIsDeterministic) {
  const auto a = run_single_campaign(eq_case(4), 0.3, 2, GoodSetPolicy::kAuto, Sampled{300, 5});
  const auto b = run_single_campaign(eq_case(4), 0.3, 2, GoodSetPolicy::kAuto, Sampled{300, 5});
  EXPECT_EQ(a.report.stats, b.report.stats);
}

TEST(Sweep, PartitionInvariance) {
  const auto g = palindrome_polynomial(9);
  const auto c = compile_single(g, sample(0.3, g.modulus(), 1));
  VerifyOptions options;
  options.reference = [&](const Bits &s) { return closed_form_single(g, c.good_set, s); };
  const SweepStats serial = sweep(palindrome_function(), c.program, options);
  EXPECT_EQ(serial.visited, 512u);
  for (unsigned workers : {2u, 3u, 8u, 1000u}) {
    options.workers = workers;
    EXPECT_EQ(sweep(palindrome_function(), c.program, options), serial) << workers;
  }
}

TEST(Sweep, MergeIsAssociativeAndCommutative) {
  SweepStats a, b, c;
  a.record(true, 1.0);
  a.record(false, 0.1);
  b.record(false, 0.3);
  b.filtered_out = 2;
  c.record(true, 0.999999);
  c.max_reference_gap = 1e-7;
  EXPECT_EQ(merge(merge(a, b), c), merge(a, merge(b, c)));
  EXPECT_EQ(merge(a, b), merge(b, a));
  EXPECT_EQ(merge(a, SweepStats{}), a);
}

TEST(Sweep, VisitsEveryInputOnce) {
  std::vector<int> seen(1 << 8, 0);
  const InputSource inputs(8, Exhaustive{});
  for (std::uint64_t i = 0; i < inputs.size(); ++i) ++seen[index_from_bits(inputs[i])];
  for (int v : seen) EXPECT_EQ(v, 1);
}

TEST(ReferenceFunctions, AgreeWithTestOracles) {
  for (std::uint64_t i = 0; i < 512; ++i) {
    const Bits s = bits_from_index(i, 9);
    EXPECT_EQ(perm_function(3)(s), oracle::is_permutation_matrix(s, 3));
    EXPECT_EQ(palindrome_function()(s), oracle::is_palindrome(s));
    EXPECT_EQ(mod_function(4)(s), oracle::popcount(s) % 4 == 0);
  }
  for (std::uint64_t i = 0; i < 256; ++i) {
    const Bits s = bits_from_index(i, 8);
    EXPECT_EQ(eq_function(4)(s), oracle::strings_equal(s, 4));
  }
}

TEST(RealizedResidues, SortedNonzeroAndFiltered) {
  const auto g = mod_polynomial(3, 5);
  EXPECT_EQ(realized_residues({g}, 3), (std::vector<BigInt>{1, 2, 3}));
  InputPredicate only_zero = [](const Bits &s) { return oracle::popcount(s) == 0; };
  EXPECT_TRUE(realized_residues({g}, 3, Exhaustive{}, only_zero).empty());
}

TEST(WidthTable, MeasuredWidths) {
  EXPECT_TRUE(width_table({}).empty());
  EXPECT_EQ(format_width_table({}), "");
  const auto mod64 = mod_case(64, 64);
  const auto eq4 = eq_case(4);
  const auto c1 = compile_single(mod64.polynomial, sample(0.25, mod64.polynomial.modulus(), 0));
  const auto c2 = compile_single(eq4.polynomial, sample(0.25, eq4.polynomial.modulus(), 0));
  const auto rows = width_table({{mod64.name, &c1.program, mod64.deterministic_bound},
                                 {eq4.name, &c2.program, eq4.deterministic_bound}});
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].metrics.width, 128u);
  EXPECT_EQ(rows[0].deterministic_bound, "Omega(m)");
  EXPECT_EQ(rows[1].metrics.width, 2 * required_size(0.25, 16));
  EXPECT_EQ(rows[1].deterministic_bound, "2^Omega(n)");
  const std::string text = format_width_table(rows);
  EXPECT_NE(text.find("MOD_64"), std::string::npos);
  EXPECT_NE(text.find("128"), std::string::npos);
}

TEST(HsfCampaign, ZFourUnderPromise) {
  HsfInstance inst(FiniteGroup::cyclic(4), NormalSubgroup(FiniteGroup::cyclic(4), {0, 2}));
  const auto campaign = run_hsf_campaign(inst, 0.25, 0);
  const auto &r = campaign.report;
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.stats.visited, 16u);
  EXPECT_EQ(r.stats.ones, 2u);  // (1,2,1,2) and (2,1,2,1)
  EXPECT_EQ(r.stats.ones + r.stats.zeros + r.stats.filtered_out, 16u);
  EXPECT_DOUBLE_EQ(r.bound, 0.75);
}

}  // namespace
}  // namespace qobdd
