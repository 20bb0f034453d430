/*
 * Copyright 2026 The SEBQ Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "sebq/randomness.h"

#include <cmath>
#include <string_view>

#include <gtest/gtest.h>

#include "sebq/errors.h"
#include "sebq/rng.h"

namespace sebq {
namespace {

std::vector<std::uint8_t> Bits(std::string_view s) {
  std::vector<std::uint8_t> out;
  for (char c : s) out.push_back(c == '1');
  return out;
}

// First 100 bits of the binary expansion of pi.
constexpr std::string_view kPi100 =
    "11001001000011111101101010100010001000010110100011"
    "00001000110100110001001100011001100010100010111000";

std::vector<std::uint8_t> RandomBits(std::size_t n, std::uint64_t seed) {
  Rng rng = MakeRng(seed);
  std::vector<std::uint8_t> out(n);
  for (auto& b : out) b = static_cast<std::uint8_t>(rng() & 1);
  return out;
}

// P(longest run of ones in `block` bits <= r), by dynamic programming over
// the length of the current run.
double LongestRunAtMost(std::size_t block, std::size_t r) {
  std::vector<double> p(r + 1, 0.0);
  p[0] = 1.0;
  for (std::size_t i = 0; i < block; ++i) {
    std::vector<double> next(r + 1, 0.0);
    for (std::size_t j = 0; j <= r; ++j) {
      next[0] += p[j] / 2;
      if (j + 1 <= r) next[j + 1] += p[j] / 2;
    }
    p = std::move(next);
  }
  double total = 0;
  for (double x : p) total += x;
  return total;
}

TEST(Frequency, WorkedExamples) {
  EXPECT_NEAR(*FrequencyTest(Bits("1011010101")), 0.527089, 1e-6);
  EXPECT_NEAR(*FrequencyTest(Bits(kPi100)), 0.109599, 1e-6);
}

TEST(BlockFrequency, WorkedExamples) {
  EXPECT_NEAR(*BlockFrequencyTest(Bits("0110011010"), 3), 0.801252, 1e-6);
  EXPECT_NEAR(*BlockFrequencyTest(Bits(kPi100), 10), 0.706438, 1e-6);
  EXPECT_FALSE(BlockFrequencyTest(Bits("0101"), 8).has_value());
}

TEST(Runs, WorkedExamples) {
  EXPECT_NEAR(*RunsTest(Bits("1001101011")), 0.147232, 1e-6);
  EXPECT_NEAR(*RunsTest(Bits(kPi100)), 0.500798, 1e-6);
}

TEST(Runs, FailedPrerequisiteGivesZero) {
  EXPECT_EQ(*RunsTest(std::vector<std::uint8_t>(200, 1)), 0.0);
}

TEST(CumulativeSums, WorkedExamples) {
  // Exact value; the commonly quoted 0.4116588 was computed with rounded
  // normal-distribution values and differs by 7e-5.
  const double short_p = *CumulativeSumsTest(Bits("1011010111"), true);
  EXPECT_NEAR(short_p, 0.4115847, 1e-6);
  EXPECT_NEAR(short_p, 0.4116588, 1e-4);
  EXPECT_NEAR(*CumulativeSumsTest(Bits(kPi100), true), 0.219194, 1e-6);
  EXPECT_NEAR(*CumulativeSumsTest(Bits(kPi100), false), 0.114866, 1e-6);
}

TEST(Serial, WorkedExample) {
  const auto p = SerialTest(Bits("0011011101"), 3);
  ASSERT_TRUE(p.has_value());
  EXPECT_NEAR(p->first, 0.808792, 1e-6);
  EXPECT_NEAR(p->second, 0.670320, 1e-6);
  EXPECT_FALSE(SerialTest(Bits("0011011"), 3).has_value());
}

TEST(ApproximateEntropy, WorkedExamples) {
  EXPECT_NEAR(*ApproximateEntropyTest(Bits("0100110101"), 3), 0.261961,
              1e-6);
  EXPECT_NEAR(*ApproximateEntropyTest(Bits(kPi100), 2), 0.235301, 1e-6);
}

TEST(LongestRun, TablesMatchRunLengthDistribution) {
  for (std::size_t n : {128u, 6272u, 750000u}) {
    const auto table = LongestRunTableFor(n);
    ASSERT_TRUE(table.has_value());
    ASSERT_EQ(table->pi.size(), table->edges.size() + 1);
    double below = 0, sum = 0;
    for (std::size_t i = 0; i < table->pi.size(); ++i) {
      const double upto = i < table->edges.size()
                              ? LongestRunAtMost(table->block, table->edges[i])
                              : 1.0;
      EXPECT_NEAR(table->pi[i], upto - below, 6e-4)
          << "block " << table->block << " category " << i;
      below = upto;
      sum += table->pi[i];
    }
    EXPECT_NEAR(sum, 1.0, 2e-3);
  }
  EXPECT_EQ(LongestRunTableFor(6271)->block, 8u);
  EXPECT_EQ(LongestRunTableFor(749999)->block, 128u);
  EXPECT_FALSE(LongestRunTableFor(127).has_value());
}

TEST(LongestRun, MatchesDirectChiSquare) {
  // Blocks of 8 with longest runs 0, 2, 3, 4, 8 and 1.
  const auto bits = Bits(
      "00000000" "11011000" "01110100" "11110000" "11111111" "10101010"
      "00000000" "11011000" "01110100" "11110000" "11111111" "10101010"
      "00000000" "11011000" "01110100" "11110000");
  // Categories <=1, 2, 3, >=4 receive 5, 3, 3, 5 blocks.
  const double expected[] = {0.2148, 0.3672, 0.2305, 0.1875};
  const double observed[] = {5, 3, 3, 5};
  double chi2 = 0;
  for (int i = 0; i < 4; ++i) {
    const double e = 16 * expected[i];
    chi2 += (observed[i] - e) * (observed[i] - e) / e;
  }
  // igamc(3/2, x/2) for three degrees of freedom.
  const double x = chi2;
  const double p = std::erfc(std::sqrt(x / 2)) +
                   std::sqrt(2 * x / M_PI) * std::exp(-x / 2);
  EXPECT_NEAR(*LongestRunTest(bits), p, 1e-9);
}

TEST(Suite, NamesAndOrder) {
  const auto reports = RandomnessSuite(RandomBits(4000, 1));
  const std::vector<std::string> names = {
      "frequency",     "block_frequency", "runs",
      "longest_run",   "cusum_forward",   "cusum_backward",
      "serial_1",      "serial_2",        "approximate_entropy"};
  ASSERT_EQ(reports.size(), names.size());
  for (std::size_t i = 0; i < names.size(); ++i) {
    EXPECT_EQ(reports[i].name, names[i]);
    EXPECT_FALSE(reports[i].skipped);
    EXPECT_EQ(reports[i].length, 4000u);
    EXPECT_GE(reports[i].p_value, 0.0);
    EXPECT_LE(reports[i].p_value, 1.0);
  }
}

TEST(Suite, ConstantSequencesFail) {
  for (std::uint8_t bit : {0, 1}) {
    const auto reports =
        RandomnessSuite(std::vector<std::uint8_t>(4000, bit));
    for (const TestReport& r : reports) {
      EXPECT_FALSE(r.passed) << r.name;
    }
  }
}

TEST(Suite, AlternatingSequence) {
  std::vector<std::uint8_t> bits(4000);
  for (std::size_t i = 0; i < bits.size(); ++i) bits[i] = i & 1;
  const auto reports = RandomnessSuite(bits);
  EXPECT_DOUBLE_EQ(reports[0].p_value, 1.0);
  EXPECT_TRUE(reports[0].passed);
  EXPECT_FALSE(reports[2].passed);
}

TEST(Suite, ShortSequences) {
  EXPECT_THROW(RandomnessSuite(RandomBits(99, 1)), InvalidArgument);
  const auto reports = RandomnessSuite(RandomBits(100, 1));
  EXPECT_FALSE(reports[0].skipped);
  EXPECT_TRUE(reports[1].skipped);  // block of 128
  EXPECT_TRUE(reports[3].skipped);
  EXPECT_TRUE(reports[6].skipped);
  EXPECT_TRUE(reports[8].skipped);
  EXPECT_FALSE(reports[8].passed);
}

TEST(Suite, RejectsBadInput) {
  auto bits = RandomBits(200, 2);
  EXPECT_THROW(RandomnessSuite(bits, 0.0), InvalidArgument);
  EXPECT_THROW(RandomnessSuite(bits, 1.0), InvalidArgument);
  bits[5] = 2;
  EXPECT_THROW(RandomnessSuite(bits), InvalidArgument);
}

TEST(Suite, GeneratorOutputPassesAtExpectedRate) {
  std::vector<int> passes(9, 0);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto reports = RandomnessSuite(RandomBits(4000, 1000 + seed));
    for (std::size_t i = 0; i < reports.size(); ++i)
      passes[i] += reports[i].passed;
  }
  // At alpha 0.01, 100 sequences pass with rate >= 0.96 except with small
  // probability; 95 leaves room for the dependence of serial_1 and serial_2.
  for (std::size_t i = 0; i < passes.size(); ++i)
    EXPECT_GE(passes[i], 95) << "test " << i;
}

}  // namespace
}  // namespace sebq
