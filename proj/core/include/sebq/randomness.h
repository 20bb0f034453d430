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

#ifndef SEBQ_RANDOMNESS_H_
#define SEBQ_RANDOMNESS_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace sebq {

// Bits are one 0/1 byte each throughout this header.
using BitSpan = std::span<const std::uint8_t>;

inline constexpr std::size_t kMinSuiteBits = 100;

struct TestReport {
  std::string name;
  double p_value = 0;  // 0 when skipped
  bool passed = false;
  bool skipped = false;
  std::size_t length = 0;
};

// Each test returns nullopt when the sequence is too short for it.

// Monobit: erfc(|S_n| / sqrt(2n)).
std::optional<double> FrequencyTest(BitSpan bits);
std::optional<double> BlockFrequencyTest(BitSpan bits,
                                         std::size_t block = 128);
// Returns 0 when the frequency prerequisite |pi - 1/2| < 2/sqrt(n) fails.
std::optional<double> RunsTest(BitSpan bits);
// Category layout of the longest-run test: category i < edges.size()
// holds blocks whose longest run is <= edges[i] (and above the previous
// edge); the last holds the rest. pi are the category probabilities.
struct LongestRunTable {
  std::size_t block;
  std::vector<std::size_t> edges;
  std::vector<double> pi;
};
// Block size 8, 128 or 10^4 by sequence length; nullopt below 128 bits.
std::optional<LongestRunTable> LongestRunTableFor(std::size_t n);
// Longest run of ones in blocks.
std::optional<double> LongestRunTest(BitSpan bits);
std::optional<double> CumulativeSumsTest(BitSpan bits, bool forward);
// The two p-values of the serial test with pattern length m. This and the
// entropy test only require n >= 2^m; the suite applies stricter limits.
std::optional<std::pair<double, double>> SerialTest(BitSpan bits,
                                                    int m = 5);
std::optional<double> ApproximateEntropyTest(BitSpan bits, int m = 4);

// Runs every test above. Throws InvalidArgument below kMinSuiteBits;
// tests whose recommended minimum length is not met report skipped. Test names: frequency,
// block_frequency, runs, longest_run, cusum_forward, cusum_backward,
// serial_1, serial_2, approximate_entropy.
std::vector<TestReport> RandomnessSuite(BitSpan bits, double alpha = 0.01);

}  // namespace sebq

#endif  // SEBQ_RANDOMNESS_H_
