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

#include <algorithm>
#include <cmath>
#include <string>

#include <boost/math/special_functions/gamma.hpp>

#include "sebq/errors.h"

namespace sebq {
namespace {

double Igamc(double a, double x) {
  if (x <= 0) return 1.0;
  return boost::math::gamma_q(a, x);
}

double NormalCdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

double Clamp01(double p) { return std::clamp(p, 0.0, 1.0); }

// psi^2_m of the serial test: overlapping m-bit pattern counts with
// wrap-around.
double PsiSquared(BitSpan bits, int m) {
  if (m <= 0) return 0.0;
  const std::size_t n = bits.size();
  std::vector<std::uint64_t> counts(std::size_t{1} << m, 0);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t pattern = 0;
    for (int j = 0; j < m; ++j) pattern = (pattern << 1) | bits[(i + j) % n];
    ++counts[pattern];
  }
  double sum = 0;
  for (std::uint64_t c : counts) sum += static_cast<double>(c) * c;
  return sum * static_cast<double>(counts.size()) / n - static_cast<double>(n);
}

// phi^(m) of approximate entropy.
double Phi(BitSpan bits, int m) {
  if (m == 0) return 0.0;
  const std::size_t n = bits.size();
  std::vector<std::uint64_t> counts(std::size_t{1} << m, 0);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t pattern = 0;
    for (int j = 0; j < m; ++j) pattern = (pattern << 1) | bits[(i + j) % n];
    ++counts[pattern];
  }
  double sum = 0;
  for (std::uint64_t c : counts) {
    if (c == 0) continue;
    const double p = static_cast<double>(c) / n;
    sum += p * std::log(p);
  }
  return sum;
}

void CheckBits(BitSpan bits) {
  for (std::uint8_t b : bits)
    if (b > 1) throw InvalidArgument("bit sequence entries must be 0 or 1");
}

}  // namespace

std::optional<double> FrequencyTest(BitSpan bits) {
  if (bits.empty()) return std::nullopt;
  long long sum = 0;
  for (std::uint8_t b : bits) sum += b ? 1 : -1;
  const double s_obs = std::abs(static_cast<double>(sum)) /
                       std::sqrt(static_cast<double>(bits.size()));
  return Clamp01(std::erfc(s_obs / std::sqrt(2.0)));
}

std::optional<double> BlockFrequencyTest(BitSpan bits, std::size_t block) {
  if (block == 0 || bits.size() < block) return std::nullopt;
  const std::size_t blocks = bits.size() / block;
  double chi2 = 0;
  for (std::size_t i = 0; i < blocks; ++i) {
    std::size_t ones = 0;
    for (std::size_t j = 0; j < block; ++j) ones += bits[i * block + j];
    const double pi = static_cast<double>(ones) / block - 0.5;
    chi2 += pi * pi;
  }
  chi2 *= 4.0 * block;
  return Clamp01(Igamc(blocks / 2.0, chi2 / 2.0));
}

std::optional<double> RunsTest(BitSpan bits) {
  const std::size_t n = bits.size();
  if (n < 2) return std::nullopt;
  std::size_t ones = 0;
  for (std::uint8_t b : bits) ones += b;
  const double pi = static_cast<double>(ones) / n;
  if (std::abs(pi - 0.5) >= 2.0 / std::sqrt(static_cast<double>(n)))
    return 0.0;
  std::size_t runs = 1;
  for (std::size_t i = 1; i < n; ++i) runs += bits[i] != bits[i - 1];
  const double num = std::abs(runs - 2.0 * n * pi * (1 - pi));
  const double den = 2.0 * std::sqrt(2.0 * n) * pi * (1 - pi);
  return Clamp01(std::erfc(num / den));
}

std::optional<LongestRunTable> LongestRunTableFor(std::size_t n) {
  if (n < 128) return std::nullopt;
  if (n < 6272)
    return LongestRunTable{8, {1, 2, 3}, {0.2148, 0.3672, 0.2305, 0.1875}};
  if (n < 750000)
    return LongestRunTable{128,
                           {4, 5, 6, 7, 8},
                           {0.1174, 0.2430, 0.2493, 0.1752, 0.1027, 0.1124}};
  // Exact category probabilities for 10^4-bit blocks. The widely copied
  // table (0.0882, 0.2092, ...) is off by up to 1.6e-3.
  return LongestRunTable{
      10000,
      {10, 11, 12, 13, 14, 15},
      {0.0866, 0.2082, 0.2484, 0.1939, 0.1215, 0.0680, 0.0734}};
}

std::optional<double> LongestRunTest(BitSpan bits) {
  const std::size_t n = bits.size();
  const auto table = LongestRunTableFor(n);
  if (!table) return std::nullopt;
  const std::size_t block = table->block;
  const std::vector<std::size_t>& edges = table->edges;
  const std::vector<double>& pi = table->pi;
  const std::size_t blocks = n / block;
  std::vector<std::size_t> v(pi.size(), 0);
  for (std::size_t i = 0; i < blocks; ++i) {
    std::size_t longest = 0, run = 0;
    for (std::size_t j = 0; j < block; ++j) {
      run = bits[i * block + j] ? run + 1 : 0;
      longest = std::max(longest, run);
    }
    // Lowest category absorbs shorter runs, highest absorbs longer ones.
    std::size_t cat = 0;
    while (cat < edges.size() && longest > edges[cat]) ++cat;
    ++v[cat];
  }
  double chi2 = 0;
  for (std::size_t i = 0; i < pi.size(); ++i) {
    const double expected = blocks * pi[i];
    chi2 += (v[i] - expected) * (v[i] - expected) / expected;
  }
  return Clamp01(Igamc(edges.size() / 2.0, chi2 / 2.0));
}

std::optional<double> CumulativeSumsTest(BitSpan bits, bool forward) {
  const std::size_t n = bits.size();
  if (n == 0) return std::nullopt;
  long long s = 0, z = 0;
  for (std::size_t i = 0; i < n; ++i) {
    s += bits[forward ? i : n - 1 - i] ? 1 : -1;
    z = std::max(z, std::abs(s));
  }
  if (z == 0) return 1.0;
  const double nd = static_cast<double>(n), zd = static_cast<double>(z);
  const double root = std::sqrt(nd);
  double sum1 = 0, sum2 = 0;
  for (long long k = static_cast<long long>(std::floor((-nd / zd + 1) / 4));
       k <= static_cast<long long>(std::floor((nd / zd - 1) / 4)); ++k) {
    sum1 += NormalCdf((4 * k + 1) * zd / root) -
            NormalCdf((4 * k - 1) * zd / root);
  }
  for (long long k = static_cast<long long>(std::floor((-nd / zd - 3) / 4));
       k <= static_cast<long long>(std::floor((nd / zd - 1) / 4)); ++k) {
    sum2 += NormalCdf((4 * k + 3) * zd / root) -
            NormalCdf((4 * k + 1) * zd / root);
  }
  return Clamp01(1.0 - sum1 + sum2);
}

std::optional<std::pair<double, double>> SerialTest(BitSpan bits, int m) {
  if (m < 2 || m > 24 || bits.size() < (std::size_t{1} << m))
    return std::nullopt;
  const double psi_m = PsiSquared(bits, m);
  const double psi_m1 = PsiSquared(bits, m - 1);
  const double psi_m2 = PsiSquared(bits, m - 2);
  const double d1 = psi_m - psi_m1;
  const double d2 = psi_m - 2 * psi_m1 + psi_m2;
  return std::make_pair(Clamp01(Igamc(std::ldexp(1.0, m - 2), d1 / 2)),
                        Clamp01(Igamc(std::ldexp(1.0, m - 3), d2 / 2)));
}

std::optional<double> ApproximateEntropyTest(BitSpan bits, int m) {
  const std::size_t n = bits.size();
  if (m < 1 || m > 24 || n < (std::size_t{1} << m)) return std::nullopt;
  const double apen = Phi(bits, m) - Phi(bits, m + 1);
  const double chi2 = 2.0 * n * (std::log(2.0) - apen);
  return Clamp01(Igamc(std::ldexp(1.0, m - 1), chi2 / 2));
}

std::vector<TestReport> RandomnessSuite(BitSpan bits, double alpha) {
  if (bits.size() < kMinSuiteBits)
    throw InvalidArgument("randomness suite needs at least " +
                          std::to_string(kMinSuiteBits) + " bits, got " +
                          std::to_string(bits.size()));
  if (!(alpha > 0 && alpha < 1))
    throw InvalidArgument("significance level must be in (0, 1)");
  CheckBits(bits);

  std::vector<TestReport> out;
  auto add = [&](const char* name, std::optional<double> p) {
    TestReport r;
    r.name = name;
    r.length = bits.size();
    r.skipped = !p.has_value();
    r.p_value = p.value_or(0.0);
    r.passed = p && *p >= alpha;
    out.push_back(std::move(r));
  };
  add("frequency", FrequencyTest(bits));
  add("block_frequency", BlockFrequencyTest(bits));
  add("runs", RunsTest(bits));
  add("longest_run", LongestRunTest(bits));
  add("cusum_forward", CumulativeSumsTest(bits, true));
  add("cusum_backward", CumulativeSumsTest(bits, false));
  // Recommended pattern-length limits: m < log2(n) - 2 and m < log2(n) - 5.
  constexpr int kSerialM = 5, kEntropyM = 4;
  const auto serial = bits.size() >= (std::size_t{1} << (kSerialM + 2))
                          ? SerialTest(bits, kSerialM)
                          : std::nullopt;
  add("serial_1", serial ? std::optional(serial->first) : std::nullopt);
  add("serial_2", serial ? std::optional(serial->second) : std::nullopt);
  add("approximate_entropy",
      bits.size() >= (std::size_t{1} << (kEntropyM + 5))
          ? ApproximateEntropyTest(bits, kEntropyM)
          : std::nullopt);
  return out;
}

}  // namespace sebq
