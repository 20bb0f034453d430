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

#ifndef SEBQ_COST_H_
#define SEBQ_COST_H_

#include <cstddef>
#include <cstdint>
#include <string>

namespace sebq {

// n + (l - 1)(n + k) operations to encrypt l blocks under an n-block
// leader; decryption costs the same. Throws InvalidArgument for n = 0 or
// l = 0.
std::uint64_t OperationCount(std::uint64_t n, std::uint64_t k,
                             std::uint64_t l);

// Encryption plus decryption.
inline std::uint64_t SchemeOperationCount(std::uint64_t n, std::uint64_t k,
                                          std::uint64_t l) {
  return 2 * OperationCount(n, k, l);
}

// Operations one trial decryption costs an exhaustive key search on a
// 128-bit ciphertext (n = 8, k = 4, l = 32).
inline constexpr std::uint64_t kReferenceTrialOps = 380;

// How the Latin square count L(m) is estimated.
enum class CountPolicy {
  kExact,       // exact counts for m <= 10, the log2 lower bound above that
  kLowerBound,  // the log2 lower bound everywhere
};

const char* CountPolicyName(CountPolicy policy);

double Log2KeySpace(std::size_t order, CountPolicy policy);

// Smallest order m with log2 L(m) + log2(ops) >= target_bits.
// Throws InvalidArgument for target_bits = 0 or ops = 0.
std::size_t MinSecureOrder(unsigned target_bits,
                           std::uint64_t ops = kReferenceTrialOps,
                           CountPolicy policy = CountPolicy::kExact);

// Human-readable summaries, including the reference figures these
// computations disagree with.
std::string OperationCountReport(std::uint64_t n, std::uint64_t k,
                                 std::uint64_t l);
std::string SecureOrderReport(unsigned target_bits,
                              std::uint64_t ops = kReferenceTrialOps);

}  // namespace sebq

#endif  // SEBQ_COST_H_
