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

#include "sebq/cost.h"

#include <cmath>
#include <sstream>

#include "sebq/counting.h"
#include "sebq/errors.h"

namespace sebq {
namespace {

constexpr std::size_t kExactCountLimit = 10;
constexpr std::size_t kOrderSearchLimit = 1u << 16;

// Published thresholds the computation is compared against: order must
// exceed 11 for 128 bits and 13 for 256 bits.
const char* ReferenceThreshold(unsigned target_bits) {
  switch (target_bits) {
    case 128: return "m > 11";
    case 256: return "m > 13";
    default: return nullptr;
  }
}

}  // namespace

std::uint64_t OperationCount(std::uint64_t n, std::uint64_t k,
                             std::uint64_t l) {
  if (n == 0) throw InvalidArgument("leader length n must be positive");
  if (l == 0) throw InvalidArgument("message must hold at least one block");
  return n + (l - 1) * (n + k);
}

const char* CountPolicyName(CountPolicy policy) {
  return policy == CountPolicy::kExact ? "exact" : "lower-bound";
}

double Log2KeySpace(std::size_t order, CountPolicy policy) {
  if (policy == CountPolicy::kExact && order <= kExactCountLimit)
    return Log2(*KnownLatinSquareCount(order));
  return LatinSquareLog2Bounds(order).lower;
}

std::size_t MinSecureOrder(unsigned target_bits, std::uint64_t ops,
                           CountPolicy policy) {
  if (target_bits == 0) throw InvalidArgument("target bits must be positive");
  if (ops == 0) throw InvalidArgument("operations per trial must be positive");
  const double needed =
      static_cast<double>(target_bits) - std::log2(static_cast<double>(ops));
  for (std::size_t m = 1; m <= kOrderSearchLimit; ++m)
    if (Log2KeySpace(m, policy) >= needed) return m;
  throw InvalidArgument("no order up to 65536 reaches the target");
}

std::string OperationCountReport(std::uint64_t n, std::uint64_t k,
                                 std::uint64_t l) {
  const std::uint64_t enc = OperationCount(n, k, l);
  std::ostringstream out;
  out << "operation_count(n=" << n << ", k=" << k << ", l=" << l
      << ") = " << enc << '\n'
      << "decryption = " << enc << ", encryption + decryption = " << 2 * enc
      << '\n'
      << "instrumented kernel: " << n * l << " table lookups, " << (n - 1) * l
      << " checksum XORs\n"
      << "note: the reference worked example (64-bit message, 16-bit IV, "
         "k = 4, so n = 4 and l = 16) quotes 70 operations; the formula gives "
      << OperationCount(4, 4, 16) << ", and no consistent (n, k, l) we found "
         "yields 70\n";
  return out.str();
}

std::string SecureOrderReport(unsigned target_bits, std::uint64_t ops) {
  const std::size_t exact = MinSecureOrder(target_bits, ops, CountPolicy::kExact);
  const std::size_t lower =
      MinSecureOrder(target_bits, ops, CountPolicy::kLowerBound);
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(2);
  out << "target " << target_bits << " bits, " << ops
      << " operations per trial (log2 " << std::log2(static_cast<double>(ops))
      << ")\n"
      << "min order, exact policy (known L(m) for m <= 10, lower bound "
         "beyond): "
      << exact << " (log2 L = " << Log2KeySpace(exact, CountPolicy::kExact)
      << ")\n"
      << "min order, lower-bound policy: " << lower
      << " (log2 L >= " << Log2KeySpace(lower, CountPolicy::kLowerBound)
      << ")\n";
  if (const char* reference = ReferenceThreshold(target_bits)) {
    out << "reference threshold: " << reference << "; computed: " << exact
        << " (exact policy), " << lower << " (lower-bound policy)";
    if (exact != lower) out << ", so the answer depends on the policy";
    out << '\n';
  }
  return out.str();
}

}  // namespace sebq
