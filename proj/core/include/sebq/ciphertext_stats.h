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

#ifndef SEBQ_CIPHERTEXT_STATS_H_
#define SEBQ_CIPHERTEXT_STATS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sebq/cipher.h"
#include "sebq/randomness.h"

namespace sebq {

enum class MessageKind { kRandom, kZeros, kOnes };

const char* MessageKindName(MessageKind kind);
// Accepts "random", "zeros" and "ones".
std::optional<MessageKind> ParseMessageKind(const std::string& name);

struct CiphertextStatsParams {
  int k = 4;
  std::size_t message_bits = 4000;
  std::size_t iv_bits = 400;
  std::size_t sequences = 100;
  double alpha = 0.01;
  MessageKind message = MessageKind::kRandom;
  std::uint64_t seed = 1;
};

struct SubTestTally {
  std::string name;
  std::size_t passes = 0;
  std::size_t ran = 0;  // sequences not skipped
  double p_sum = 0;
};

struct CiphertextStatsReport {
  std::size_t sequences = 0;
  std::vector<SubTestTally> tests;  // suite order

  // Smallest pass count over the sub-tests that ran.
  std::size_t MinPasses() const;
  // "test,success_percent,passes,trials,mean_p_value" rows.
  std::string ToCsv() const;
};

// Ciphertext bits of one sequence: symbols in order, most significant bit
// first.
std::vector<std::uint8_t> SymbolBits(std::span<const Symbol> blocks, int k);

// Runs the randomness suite on the ciphertexts of `sequences` messages, each
// under a fresh key and IV. Bit counts must be positive multiples of k.
CiphertextStatsReport RunCiphertextStats(const CiphertextStatsParams& params);

}  // namespace sebq

#endif  // SEBQ_CIPHERTEXT_STATS_H_
