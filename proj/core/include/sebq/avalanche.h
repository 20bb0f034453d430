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

#ifndef SEBQ_AVALANCHE_H_
#define SEBQ_AVALANCHE_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sebq/cipher.h"

namespace sebq {

enum class AvalancheTarget { kKey, kIv, kPlaintext };

const char* AvalancheTargetName(AvalancheTarget target);
// Accepts "key", "iv" and "plaintext".
std::optional<AvalancheTarget> ParseAvalancheTarget(const std::string& name);

// Percentage of differing bits between two equal-length k-bit strings.
double PercentChanged(std::span<const Symbol> a, std::span<const Symbol> b,
                      int k);

// Flips bit `position` of a k-bit string: symbol position / k, counted from
// its most significant bit. Throws InvalidArgument past the end.
void FlipBit(BlockVector& blocks, std::size_t position, int k);

// Encrypts once as given and once with the target perturbed, and returns the
// percentage of ciphertext bits that changed. IV and plaintext targets flip
// bit `position`; the key target swaps one random intercalate of the square
// and ignores `position` (rng drives the choice).
double AvalancheOnce(AvalancheTarget target, const SebqKey& key,
                     const BlockVector& iv, const BlockVector& message,
                     std::size_t position, Rng& rng);

struct AvalancheParams {
  int k = 4;
  std::size_t iv_bits = 400;
  std::size_t message_bits = 4000;
  // Bit positions flipped; each is repeated trials_per_position times with
  // a fresh key, IV and plaintext.
  std::vector<std::size_t> positions = {0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
  std::size_t trials_per_position = 10;
  std::uint64_t seed = 1;
};

struct AvalancheReport {
  AvalancheTarget target = AvalancheTarget::kPlaintext;
  std::vector<std::size_t> positions;
  // percent[i][t]: position i, trial t.
  std::vector<std::vector<double>> percent;
  double max = 0, min = 0, mean = 0;

  std::vector<double> PositionAverages() const;
  // Header "position,trial_1..trial_T,average", one row per position.
  std::string ToCsv() const;
  std::string ToJson() const;
};

// iv_bits and message_bits must be positive multiples of k.
AvalancheReport RunAvalanche(AvalancheTarget target,
                             const AvalancheParams& params);

}  // namespace sebq

#endif  // SEBQ_AVALANCHE_H_
