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

#ifndef SEBQ_FRAME_H_
#define SEBQ_FRAME_H_

#include <cstdint>
#include <span>
#include <vector>

#include "sebq/bits.h"
#include "sebq/cipher.h"
#include "sebq/feistel.h"

namespace sebq {

inline constexpr std::uint8_t kFrameVersionPlain = 0x01;
inline constexpr std::uint8_t kFrameVersionCca2 = 0x02;

// Wire layout, all integers big-endian:
//   "SEBQ" | version (1) | k (1) | n (2) | plaintext bits (8)
//   | v2 only: a (2) | expander id (1)
//   | IV, n symbols packed | payload, padded ciphertext packed
struct CipherFrame {
  std::uint8_t version = kFrameVersionPlain;
  int k = 0;
  BlockVector iv;
  std::uint64_t bit_length = 0;
  std::uint16_t a = 0;
  std::uint8_t expander_id = kDefaultExpanderId;
  std::vector<std::uint8_t> payload;

  std::uint64_t block_count() const { return PaddedBlockCount(bit_length, k); }

  friend bool operator==(const CipherFrame&, const CipherFrame&) = default;
};

std::vector<std::uint8_t> SerializeFrame(const CipherFrame& frame);

// Throws FrameError: kBadMagic, kBadVersion, kTruncated when the buffer is
// too short, kInconsistent when fields disagree with each other or the
// payload size.
CipherFrame ParseFrame(std::span<const std::uint8_t> bytes);

// Pads, encrypts and frames `plaintext`.
CipherFrame SealPlain(const SebqKey& key, std::span<const Symbol> iv,
                      const BitString& plaintext);
CipherFrame SealCca2(const Cca2Key& key, std::span<const Symbol> iv,
                     const BitString& plaintext);

// Inverse of the Seal functions. Throws InvalidArgument when the frame's k
// or scheme does not match the key, PaddingError on malformed padding.
BitString OpenPlain(const SebqKey& key, const CipherFrame& frame);
BitString OpenCca2(const Cca2Key& key, const CipherFrame& frame);

}  // namespace sebq

#endif  // SEBQ_FRAME_H_
