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

#ifndef SEBQ_BITS_H_
#define SEBQ_BITS_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "sebq/string_transforms.h"

namespace sebq {

// A bit string stored most-significant-bit first; bits past bit_length in
// the last byte are zero.
struct BitString {
  std::vector<std::uint8_t> bytes;
  std::uint64_t bit_length = 0;

  static BitString FromBytes(std::vector<std::uint8_t> bytes);
  // One 0/1 entry per bit.
  static BitString FromBits(std::span<const std::uint8_t> bits);
  std::vector<std::uint8_t> ToBits() const;
  bool bit(std::uint64_t i) const {
    return (bytes[i / 8] >> (7 - i % 8)) & 1u;
  }

  friend bool operator==(const BitString&, const BitString&) = default;
};

// Packs k-bit symbols MSB first with no gaps; k in 1..8.
std::vector<std::uint8_t> PackBits(std::span<const Symbol> blocks, int k);

// Inverse of PackBits. Throws InvalidArgument when `bytes` holds fewer than
// count*k bits.
BlockVector UnpackBits(std::span<const std::uint8_t> bytes, int k,
                       std::size_t count);

// Number of k-bit blocks Pad produces for a bit_length-bit input.
std::uint64_t PaddedBlockCount(std::uint64_t bit_length, int k);

// "10*" padding: append a 1 bit and then 0 bits up to the next multiple of k,
// then split into k-bit symbols. Block-aligned input gains one full block.
BlockVector Pad(const BitString& bits, int k);

// Strips exactly one 10* suffix. Throws PaddingError when the final block
// holds no 1 bit.
BitString Unpad(std::span<const Symbol> blocks, int k);

}  // namespace sebq

#endif  // SEBQ_BITS_H_
