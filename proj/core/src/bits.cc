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

#include "sebq/bits.h"

#include "sebq/errors.h"

namespace sebq {
namespace {

void CheckK(int k) {
  if (k < 1 || k > 8) throw InvalidArgument("bits per symbol must be 1..8");
}

class BitWriter {
 public:
  void Put(unsigned value, int width) {
    for (int b = width - 1; b >= 0; --b) PutBit((value >> b) & 1u);
  }
  void PutBit(unsigned bit) {
    if (length_ % 8 == 0) bytes_.push_back(0);
    if (bit) bytes_.back() |= static_cast<std::uint8_t>(0x80u >> (length_ % 8));
    ++length_;
  }
  std::uint64_t length() const { return length_; }
  std::vector<std::uint8_t> Take() { return std::move(bytes_); }

 private:
  std::vector<std::uint8_t> bytes_;
  std::uint64_t length_ = 0;
};

}  // namespace

BitString BitString::FromBytes(std::vector<std::uint8_t> bytes) {
  BitString s;
  s.bit_length = static_cast<std::uint64_t>(bytes.size()) * 8;
  s.bytes = std::move(bytes);
  return s;
}

BitString BitString::FromBits(std::span<const std::uint8_t> bits) {
  BitWriter writer;
  for (std::uint8_t b : bits) writer.PutBit(b ? 1u : 0u);
  BitString s;
  s.bit_length = writer.length();
  s.bytes = writer.Take();
  return s;
}

std::vector<std::uint8_t> BitString::ToBits() const {
  std::vector<std::uint8_t> bits(bit_length);
  for (std::uint64_t i = 0; i < bit_length; ++i) bits[i] = bit(i);
  return bits;
}

std::vector<std::uint8_t> PackBits(std::span<const Symbol> blocks, int k) {
  CheckK(k);
  BitWriter writer;
  for (Symbol s : blocks) {
    if (s >> k) throw InvalidArgument("symbol does not fit in k bits");
    writer.Put(s, k);
  }
  return writer.Take();
}

BlockVector UnpackBits(std::span<const std::uint8_t> bytes, int k,
                       std::size_t count) {
  CheckK(k);
  const std::uint64_t needed = static_cast<std::uint64_t>(count) * k;
  if (static_cast<std::uint64_t>(bytes.size()) * 8 < needed)
    throw InvalidArgument("not enough bytes to unpack the requested blocks");
  BlockVector blocks(count);
  std::uint64_t pos = 0;
  for (std::size_t i = 0; i < count; ++i) {
    unsigned value = 0;
    for (int b = 0; b < k; ++b, ++pos)
      value = (value << 1) | ((bytes[pos / 8] >> (7 - pos % 8)) & 1u);
    blocks[i] = static_cast<Symbol>(value);
  }
  return blocks;
}

std::uint64_t PaddedBlockCount(std::uint64_t bit_length, int k) {
  CheckK(k);
  return bit_length / k + 1;
}

BlockVector Pad(const BitString& bits, int k) {
  CheckK(k);
  const std::uint64_t blocks = PaddedBlockCount(bits.bit_length, k);
  BitWriter writer;
  for (std::uint64_t i = 0; i < bits.bit_length; ++i) writer.PutBit(bits.bit(i));
  writer.PutBit(1);
  while (writer.length() < blocks * k) writer.PutBit(0);
  const std::vector<std::uint8_t> packed = writer.Take();
  return UnpackBits(packed, k, blocks);
}

BitString Unpad(std::span<const Symbol> blocks, int k) {
  CheckK(k);
  if (blocks.empty()) throw PaddingError("no padding block");
  const Symbol last = blocks.back();
  if (last >> k) throw PaddingError("padding block symbol out of range");
  if (last == 0) throw PaddingError("padding block holds no 1 bit");
  // Data bits in the last block sit above its lowest set bit.
  int trailing = 0;
  while (((last >> trailing) & 1u) == 0) ++trailing;
  const int data_in_last = k - 1 - trailing;

  BitWriter writer;
  for (std::size_t i = 0; i + 1 < blocks.size(); ++i) {
    if (blocks[i] >> k) throw PaddingError("symbol out of range");
    writer.Put(blocks[i], k);
  }
  writer.Put(static_cast<unsigned>(last) >> (trailing + 1), data_in_last);
  BitString out;
  out.bit_length = writer.length();
  out.bytes = writer.Take();
  return out;
}

}  // namespace sebq
