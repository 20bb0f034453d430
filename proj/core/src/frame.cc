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

#include "sebq/frame.h"

#include <algorithm>
#include <string>

#include "sebq/errors.h"

namespace sebq {
namespace {

constexpr std::uint8_t kMagic[4] = {'S', 'E', 'B', 'Q'};
constexpr std::size_t kFixedHeader = 4 + 1 + 1 + 2 + 8;
constexpr std::size_t kCca2Extra = 2 + 1;

std::size_t PackedSize(std::uint64_t symbols, int k) {
  return static_cast<std::size_t>((symbols * k + 7) / 8);
}

void PutBE(std::vector<std::uint8_t>& out, std::uint64_t value, int width) {
  for (int i = width - 1; i >= 0; --i)
    out.push_back(static_cast<std::uint8_t>(value >> (8 * i)));
}

std::uint64_t GetBE(std::span<const std::uint8_t> bytes, std::size_t& pos,
                    int width) {
  std::uint64_t value = 0;
  for (int i = 0; i < width; ++i) value = (value << 8) | bytes[pos++];
  return value;
}

[[noreturn]] void Fail(FrameError::Reason reason, const std::string& what) {
  throw FrameError(reason, "frame: " + what);
}

void CheckFrameK(int k) {
  if (k < kMinSymbolBits || k > kMaxSymbolBits)
    Fail(FrameError::Reason::kInconsistent,
         "symbol width " + std::to_string(k) + " outside 1..8");
}

void CheckKeyMatches(const SebqKey& key, const CipherFrame& frame,
                     std::uint8_t version) {
  if (frame.version != version)
    throw InvalidArgument("frame scheme does not match the key type");
  if (frame.k != key.bits())
    throw InvalidArgument("frame uses k=" + std::to_string(frame.k) +
                          " but the key has k=" + std::to_string(key.bits()));
}

BlockVector PayloadBlocks(const CipherFrame& frame) {
  return UnpackBits(frame.payload, frame.k,
                    static_cast<std::size_t>(frame.block_count()));
}

BitString UnpadTo(std::span<const Symbol> blocks, const CipherFrame& frame) {
  BitString bits = Unpad(blocks, frame.k);
  if (bits.bit_length != frame.bit_length)
    throw PaddingError("padding disagrees with the recorded bit length");
  return bits;
}

}  // namespace

std::vector<std::uint8_t> SerializeFrame(const CipherFrame& frame) {
  CheckFrameK(frame.k);
  if (frame.iv.empty() || frame.iv.size() > 0xFFFF)
    throw InvalidArgument("IV length must be in 1..65535 blocks");
  if (frame.version != kFrameVersionPlain &&
      frame.version != kFrameVersionCca2)
    throw InvalidArgument("unknown frame version");
  if (frame.payload.size() != PackedSize(frame.block_count(), frame.k))
    throw InvalidArgument("payload size does not match the bit length");

  std::vector<std::uint8_t> out(std::begin(kMagic), std::end(kMagic));
  out.push_back(frame.version);
  out.push_back(static_cast<std::uint8_t>(frame.k));
  PutBE(out, frame.iv.size(), 2);
  PutBE(out, frame.bit_length, 8);
  if (frame.version == kFrameVersionCca2) {
    PutBE(out, frame.a, 2);
    out.push_back(frame.expander_id);
  }
  const std::vector<std::uint8_t> iv = PackBits(frame.iv, frame.k);
  out.insert(out.end(), iv.begin(), iv.end());
  out.insert(out.end(), frame.payload.begin(), frame.payload.end());
  return out;
}

CipherFrame ParseFrame(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 4 || !std::equal(std::begin(kMagic), std::end(kMagic),
                                      bytes.begin()))
    Fail(FrameError::Reason::kBadMagic, "missing SEBQ magic");
  if (bytes.size() < kFixedHeader)
    Fail(FrameError::Reason::kTruncated, "header cut short");

  CipherFrame frame;
  std::size_t pos = 4;
  frame.version = bytes[pos++];
  if (frame.version != kFrameVersionPlain &&
      frame.version != kFrameVersionCca2)
    Fail(FrameError::Reason::kBadVersion,
         "unsupported version " + std::to_string(frame.version));
  frame.k = bytes[pos++];
  CheckFrameK(frame.k);
  const std::size_t n = GetBE(bytes, pos, 2);
  if (n == 0) Fail(FrameError::Reason::kInconsistent, "empty IV");
  frame.bit_length = GetBE(bytes, pos, 8);
  if (frame.bit_length > (std::uint64_t{1} << 60))
    Fail(FrameError::Reason::kInconsistent, "implausible bit length");

  if (frame.version == kFrameVersionCca2) {
    if (bytes.size() < pos + kCca2Extra)
      Fail(FrameError::Reason::kTruncated, "header cut short");
    frame.a = static_cast<std::uint16_t>(GetBE(bytes, pos, 2));
    frame.expander_id = bytes[pos++];
    if (frame.a < 2)
      Fail(FrameError::Reason::kInconsistent, "expansion length below 2");
  }

  const std::size_t iv_bytes = PackedSize(n, frame.k);
  const std::size_t payload_bytes = PackedSize(frame.block_count(), frame.k);
  const std::size_t remaining = bytes.size() - pos;
  if (remaining < iv_bytes + payload_bytes)
    Fail(FrameError::Reason::kTruncated, "body cut short");
  if (remaining > iv_bytes + payload_bytes)
    Fail(FrameError::Reason::kInconsistent, "trailing bytes after payload");

  frame.iv = UnpackBits(bytes.subspan(pos, iv_bytes), frame.k, n);
  pos += iv_bytes;
  frame.payload.assign(bytes.begin() + pos, bytes.end());
  return frame;
}

CipherFrame SealPlain(const SebqKey& key, std::span<const Symbol> iv,
                      const BitString& plaintext) {
  CipherFrame frame;
  frame.version = kFrameVersionPlain;
  frame.k = key.bits();
  frame.iv.assign(iv.begin(), iv.end());
  frame.bit_length = plaintext.bit_length;
  frame.payload = PackBits(Encrypt(key, iv, Pad(plaintext, key.bits())),
                           key.bits());
  return frame;
}

CipherFrame SealCca2(const Cca2Key& key, std::span<const Symbol> iv,
                     const BitString& plaintext) {
  if (key.expansion_length() > 0xFFFF)
    throw InvalidArgument("expansion length does not fit the frame");
  const int k = key.base().bits();
  CipherFrame frame;
  frame.version = kFrameVersionCca2;
  frame.k = k;
  frame.iv.assign(iv.begin(), iv.end());
  frame.bit_length = plaintext.bit_length;
  frame.a = static_cast<std::uint16_t>(key.expansion_length());
  frame.expander_id = key.expander().id();
  frame.payload = PackBits(EncryptCca2(key, iv, Pad(plaintext, k)), k);
  return frame;
}

BitString OpenPlain(const SebqKey& key, const CipherFrame& frame) {
  CheckKeyMatches(key, frame, kFrameVersionPlain);
  return UnpadTo(Decrypt(key, frame.iv, PayloadBlocks(frame)), frame);
}

BitString OpenCca2(const Cca2Key& key, const CipherFrame& frame) {
  CheckKeyMatches(key.base(), frame, kFrameVersionCca2);
  if (frame.a != key.expansion_length() ||
      frame.expander_id != key.expander().id())
    throw InvalidArgument("frame expander parameters do not match the key");
  return UnpadTo(DecryptCca2(key, frame.iv, PayloadBlocks(frame)), frame);
}

}  // namespace sebq
