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

#include "sebq/feistel.h"

#include <string>

#include "sebq/errors.h"

namespace sebq {
namespace {

constexpr Symbol kAbsorbDomain = 0xA5;
constexpr Symbol kSqueezeDomain = 0x3C;
constexpr std::size_t kBlankBlocks = 8;

}  // namespace

QuasigroupSpongeExpander::QuasigroupSpongeExpander(SebqKey key,
                                                   std::size_t output_length)
    : key_(std::move(key)), output_length_(output_length) {
  if (output_length_ < 2)
    throw InvalidArgument("expander output length must be at least 2");
}

BlockVector QuasigroupSpongeExpander::Expand(
    std::span<const Symbol> seed) const {
  if (seed.empty()) throw InvalidArgument("expander seed must be non-empty");
  CheckSymbols(seed, key_.order(), "seed");

  const Symbol mask = static_cast<Symbol>(key_.order() - 1);
  const int k = key_.bits();
  CipherState state{BlockVector(kWidth, 0)};
  auto absorb = [&](Symbol s) { EncryptBlock(key_, s & mask, state); };

  absorb(kAbsorbDomain);
  // Seed length, k bits at a time, so seeds of different lengths separate.
  for (int shift = 0; shift < 16; shift += k)
    absorb(static_cast<Symbol>(seed.size() >> shift));
  for (Symbol s : seed) absorb(s);
  for (std::size_t i = 0; i < kBlankBlocks; ++i) absorb(0);

  BlockVector out(output_length_);
  for (std::size_t j = 0; j < output_length_; ++j)
    out[j] = EncryptBlock(
        key_, static_cast<Symbol>((kSqueezeDomain + j) & mask), state);
  return out;
}

BlockVector Compress(std::span<const Symbol> expanded, std::size_t width) {
  if (width == 0) throw InvalidArgument("compress width must be positive");
  BlockVector out(width, 0);
  for (std::size_t j = 0; j < expanded.size(); ++j)
    out[j % width] ^= expanded[j];
  return out;
}

Cca2Key::Cca2Key(SebqKey base, std::shared_ptr<const Expander> expander)
    : base_(std::move(base)), expander_(std::move(expander)) {
  if (!expander_) throw InvalidArgument("expander must not be null");
  if (expander_->output_length() < 2)
    throw InvalidArgument("expansion length a must exceed 1");
}

Cca2Key Cca2Key::WithDefaultExpander(SebqKey base, std::size_t a) {
  auto expander = std::make_shared<const QuasigroupSpongeExpander>(base, a);
  return Cca2Key(std::move(base), std::move(expander));
}

BlockVector EncryptCca2(const Cca2Key& key, std::span<const Symbol> iv,
                        std::span<const Symbol> message) {
  if (iv.empty()) throw InvalidArgument("IV must hold at least one block");
  CheckSymbols(iv, key.base().order(), "iv");
  CheckSymbols(message, key.base().order(), "message");
  BlockVector seed(iv.begin(), iv.end());
  BlockVector out(message.size());
  for (std::size_t j = 0; j < message.size(); ++j) {
    CipherState state{key.expander().Expand(seed)};
    out[j] = EncryptBlock(key.base(), message[j], state);
    seed = Compress(state.leader, iv.size());
  }
  return out;
}

BlockVector DecryptCca2(const Cca2Key& key, std::span<const Symbol> iv,
                        std::span<const Symbol> ciphertext) {
  if (iv.empty()) throw InvalidArgument("IV must hold at least one block");
  CheckSymbols(iv, key.base().order(), "iv");
  CheckSymbols(ciphertext, key.base().order(), "ciphertext");
  BlockVector seed(iv.begin(), iv.end());
  BlockVector out(ciphertext.size());
  for (std::size_t j = 0; j < ciphertext.size(); ++j) {
    CipherState state{key.expander().Expand(seed)};
    out[j] = DecryptBlock(key.base(), ciphertext[j], state);
    seed = Compress(state.leader, iv.size());
  }
  return out;
}

}  // namespace sebq
