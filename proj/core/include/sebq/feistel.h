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

#ifndef SEBQ_FEISTEL_H_
#define SEBQ_FEISTEL_H_

#include <cstdint>
#include <memory>
#include <span>

#include "sebq/cipher.h"

namespace sebq {

inline constexpr std::uint8_t kDefaultExpanderId = 0x00;
inline constexpr std::uint8_t kExternalExpanderId = 0x01;

// Deterministic map from a seed string to a fixed-length leader vector.
// Implementations must be pure: equal seeds give equal outputs.
class Expander {
 public:
  virtual ~Expander() = default;

  // Throws InvalidArgument for an empty seed or out-of-range symbols.
  virtual BlockVector Expand(std::span<const Symbol> seed) const = 0;
  virtual std::size_t output_length() const = 0;
  // Frame identifier; kExternalExpanderId for anything not built in.
  virtual std::uint8_t id() const { return kExternalExpanderId; }
};

// Built-in expander keyed by the secret quasigroup. A width-8 leader
// starting at zero absorbs a domain block, the seed length and the seed
// (one cipher step per symbol), is stirred with blank blocks, and then
// squeezes one output symbol per counter block. Not a proven PRF.
class QuasigroupSpongeExpander final : public Expander {
 public:
  static constexpr std::size_t kWidth = 8;

  // output_length must be at least 2.
  QuasigroupSpongeExpander(SebqKey key, std::size_t output_length);

  BlockVector Expand(std::span<const Symbol> seed) const override;
  std::size_t output_length() const override { return output_length_; }
  std::uint8_t id() const override { return kDefaultExpanderId; }

 private:
  SebqKey key_;
  std::size_t output_length_;
};

// a = 2 * k0 unless configured otherwise.
inline std::size_t DefaultExpansionLength(std::size_t seed_length) {
  return 2 * seed_length;
}

// XOR-folds `expanded` onto `width` blocks: out[j mod width] ^= expanded[j].
BlockVector Compress(std::span<const Symbol> expanded, std::size_t width);

class Cca2Key {
 public:
  Cca2Key(SebqKey base, std::shared_ptr<const Expander> expander);
  // Base key plus the built-in sponge expander with output length a.
  static Cca2Key WithDefaultExpander(SebqKey base, std::size_t a);

  const SebqKey& base() const { return base_; }
  const Expander& expander() const { return *expander_; }
  std::size_t expansion_length() const { return expander_->output_length(); }

 private:
  SebqKey base_;
  std::shared_ptr<const Expander> expander_;
};

// Per block: L = G(R), one cipher step of the block under leader L, then
// R = Compress(updated L, |iv|). The IV is the first R and may have any
// length k0 >= 1.
BlockVector EncryptCca2(const Cca2Key& key, std::span<const Symbol> iv,
                        std::span<const Symbol> message);
BlockVector DecryptCca2(const Cca2Key& key, std::span<const Symbol> iv,
                        std::span<const Symbol> ciphertext);

}  // namespace sebq

#endif  // SEBQ_FEISTEL_H_
