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

#ifndef SEBQ_CIPHER_H_
#define SEBQ_CIPHER_H_

#include <cstdint>
#include <memory>
#include <span>

#include "sebq/latin_square.h"
#include "sebq/rng.h"
#include "sebq/string_transforms.h"

namespace sebq {

inline constexpr int kMinSymbolBits = 1;
inline constexpr int kMaxSymbolBits = 8;

// Secret key: a quasigroup of order 2^k with its parastrophe precomputed.
// Cheap to copy; the tables are shared and immutable.
class SebqKey {
 public:
  // Random key from a fresh Latin square of order 2^k. Throws
  // InvalidArgument unless 1 <= k <= 8.
  static SebqKey Generate(int k, Rng& rng);
  static SebqKey Generate(int k, std::uint64_t seed);
  // Wraps an existing square, whose order must be 2^k for some k in 1..8.
  static SebqKey FromSquare(LatinSquare square);

  int bits() const { return bits_; }
  std::size_t order() const { return std::size_t{1} << bits_; }
  const Quasigroup& quasigroup() const { return *quasigroup_; }
  std::shared_ptr<const Quasigroup> shared_quasigroup() const {
    return quasigroup_;
  }

 private:
  SebqKey(int bits, std::shared_ptr<const Quasigroup> q)
      : bits_(bits), quasigroup_(std::move(q)) {}

  int bits_;
  std::shared_ptr<const Quasigroup> quasigroup_;
};

// The evolving leader vector threaded through a chained run.
struct CipherState {
  BlockVector leader;
};

// One application of the block map: c = r_n * (... * (r_1 * m)), and the
// leader advances to the checksummed chain. Updates `state` in place.
Symbol EncryptBlock(const SebqKey& key, Symbol m, CipherState& state);

// Inverse of EncryptBlock; leaves `state` exactly where EncryptBlock did.
Symbol DecryptBlock(const SebqKey& key, Symbol c, CipherState& state);

// Whole-message chained encryption. The IV (length n >= 1) is not modified.
BlockVector Encrypt(const SebqKey& key, std::span<const Symbol> iv,
                    std::span<const Symbol> message);
BlockVector Decrypt(const SebqKey& key, std::span<const Symbol> iv,
                    std::span<const Symbol> ciphertext);

// Table lookups and XOR block operations actually performed by Encrypt.
struct OperationTally {
  std::uint64_t lookups = 0;
  std::uint64_t xors = 0;
};

BlockVector EncryptCounted(const SebqKey& key, std::span<const Symbol> iv,
                           std::span<const Symbol> message,
                           OperationTally& tally);

// Leader vectors after each block (S^(1) = iv, then one per block), for
// checking that both directions walk the same state sequence.
std::vector<BlockVector> EncryptStateTrace(const SebqKey& key,
                                           std::span<const Symbol> iv,
                                           std::span<const Symbol> message);
std::vector<BlockVector> DecryptStateTrace(const SebqKey& key,
                                           std::span<const Symbol> iv,
                                           std::span<const Symbol> ciphertext);

}  // namespace sebq

#endif  // SEBQ_CIPHER_H_
