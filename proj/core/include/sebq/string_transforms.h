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

#ifndef SEBQ_STRING_TRANSFORMS_H_
#define SEBQ_STRING_TRANSFORMS_H_

#include <span>
#include <vector>

#include "sebq/latin_square.h"

namespace sebq {

// A string of quasigroup elements: messages, ciphertexts and leader vectors.
using BlockVector = std::vector<Symbol>;

// b_n * (b_{n-1} * ( ... * (b_1 * a))). The empty leader is the identity.
Symbol FoldApply(const Quasigroup& q, std::span<const Symbol> leader,
                 Symbol a);

// b_1 \ (b_2 \ ( ... \ (b_n \ c))), the inverse of FoldApply.
Symbol FoldApplyInverse(const Quasigroup& q, std::span<const Symbol> leader,
                        Symbol c);

// Copy of v whose last block is replaced by the XOR of all blocks.
BlockVector ChecksumF(std::span<const Symbol> v);

// Encryption-side leader update: the chain d_1 = b_1 * a,
// d_i = b_i * d_{i-1}, followed by ChecksumF.
BlockVector LeaderUpdateEnc(const Quasigroup& q, Symbol a,
                            std::span<const Symbol> leader);

// Decryption-side leader update, given a ciphertext symbol c: rebuilds the
// same chain backwards (d_n = c, d_{i-1} = b_i \ d_i), then ChecksumF. For a
// ciphertext produced under `leader` the result equals LeaderUpdateEnc of the
// matching plaintext symbol.
BlockVector LeaderUpdateDec(const Quasigroup& q, Symbol c,
                            std::span<const Symbol> leader);

struct TransformResult {
  BlockVector output;
  BlockVector final_leader;
};

// e-transformation: c_i = FoldApply(delta_{i-1}, a_i),
// delta_i = LeaderUpdateEnc(a_i, delta_{i-1}), delta_0 = leader.
TransformResult ETransform(const Quasigroup& q, std::span<const Symbol> leader,
                           std::span<const Symbol> alpha);

// d-transformation, the inverse of ETransform for the same leader.
TransformResult DTransform(const Quasigroup& q, std::span<const Symbol> leader,
                           std::span<const Symbol> gamma);

// Throws InvalidArgument if any symbol is >= order.
void CheckSymbols(std::span<const Symbol> blocks, std::size_t order,
                  const char* what);

}  // namespace sebq

#endif  // SEBQ_STRING_TRANSFORMS_H_
