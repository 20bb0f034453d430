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

#include "sebq/cipher.h"

#include <string>

#include "sebq/errors.h"

namespace sebq {
namespace {

struct NoTally {
  void lookup() {}
  void xors(std::size_t) {}
};

struct Tally {
  OperationTally* out;
  void lookup() { ++out->lookups; }
  void xors(std::size_t count) { out->xors += count; }
};

// Column j of the k_{i,j} grid: leader holds k_{1..n, j-1} on entry and
// k_{1..n, j} (with the checksum in the last slot) on exit.
template <typename Counter>
Symbol EncryptColumn(const Quasigroup& q, Symbol m, std::span<Symbol> leader,
                     Counter& counter) {
  Symbol value = m;
  Symbol sum = 0;
  for (Symbol& k : leader) {
    value = q.mul(k, value);
    counter.lookup();
    k = value;
    sum ^= value;
  }
  counter.xors(leader.size() - 1);
  leader.back() = sum;
  return value;
}

template <typename Counter>
Symbol DecryptColumn(const Quasigroup& q, Symbol c, std::span<Symbol> leader,
                     Counter& counter) {
  // Walk i = n..1: k_{i-1,j} = k_{i,j-1} \ k_{i,j}; the last step yields m.
  Symbol value = c;
  Symbol sum = 0;
  for (std::size_t i = leader.size(); i-- > 0;) {
    const Symbol previous = leader[i];
    leader[i] = value;
    sum ^= value;
    value = q.ldiv(previous, value);
    counter.lookup();
  }
  counter.xors(leader.size() - 1);
  leader.back() = sum;
  return value;
}

void CheckInputs(const SebqKey& key, std::span<const Symbol> iv,
                 std::span<const Symbol> blocks, const char* what) {
  if (iv.empty()) throw InvalidArgument("IV must hold at least one block");
  CheckSymbols(iv, key.order(), "iv");
  CheckSymbols(blocks, key.order(), what);
}

template <typename Counter>
BlockVector EncryptWith(const SebqKey& key, std::span<const Symbol> iv,
                        std::span<const Symbol> message, Counter& counter) {
  CheckInputs(key, iv, message, "message");
  BlockVector leader(iv.begin(), iv.end());
  BlockVector out(message.size());
  const Quasigroup& q = key.quasigroup();
  for (std::size_t j = 0; j < message.size(); ++j)
    out[j] = EncryptColumn(q, message[j], leader, counter);
  return out;
}

}  // namespace

SebqKey SebqKey::Generate(int k, Rng& rng) {
  if (k < kMinSymbolBits || k > kMaxSymbolBits)
    throw InvalidArgument("bits per symbol must be in 1..8, got " +
                          std::to_string(k));
  return SebqKey(k, std::make_shared<const Quasigroup>(
                        RandomLatinSquare(std::size_t{1} << k, rng)));
}

SebqKey SebqKey::Generate(int k, std::uint64_t seed) {
  Rng rng(seed);
  return Generate(k, rng);
}

SebqKey SebqKey::FromSquare(LatinSquare square) {
  const std::size_t n = square.order();
  for (int k = kMinSymbolBits; k <= kMaxSymbolBits; ++k) {
    if (n == (std::size_t{1} << k))
      return SebqKey(k, std::make_shared<const Quasigroup>(std::move(square)));
  }
  throw InvalidArgument("key order must be 2^k with 1 <= k <= 8, got " +
                        std::to_string(n));
}

Symbol EncryptBlock(const SebqKey& key, Symbol m, CipherState& state) {
  CheckInputs(key, state.leader, std::span<const Symbol>(&m, 1), "message");
  NoTally none;
  return EncryptColumn(key.quasigroup(), m, state.leader, none);
}

Symbol DecryptBlock(const SebqKey& key, Symbol c, CipherState& state) {
  CheckInputs(key, state.leader, std::span<const Symbol>(&c, 1), "ciphertext");
  NoTally none;
  return DecryptColumn(key.quasigroup(), c, state.leader, none);
}

BlockVector Encrypt(const SebqKey& key, std::span<const Symbol> iv,
                    std::span<const Symbol> message) {
  NoTally none;
  return EncryptWith(key, iv, message, none);
}

BlockVector Decrypt(const SebqKey& key, std::span<const Symbol> iv,
                    std::span<const Symbol> ciphertext) {
  CheckInputs(key, iv, ciphertext, "ciphertext");
  BlockVector leader(iv.begin(), iv.end());
  BlockVector out(ciphertext.size());
  const Quasigroup& q = key.quasigroup();
  NoTally none;
  for (std::size_t j = 0; j < ciphertext.size(); ++j)
    out[j] = DecryptColumn(q, ciphertext[j], leader, none);
  return out;
}

BlockVector EncryptCounted(const SebqKey& key, std::span<const Symbol> iv,
                           std::span<const Symbol> message,
                           OperationTally& tally) {
  Tally counter{&tally};
  return EncryptWith(key, iv, message, counter);
}

std::vector<BlockVector> EncryptStateTrace(const SebqKey& key,
                                           std::span<const Symbol> iv,
                                           std::span<const Symbol> message) {
  CheckInputs(key, iv, message, "message");
  CipherState state{BlockVector(iv.begin(), iv.end())};
  std::vector<BlockVector> trace{state.leader};
  for (Symbol m : message) {
    EncryptBlock(key, m, state);
    trace.push_back(state.leader);
  }
  return trace;
}

std::vector<BlockVector> DecryptStateTrace(const SebqKey& key,
                                           std::span<const Symbol> iv,
                                           std::span<const Symbol> ciphertext) {
  CheckInputs(key, iv, ciphertext, "ciphertext");
  CipherState state{BlockVector(iv.begin(), iv.end())};
  std::vector<BlockVector> trace{state.leader};
  for (Symbol c : ciphertext) {
    DecryptBlock(key, c, state);
    trace.push_back(state.leader);
  }
  return trace;
}

}  // namespace sebq
