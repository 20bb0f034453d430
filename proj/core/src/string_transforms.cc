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

#include "sebq/string_transforms.h"

#include <string>

#include "sebq/errors.h"

namespace sebq {
namespace {

void CheckSymbol(Symbol s, std::size_t order, const char* what) {
  if (s >= order)
    throw InvalidArgument(std::string(what) + ": symbol " + std::to_string(s) +
                          " out of range for order " + std::to_string(order));
}

void CheckLeader(std::span<const Symbol> leader, std::size_t order) {
  if (leader.empty()) throw InvalidArgument("leader vector must be non-empty");
  CheckSymbols(leader, order, "leader");
}

}  // namespace

void CheckSymbols(std::span<const Symbol> blocks, std::size_t order,
                  const char* what) {
  for (Symbol s : blocks) CheckSymbol(s, order, what);
}

Symbol FoldApply(const Quasigroup& q, std::span<const Symbol> leader,
                 Symbol a) {
  CheckSymbols(leader, q.order(), "leader");
  CheckSymbol(a, q.order(), "input");
  Symbol acc = a;
  for (Symbol b : leader) acc = q.mul(b, acc);
  return acc;
}

Symbol FoldApplyInverse(const Quasigroup& q, std::span<const Symbol> leader,
                        Symbol c) {
  CheckSymbols(leader, q.order(), "leader");
  CheckSymbol(c, q.order(), "input");
  Symbol acc = c;
  for (auto it = leader.rbegin(); it != leader.rend(); ++it)
    acc = q.ldiv(*it, acc);
  return acc;
}

BlockVector ChecksumF(std::span<const Symbol> v) {
  if (v.empty()) throw InvalidArgument("checksum of an empty vector");
  BlockVector out(v.begin(), v.end());
  Symbol sum = 0;
  for (Symbol s : v) sum ^= s;
  out.back() = sum;
  return out;
}

BlockVector LeaderUpdateEnc(const Quasigroup& q, Symbol a,
                            std::span<const Symbol> leader) {
  CheckLeader(leader, q.order());
  CheckSymbol(a, q.order(), "input");
  BlockVector chain(leader.size());
  // d_i = F_{b_i} o ... o F_{b_1}(a) = b_i * d_{i-1}
  Symbol d = a;
  for (std::size_t i = 0; i < leader.size(); ++i) {
    d = q.mul(leader[i], d);
    chain[i] = d;
  }
  return ChecksumF(chain);
}

BlockVector LeaderUpdateDec(const Quasigroup& q, Symbol c,
                            std::span<const Symbol> leader) {
  CheckLeader(leader, q.order());
  CheckSymbol(c, q.order(), "input");
  const std::size_t n = leader.size();
  BlockVector chain(n);
  // d_n = c and d_{i-1} = b_i \ d_i.
  Symbol d = c;
  for (std::size_t i = n; i-- > 0;) {
    chain[i] = d;
    d = q.ldiv(leader[i], d);
  }
  return ChecksumF(chain);
}

TransformResult ETransform(const Quasigroup& q, std::span<const Symbol> leader,
                           std::span<const Symbol> alpha) {
  CheckLeader(leader, q.order());
  CheckSymbols(alpha, q.order(), "message");
  TransformResult result;
  result.output.reserve(alpha.size());
  BlockVector delta(leader.begin(), leader.end());
  for (Symbol a : alpha) {
    result.output.push_back(FoldApply(q, delta, a));
    delta = LeaderUpdateEnc(q, a, delta);
  }
  result.final_leader = std::move(delta);
  return result;
}

TransformResult DTransform(const Quasigroup& q, std::span<const Symbol> leader,
                           std::span<const Symbol> gamma) {
  CheckLeader(leader, q.order());
  CheckSymbols(gamma, q.order(), "ciphertext");
  TransformResult result;
  result.output.reserve(gamma.size());
  BlockVector delta(leader.begin(), leader.end());
  for (Symbol c : gamma) {
    result.output.push_back(FoldApplyInverse(q, delta, c));
    delta = LeaderUpdateDec(q, c, delta);
  }
  result.final_leader = std::move(delta);
  return result;
}

}  // namespace sebq
