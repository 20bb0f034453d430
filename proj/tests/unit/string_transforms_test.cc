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

#include <set>

#include <gtest/gtest.h>

#include "oracles.h"
#include "sebq/errors.h"

namespace sebq {
namespace {

const Quasigroup& Xor4() {
  static const Quasigroup q(LatinSquare::Xor(4));
  return q;
}

const Quasigroup& Example5() {
  static const Quasigroup q(LatinSquare::FromRows({{0, 1, 2, 3, 4},
                                                   {1, 0, 3, 4, 2},
                                                   {2, 4, 0, 1, 3},
                                                   {3, 2, 4, 0, 1},
                                                   {4, 3, 1, 2, 0}}));
  return q;
}

// One block of the chain, written out from the definitions with explicit
// per-step vectors: d_1 = b_1 * a, d_i = b_i * d_{i-1}, checksum last.
Symbol OracleStep(const LatinSquare& mul, BlockVector& leader, Symbol a) {
  BlockVector d(leader.size());
  Symbol prev = a;
  for (std::size_t i = 0; i < leader.size(); ++i)
    prev = d[i] = mul.at(leader[i], prev);
  const Symbol c = d.back();
  Symbol sum = 0;
  for (Symbol v : d) sum ^= v;
  d.back() = sum;
  leader = d;
  return c;
}

TEST(FoldApply, Examples) {
  const BlockVector beta = {1, 2};
  EXPECT_EQ(FoldApply(Xor4(), beta, 3), 0);  // 2 ^ (1 ^ 3)
  EXPECT_EQ(FoldApply(Xor4(), {}, 3), 3);
  const BlockVector one = {1};
  EXPECT_EQ(FoldApply(Example5(), one, 2), 3);
  EXPECT_THROW(FoldApply(Xor4(), beta, 4), InvalidArgument);
}

TEST(FoldApplyInverse, UndoesFold) {
  Rng rng(4);
  const Quasigroup q(RandomLatinSquare(16, rng));
  for (int t = 0; t < 200; ++t) {
    const BlockVector leader = testing::RandomSymbols(1 + t % 7, 16, rng);
    const Symbol a = static_cast<Symbol>(rng() % 16);
    EXPECT_EQ(FoldApplyInverse(q, leader, FoldApply(q, leader, a)), a);
  }
}

TEST(ChecksumF, Examples) {
  EXPECT_EQ(ChecksumF(BlockVector{2, 2}), (BlockVector{2, 0}));
  EXPECT_EQ(ChecksumF(BlockVector{7}), (BlockVector{7}));
  EXPECT_EQ(ChecksumF(BlockVector{1, 2, 3}), (BlockVector{1, 2, 0}));
  EXPECT_THROW(ChecksumF(BlockVector{}), InvalidArgument);
}

TEST(LeaderUpdateEnc, Examples) {
  EXPECT_EQ(LeaderUpdateEnc(Xor4(), 3, BlockVector{1, 2}), (BlockVector{2, 2}));
  EXPECT_EQ(LeaderUpdateEnc(Xor4(), 0, BlockVector{0, 0}), (BlockVector{0, 0}));
  const Quasigroup& q = Example5();
  for (Symbol b = 0; b < 5; ++b)
    for (Symbol a = 0; a < 5; ++a)
      EXPECT_EQ(LeaderUpdateEnc(q, a, BlockVector{b}),
                (BlockVector{q.mul(b, a)}));
  EXPECT_THROW(LeaderUpdateEnc(Xor4(), 0, BlockVector{}), InvalidArgument);
}

TEST(LeaderUpdateDec, Examples) {
  // Decrypting c = 0 under (1, 2) reconstructs the chain (2, 0).
  EXPECT_EQ(LeaderUpdateDec(Xor4(), 0, BlockVector{1, 2}), (BlockVector{2, 2}));
  EXPECT_EQ(LeaderUpdateDec(Xor4(), 0, BlockVector{0, 0}), (BlockVector{0, 0}));
  // With one block the chain is just d_1 = c.
  const Quasigroup& q = Example5();
  for (Symbol b = 0; b < 5; ++b)
    for (Symbol c = 0; c < 5; ++c)
      EXPECT_EQ(LeaderUpdateDec(q, c, BlockVector{b}), (BlockVector{c}));
  EXPECT_THROW(LeaderUpdateDec(Xor4(), 0, BlockVector{}), InvalidArgument);
}

TEST(LeaderUpdate, DecryptionStateMatchesEncryptionState) {
  Rng rng(9);
  const Quasigroup q(RandomLatinSquare(16, rng));
  for (int t = 0; t < 500; ++t) {
    const BlockVector leader = testing::RandomSymbols(1 + t % 6, 16, rng);
    const Symbol a = static_cast<Symbol>(rng() % 16);
    const Symbol c = FoldApply(q, leader, a);
    EXPECT_EQ(LeaderUpdateDec(q, c, leader), LeaderUpdateEnc(q, a, leader));
  }
}

TEST(ETransform, Examples) {
  const TransformResult r = ETransform(Xor4(), BlockVector{1, 2}, BlockVector{3, 0});
  EXPECT_EQ(r.output, (BlockVector{0, 0}));
  EXPECT_EQ(r.final_leader, (BlockVector{2, 2}));

  const TransformResult empty = ETransform(Xor4(), BlockVector{1, 2}, {});
  EXPECT_TRUE(empty.output.empty());
  EXPECT_EQ(empty.final_leader, (BlockVector{1, 2}));

  EXPECT_EQ(ETransform(Xor4(), BlockVector{0, 0}, BlockVector{0, 0, 0}).output,
            (BlockVector{0, 0, 0}));
  EXPECT_THROW(ETransform(Xor4(), {}, BlockVector{1}), InvalidArgument);
  EXPECT_THROW(ETransform(Xor4(), BlockVector{1}, BlockVector{9}),
               InvalidArgument);
}

TEST(ETransform, MatchesStepByStepOracle) {
  Rng rng(31);
  for (int t = 0; t < 300; ++t) {
    const std::size_t order = std::size_t{1} << (1 + t % 5);
    const LatinSquare mul = RandomLatinSquare(order, rng);
    const Quasigroup q(mul);
    const BlockVector leader = testing::RandomSymbols(1 + t % 9, order, rng);
    const BlockVector alpha = testing::RandomSymbols(t % 20, order, rng);
    BlockVector state = leader;
    BlockVector expected;
    for (Symbol a : alpha) expected.push_back(OracleStep(mul, state, a));
    const TransformResult r = ETransform(q, leader, alpha);
    ASSERT_EQ(r.output, expected);
    ASSERT_EQ(r.final_leader, state);
  }
}

TEST(ETransform, XorClosedForm) {
  // Under XOR every d_i is (b_1 ^ ... ^ b_i) ^ a, so c = (XOR of leader) ^ a
  // and the leader evolves in closed form.
  Rng rng(12);
  const Quasigroup q(LatinSquare::Xor(16));
  for (int t = 0; t < 200; ++t) {
    BlockVector leader = testing::RandomSymbols(1 + t % 8, 16, rng);
    const BlockVector alpha = testing::RandomSymbols(10, 16, rng);
    const TransformResult r = ETransform(q, leader, alpha);
    for (std::size_t j = 0; j < alpha.size(); ++j) {
      Symbol acc = 0;
      for (Symbol b : leader) acc ^= b;
      ASSERT_EQ(r.output[j], acc ^ alpha[j]);
      BlockVector next(leader.size());
      Symbol prefix = alpha[j];
      Symbol sum = 0;
      for (std::size_t i = 0; i < leader.size(); ++i) {
        prefix ^= leader[i];
        next[i] = prefix;
        sum ^= prefix;
      }
      next.back() = sum;
      leader = next;
    }
    ASSERT_EQ(r.final_leader, leader);
  }
}

TEST(DTransform, Examples) {
  const TransformResult r = DTransform(Xor4(), BlockVector{1, 2}, BlockVector{0, 0});
  EXPECT_EQ(r.output, (BlockVector{3, 0}));
  EXPECT_EQ(r.final_leader, (BlockVector{2, 2}));
  const TransformResult empty = DTransform(Xor4(), BlockVector{3}, {});
  EXPECT_TRUE(empty.output.empty());
  EXPECT_EQ(empty.final_leader, (BlockVector{3}));
}

TEST(Transforms, InverseBothWaysOnRandomInstances) {
  Rng rng(77);
  for (int t = 0; t < 1000; ++t) {
    const std::size_t order = std::size_t{4} << (t % 3);  // 4, 8, 16
    const Quasigroup q(RandomLatinSquare(order, rng));
    const BlockVector leader = testing::RandomSymbols(1 + t % 5, order, rng);
    const BlockVector alpha = testing::RandomSymbols(t % 17, order, rng);
    const TransformResult e = ETransform(q, leader, alpha);
    const TransformResult d = DTransform(q, leader, e.output);
    ASSERT_EQ(d.output, alpha);
    ASSERT_EQ(d.final_leader, e.final_leader);
    // And the other way round: d then e.
    const TransformResult d2 = DTransform(q, leader, alpha);
    ASSERT_EQ(ETransform(q, leader, d2.output).output, alpha);
  }
}

TEST(Transforms, ExhaustiveBijectionSmallCase) {
  // k = 2, n = 2, l = 3, every leader and every message: 16 * 64 cases.
  const Quasigroup q(RandomLatinSquare(4, 5));
  for (Symbol r1 = 0; r1 < 4; ++r1) {
    for (Symbol r2 = 0; r2 < 4; ++r2) {
      const BlockVector leader = {r1, r2};
      std::set<BlockVector> images;
      for (int m = 0; m < 64; ++m) {
        const BlockVector alpha = {static_cast<Symbol>(m & 3),
                                   static_cast<Symbol>((m >> 2) & 3),
                                   static_cast<Symbol>(m >> 4)};
        const TransformResult e = ETransform(q, leader, alpha);
        ASSERT_EQ(DTransform(q, leader, e.output).output, alpha);
        images.insert(e.output);
      }
      EXPECT_EQ(images.size(), 64u);
    }
  }
}

}  // namespace
}  // namespace sebq
