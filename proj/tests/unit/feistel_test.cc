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

#include <bit>
#include <cmath>

#include <gtest/gtest.h>

#include "oracles.h"
#include "sebq/errors.h"

namespace sebq {
namespace {

class ConstantExpander final : public Expander {
 public:
  explicit ConstantExpander(BlockVector v) : v_(std::move(v)) {}
  BlockVector Expand(std::span<const Symbol>) const override { return v_; }
  std::size_t output_length() const override { return v_.size(); }

 private:
  BlockVector v_;
};

TEST(SpongeExpander, DeterministicAndSized) {
  const SebqKey key = SebqKey::Generate(4, 3);
  const QuasigroupSpongeExpander g(key, 2);
  const BlockVector seed = {1, 2, 3};
  EXPECT_EQ(g.Expand(seed), g.Expand(seed));
  EXPECT_EQ(g.Expand(seed).size(), 2u);
  EXPECT_EQ(QuasigroupSpongeExpander(key, 37).Expand(seed).size(), 37u);
  EXPECT_EQ(g.id(), kDefaultExpanderId);
  EXPECT_THROW(g.Expand({}), InvalidArgument);
  EXPECT_THROW(g.Expand(BlockVector{16}), InvalidArgument);
  EXPECT_THROW(QuasigroupSpongeExpander(key, 1), InvalidArgument);
}

TEST(SpongeExpander, SeedLengthIsSeparated) {
  const QuasigroupSpongeExpander g(SebqKey::Generate(4, 3), 16);
  EXPECT_NE(g.Expand(BlockVector{0}), g.Expand(BlockVector{0, 0}));
}

TEST(SpongeExpander, OneBitSeedChangeFlipsHalfTheOutput) {
  Rng rng(10);
  double total = 0;
  constexpr int kTrials = 100;
  for (int t = 0; t < kTrials; ++t) {
    const SebqKey key = SebqKey::Generate(4, rng());
    const QuasigroupSpongeExpander g(key, 8);
    BlockVector seed = testing::RandomSymbols(4, 16, rng);
    const BlockVector a = g.Expand(seed);
    const unsigned bit = rng() % 16;
    seed[bit / 4] ^= static_cast<Symbol>(1u << (bit % 4));
    const BlockVector b = g.Expand(seed);
    int diff = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
      diff += std::popcount(static_cast<unsigned>(a[i] ^ b[i]));
    total += 100.0 * diff / (a.size() * 4);
  }
  const double mean = total / kTrials;
  EXPECT_GE(mean, 45.0);
  EXPECT_LE(mean, 55.0);
}

TEST(Compress, XorFolds) {
  EXPECT_EQ(Compress(BlockVector{1, 2, 4, 8}, 2), (BlockVector{5, 10}));
  EXPECT_EQ(Compress(BlockVector{1, 2, 4}, 1), (BlockVector{7}));
  EXPECT_EQ(Compress(BlockVector{3}, 2), (BlockVector{3, 0}));
  EXPECT_THROW(Compress(BlockVector{1}, 0), InvalidArgument);
}

TEST(Cca2, RoundTripRandom) {
  Rng rng(44);
  for (int t = 0; t < 1000; ++t) {
    const int k = t % 2 ? 4 : 2;
    const Cca2Key key = Cca2Key::WithDefaultExpander(
        SebqKey::Generate(k, rng()), 2 + t % 5);
    const BlockVector iv = testing::RandomSymbols(1 + t % 4, key.base().order(), rng);
    const BlockVector m = testing::RandomSymbols(t % 12, key.base().order(), rng);
    const BlockVector c = EncryptCca2(key, iv, m);
    ASSERT_EQ(c.size(), m.size());
    ASSERT_EQ(DecryptCca2(key, iv, c), m);
  }
}

TEST(Cca2, EmptyMessage) {
  const Cca2Key key = Cca2Key::WithDefaultExpander(SebqKey::Generate(4, 1), 2);
  EXPECT_TRUE(EncryptCca2(key, BlockVector{1}, {}).empty());
  EXPECT_TRUE(DecryptCca2(key, BlockVector{1}, {}).empty());
  EXPECT_THROW(EncryptCca2(key, {}, BlockVector{1}), InvalidArgument);
}

TEST(Cca2, ConstantExpanderReducesToFixedLeader) {
  const SebqKey base = SebqKey::Generate(4, 9);
  const BlockVector v = {3, 14, 1, 5};
  const Cca2Key key(base, std::make_shared<ConstantExpander>(v));
  Rng rng(3);
  const BlockVector m = testing::RandomSymbols(50, 16, rng);
  const BlockVector c = EncryptCca2(key, BlockVector{7, 7}, m);
  for (std::size_t j = 0; j < m.size(); ++j)
    EXPECT_EQ(c[j], Encrypt(base, v, BlockVector{m[j]})[0]);
  EXPECT_EQ(DecryptCca2(key, BlockVector{7, 7}, c), m);
}

// The fold of a checksummed leader XORs to the block that produced it, so
// the next seed is tied to the public ciphertext block.
TEST(Cca2, NextSeedFoldsToCiphertextBlock) {
  Rng rng(17);
  for (int t = 0; t < 200; ++t) {
    const SebqKey base = SebqKey::Generate(4, rng());
    const std::size_t a = 2 + rng() % 6;
    const Cca2Key key = Cca2Key::WithDefaultExpander(base, a);
    const std::size_t n = 1 + rng() % 3;
    BlockVector seed = testing::RandomSymbols(n, 16, rng);
    const BlockVector m = testing::RandomSymbols(6, 16, rng);
    const BlockVector c = EncryptCca2(key, seed, m);
    for (std::size_t j = 0; j < m.size(); ++j) {
      CipherState state{key.expander().Expand(seed)};
      ASSERT_EQ(EncryptBlock(base, m[j], state), c[j]);
      seed = Compress(state.leader, n);
      Symbol x = 0;
      for (Symbol s : seed) x ^= s;
      ASSERT_EQ(x, c[j]);
      if (n == 1) ASSERT_EQ(seed, BlockVector{c[j]});
    }
  }
}

// Change rate of decrypted block `at + offset` after corrupting block `at`.
std::vector<double> TamperProfile(std::size_t n, std::size_t span,
                                  std::uint64_t seed) {
  Rng rng(seed);
  std::vector<double> changed(span, 0);
  const int trials = 400;
  for (int t = 0; t < trials; ++t) {
    const Cca2Key key =
        Cca2Key::WithDefaultExpander(SebqKey::Generate(4, rng()), 2 * n);
    const BlockVector iv = testing::RandomSymbols(n, 16, rng);
    const BlockVector m = testing::RandomSymbols(span + 4, 16, rng);
    BlockVector c = EncryptCca2(key, iv, m);
    const std::size_t at = rng() % 4;
    c[at] ^= static_cast<Symbol>(1 + rng() % 15);
    const BlockVector garbled = DecryptCca2(key, iv, c);
    for (std::size_t d = 0; d < span && at + d < m.size(); ++d)
      changed[d] += garbled[at + d] != m[at + d];
  }
  for (double& x : changed) x /= trials;
  return changed;
}

TEST(Cca2, TamperingGarblesBlockAndItsSuccessor) {
  for (std::size_t n : {1u, 2u, 3u}) {
    const auto profile = TamperProfile(n, 2, 19 + n);
    EXPECT_DOUBLE_EQ(profile[0], 1.0) << n;
    // New leader from a changed seed: the block changes w.p. 1 - 2^-k.
    EXPECT_GE(profile[1], 1.0 - 1.0 / 16 - 0.04) << n;
  }
}

TEST(Cca2, TamperEffectResynchronizes) {
  // With n = 1 the seed after the corrupted block is the (correct) next
  // ciphertext block, so decryption recovers after one garbled block.
  const auto one = TamperProfile(1, 4, 5);
  EXPECT_DOUBLE_EQ(one[2], 0.0);
  EXPECT_DOUBLE_EQ(one[3], 0.0);
  // With n = 2 a wrong seed rejoins the true one w.p. about 2^-k per block:
  // offset d changes w.p. about (15/16)^d.
  const auto two = TamperProfile(2, 12, 6);
  for (std::size_t d = 1; d < 12; ++d)
    EXPECT_NEAR(two[d], std::pow(15.0 / 16, static_cast<double>(d)), 0.08)
        << d;
}

TEST(Cca2, MismatchedExpansionLengthBreaksRoundTrip) {
  const SebqKey base = SebqKey::Generate(4, 2);
  const Cca2Key enc = Cca2Key::WithDefaultExpander(base, 4);
  const Cca2Key dec = Cca2Key::WithDefaultExpander(base, 5);
  Rng rng(1);
  const BlockVector iv = {1, 2};
  const BlockVector m = testing::RandomSymbols(32, 16, rng);
  EXPECT_NE(DecryptCca2(dec, iv, EncryptCca2(enc, iv, m)), m);
}

TEST(Cca2Key, Validation) {
  const SebqKey base = SebqKey::Generate(2, 1);
  EXPECT_THROW(Cca2Key(base, nullptr), InvalidArgument);
  EXPECT_THROW(Cca2Key(base, std::make_shared<ConstantExpander>(BlockVector{1})),
               InvalidArgument);
  EXPECT_EQ(Cca2Key::WithDefaultExpander(base, 6).expansion_length(), 6u);
  EXPECT_EQ(DefaultExpansionLength(3), 6u);
}

}  // namespace
}  // namespace sebq
