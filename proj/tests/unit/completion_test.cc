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

#include "sebq/completion.h"

#include <gtest/gtest.h>

#include "oracles.h"
#include "sebq/errors.h"

namespace sebq {
namespace {

using Status = CompletionResult::Status;

TEST(PartialLatinSquare, TrySetRejectsConflicts) {
  PartialLatinSquare p(3);
  EXPECT_TRUE(p.TrySet(0, 0, 1));
  EXPECT_TRUE(p.TrySet(0, 0, 1));
  EXPECT_FALSE(p.TrySet(0, 0, 2));
  EXPECT_FALSE(p.TrySet(0, 2, 1));
  EXPECT_FALSE(p.TrySet(1, 0, 1));
  EXPECT_EQ(p.known_count(), 1u);
  EXPECT_THROW(p.Set(2, 0, 1), LatinPropertyError);
  EXPECT_THROW(p.TrySet(3, 0, 0), InvalidArgument);
}

TEST(PartialLatinSquare, FromRowsValidates) {
  EXPECT_THROW(PartialLatinSquare::FromRows({{0, 0}, {-1, -1}}),
               LatinPropertyError);
  EXPECT_THROW(PartialLatinSquare::FromRows({{0, 5}, {-1, -1}}),
               StructuralError);
  EXPECT_THROW(PartialLatinSquare::FromRows({{0}, {-1, -1}}), StructuralError);
  const auto p = PartialLatinSquare::FromRows({{0, -1}, {-1, -1}});
  EXPECT_EQ(p.known_count(), 1u);
}

TEST(CompleteLatinSquare, FullSquareUnchanged) {
  const LatinSquare sq = RandomLatinSquare(9, 4);
  const CompletionResult r =
      CompleteLatinSquare(PartialLatinSquare::FromSquare(sq));
  EXPECT_EQ(r.status, Status::kUnique);
  EXPECT_EQ(r.square, sq);
}

TEST(CompleteLatinSquare, MissingColumnIsForced) {
  Rng rng(6);
  for (int t = 0; t < 20; ++t) {
    const LatinSquare sq = RandomLatinSquare(4, rng);
    PartialLatinSquare p(4);
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 1; c < 4; ++c) p.Set(r, c, sq.at(r, c));
    const CompletionResult result = CompleteLatinSquare(p);
    EXPECT_EQ(result.status, Status::kUnique);
    EXPECT_EQ(result.square, sq);
  }
}

TEST(CompleteLatinSquare, EmptyGridHasManyCompletions) {
  const CompletionResult r = CompleteLatinSquare(PartialLatinSquare(3));
  EXPECT_EQ(r.status, Status::kMultiple);
  ASSERT_TRUE(r.square.has_value());
  EXPECT_TRUE(testing::IsLatin(r.square->ToRows()));
  EXPECT_EQ(CompleteLatinSquare(PartialLatinSquare(1)).status, Status::kUnique);
}

TEST(CompleteLatinSquare, DetectsUnsat) {
  // Row 0 needs a 1 in column 1, but column 1 already has a 1.
  const auto p = PartialLatinSquare::FromRows({{0, -1}, {-1, 1}});
  EXPECT_EQ(CompleteLatinSquare(p).status, Status::kUnsat);
  EXPECT_FALSE(CompleteLatinSquare(p).square.has_value());
}

TEST(CompleteLatinSquare, CountsAgreeWithEnumeration) {
  // Fix the first row of an order-4 grid: 576 / 24 = 24 completions, so
  // the solver must report several, and the one it returns must extend it.
  const auto p = PartialLatinSquare::FromRows(
      {{0, 1, 2, 3}, {-1, -1, -1, -1}, {-1, -1, -1, -1}, {-1, -1, -1, -1}});
  const CompletionResult r = CompleteLatinSquare(p);
  EXPECT_EQ(r.status, Status::kMultiple);
  for (std::size_t c = 0; c < 4; ++c) EXPECT_EQ(r.square->at(0, c), c);
}

TEST(CompleteLatinSquare, LargeForcedInstance) {
  const LatinSquare sq = RandomLatinSquare(16, 8);
  PartialLatinSquare p(16);
  for (std::size_t r = 0; r < 16; ++r)
    for (std::size_t c = 0; c < 16; ++c)
      if (sq.at(r, c) != 5) p.Set(r, c, sq.at(r, c));
  EXPECT_EQ(p.known_count(), 240u);
  const CompletionResult result = CompleteLatinSquare(p);
  EXPECT_EQ(result.status, Status::kUnique);
  EXPECT_EQ(result.square, sq);
}

}  // namespace
}  // namespace sebq
