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

#include "sebq/key_file.h"

#include <gtest/gtest.h>

#include "sebq/errors.h"

namespace sebq {
namespace {

TEST(KeyFile, RoundTrip) {
  const LatinSquare sq = RandomLatinSquare(16, 42);
  const std::string text = SerializeKeyFile(sq);
  EXPECT_EQ(text.rfind("SEBQ-LSQ v1\n16\n", 0), 0u);
  EXPECT_EQ(ParseKeyFile(text), sq);
}

TEST(KeyFile, ExactLayout) {
  EXPECT_EQ(SerializeKeyFile(LatinSquare::Xor(2)), "SEBQ-LSQ v1\n2\n0 1\n1 0\n");
}

TEST(KeyFile, AcceptsCrLfAndTrailingSpace) {
  EXPECT_EQ(ParseKeyFile("SEBQ-LSQ v1\r\n2\r\n0 1 \r\n1 0\r\n"),
            LatinSquare::Xor(2));
}

TEST(KeyFile, RejectsNonLatinTable) {
  EXPECT_THROW(ParseKeyFile("SEBQ-LSQ v1\n2\n0 0\n1 1\n"), LatinPropertyError);
}

TEST(KeyFile, RejectsMalformedText) {
  EXPECT_THROW(ParseKeyFile(""), StructuralError);
  EXPECT_THROW(ParseKeyFile("SEBQ-LSQ v2\n2\n0 1\n1 0\n"), StructuralError);
  EXPECT_THROW(ParseKeyFile("SEBQ-LSQ v1\nx\n0 1\n1 0\n"), StructuralError);
  EXPECT_THROW(ParseKeyFile("SEBQ-LSQ v1\n2\n0 1\n"), StructuralError);
  EXPECT_THROW(ParseKeyFile("SEBQ-LSQ v1\n2\n0 1 0\n1 0\n"), StructuralError);
  EXPECT_THROW(ParseKeyFile("SEBQ-LSQ v1\n2\n0 a\n1 0\n"), StructuralError);
  EXPECT_THROW(ParseKeyFile("SEBQ-LSQ v1\n2\n0 2\n1 0\n"), StructuralError);
  EXPECT_THROW(ParseKeyFile("SEBQ-LSQ v1\n2\n0 1\n1 0\n1 0\n"),
               StructuralError);
  EXPECT_THROW(ParseKeyFile("SEBQ-LSQ v1\n0\n"), StructuralError);
}

}  // namespace
}  // namespace sebq
