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

#include "sebq/counting.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <string>

#include "sebq/errors.h"

namespace sebq {
namespace {

double Log2Factorial(std::size_t n) {
  return std::lgamma(static_cast<double>(n) + 1.0) / std::log(2.0);
}

std::int64_t Binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::int64_t result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result = result * static_cast<std::int64_t>(n - k + i) /
             static_cast<std::int64_t>(i);
  }
  return result;
}

// Fills rows [row, n) of a partial Latin square; used_col[c] is a bitmask of
// symbols already placed in column c.
std::uint64_t ExtendRows(std::size_t n, std::size_t row,
                         std::vector<std::uint32_t>& used_col) {
  if (row == n) return 1;
  std::uint64_t total = 0;
  auto fill = [&](auto&& self, std::size_t col, std::uint32_t row_used) -> void {
    if (col == n) {
      total += ExtendRows(n, row + 1, used_col);
      return;
    }
    const std::uint32_t full = (1u << n) - 1;
    std::uint32_t options = full & ~row_used & ~used_col[col];
    while (options) {
      const std::uint32_t bit = options & (~options + 1);
      options ^= bit;
      used_col[col] |= bit;
      self(self, col + 1, row_used | bit);
      used_col[col] ^= bit;
    }
  };
  fill(fill, 0, 0);
  return total;
}

}  // namespace

BinaryMatrix::BinaryMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), bits_(rows * cols) {}

BinaryMatrix BinaryMatrix::FromRows(const std::vector<std::vector<int>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows[0].size();
  BinaryMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw InvalidArgument("ragged binary matrix");
    for (std::size_t j = 0; j < c; ++j) {
      if (rows[i][j] != 0 && rows[i][j] != 1)
        throw InvalidArgument("binary matrix entries must be 0 or 1");
      m.set(i, j, rows[i][j] == 1);
    }
  }
  return m;
}

std::size_t BinaryMatrix::CountZeros() const {
  return static_cast<std::size_t>(
      std::count(bits_.begin(), bits_.end(), std::uint8_t{0}));
}

std::uint64_t Permanent(const BinaryMatrix& m) {
  if (m.rows() != m.cols())
    throw InvalidArgument("permanent needs a square matrix");
  const std::size_t n = m.rows();
  if (n > kMaxPermanentOrder)
    throw InvalidArgument("permanent order above guard (20)");
  if (n == 0) return 1;
  // ways[mask]: assignments of the first popcount(mask) rows to the columns
  // in mask.
  std::vector<std::uint64_t> ways(std::size_t{1} << n, 0);
  ways[0] = 1;
  for (std::size_t mask = 0; mask < ways.size(); ++mask) {
    if (ways[mask] == 0) continue;
    const auto row = static_cast<std::size_t>(
        std::popcount(static_cast<std::uint64_t>(mask)));
    if (row == n) continue;
    for (std::size_t col = 0; col < n; ++col) {
      if ((mask >> col) & 1u) continue;
      if (m.at(row, col)) ways[mask | (std::size_t{1} << col)] += ways[mask];
    }
  }
  return ways.back();
}

BigInt CountLatinSquaresFormula(std::size_t n) {
  if (n < 1 || n > 4)
    throw InvalidArgument("formula count is limited to orders 1..4");
  const std::size_t cells = n * n;
  BigInt sum = 0;
  BinaryMatrix a(n, n);
  for (std::uint64_t pattern = 0; pattern < (std::uint64_t{1} << cells);
       ++pattern) {
    for (std::size_t i = 0; i < cells; ++i)
      a.set(i / n, i % n, (pattern >> i) & 1u);
    const std::int64_t term = Binomial(Permanent(a), n);
    if (term == 0) continue;
    const std::size_t zeros =
        cells - static_cast<std::size_t>(std::popcount(pattern));
    if (zeros % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  BigInt factorial = 1;
  for (std::size_t i = 2; i <= n; ++i) factorial *= i;
  return factorial * sum;
}

std::uint64_t CountLatinSquaresBacktrack(std::size_t n) {
  if (n < 1 || n > 5)
    throw InvalidArgument("backtracking count is limited to orders 1..5");
  std::vector<std::uint32_t> used_col(n, 0);
  return ExtendRows(n, 0, used_col);
}

std::optional<BigInt> KnownLatinSquareCount(std::size_t n) {
  static const char* const kCounts[] = {
      "1",
      "2",
      "12",
      "576",
      "161280",
      "812851200",
      "61479419904000",
      "108776032459082956800",
      "5524751496156892842531225600",
      "9982437658213039871725064756920320000",
  };
  if (n < 1 || n > std::size(kCounts)) return std::nullopt;
  return BigInt(kCounts[n - 1]);
}

Log2Bounds LatinSquareLog2Bounds(std::size_t n) {
  if (n == 0) throw InvalidArgument("order must be positive");
  const double dn = static_cast<double>(n);
  Log2Bounds bounds;
  bounds.lower = 2.0 * dn * Log2Factorial(n) - dn * dn * std::log2(dn);
  for (std::size_t j = 1; j <= n; ++j)
    bounds.upper += dn / static_cast<double>(j) * Log2Factorial(j);
  return bounds;
}

double Log2(const BigInt& value) {
  if (value <= 0) throw InvalidArgument("log2 of a non-positive value");
  const std::size_t top = boost::multiprecision::msb(value);
  if (top < 60) return std::log2(value.convert_to<double>());
  const std::size_t shift = top - 52;
  const BigInt head = value >> shift;
  return std::log2(head.convert_to<double>()) + static_cast<double>(shift);
}

}  // namespace sebq
