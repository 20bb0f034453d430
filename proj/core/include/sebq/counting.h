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

#ifndef SEBQ_COUNTING_H_
#define SEBQ_COUNTING_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace sebq {

using BigInt = boost::multiprecision::cpp_int;

// Dense 0/1 matrix.
class BinaryMatrix {
 public:
  BinaryMatrix(std::size_t rows, std::size_t cols);
  // Throws InvalidArgument on ragged input or entries outside {0, 1}.
  static BinaryMatrix FromRows(const std::vector<std::vector<int>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool at(std::size_t r, std::size_t c) const { return bits_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, bool v) { bits_[r * cols_ + c] = v; }
  std::size_t CountZeros() const;

 private:
  std::size_t rows_, cols_;
  std::vector<std::uint8_t> bits_;
};

inline constexpr std::size_t kMaxPermanentOrder = 20;

// Exact permanent via a DP over column subsets (O(n 2^n)); every partial sum
// counts matchings, so the result never exceeds n! and fits in 64 bits.
std::uint64_t Permanent(const BinaryMatrix& m);

// L(n) = n! * sum over all n x n 0/1 matrices A of
//        (-1)^(zeros in A) * binomial(perm(A), n).
// The sum has 2^(n^2) terms, so n is limited to 1..4.
BigInt CountLatinSquaresFormula(std::size_t n);

// Row-by-row exhaustive enumeration; n in 1..5.
std::uint64_t CountLatinSquaresBacktrack(std::size_t n);

// Published exact counts for orders 1..10, nullopt beyond that.
std::optional<BigInt> KnownLatinSquareCount(std::size_t n);

struct Log2Bounds {
  double lower = 0;  // log2((n!)^(2n) / n^(n^2))
  double upper = 0;  // log2(prod_{j=1..n} (j!)^(n/j))
};

// Throws InvalidArgument for n = 0.
Log2Bounds LatinSquareLog2Bounds(std::size_t n);

double Log2(const BigInt& value);

}  // namespace sebq

#endif  // SEBQ_COUNTING_H_
