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

#ifndef SEBQ_LATIN_SQUARE_H_
#define SEBQ_LATIN_SQUARE_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sebq/rng.h"

namespace sebq {

// Quasigroup elements. Symbols are 0..n-1; the cipher only ever uses orders
// up to 256, but the combinatorics layer works for any order that fits.
using Symbol = std::uint16_t;

inline constexpr std::size_t kMaxOrder = 4096;

// Outcome of checking a candidate table for the Latin property.
struct LatinCheck {
  enum class Status {
    kValid,
    kNotSquare,         // structural
    kSymbolOutOfRange,  // structural
    kDuplicateInRow,
    kDuplicateInColumn,
  };

  Status status = Status::kValid;
  // Offending row/column index, and the duplicated (or out-of-range) symbol.
  std::size_t index = 0;
  std::int64_t symbol = 0;

  bool ok() const { return status == Status::kValid; }
  bool structural() const {
    return status == Status::kNotSquare ||
           status == Status::kSymbolOutOfRange;
  }
  std::string Describe() const;
};

// Checks the Latin property of an arbitrary integer table. Reports the first
// problem found, scanning rows before columns.
LatinCheck ValidateLatinSquare(
    const std::vector<std::vector<std::int64_t>>& table);

// An order-n table over 0..n-1 in which every row and every column is a
// permutation. Immutable once built.
class LatinSquare {
 public:
  // Throws StructuralError or LatinPropertyError.
  static LatinSquare FromRows(
      const std::vector<std::vector<std::int64_t>>& rows);
  // Row-major cells; same errors as FromRows.
  static LatinSquare FromCells(std::size_t order, std::vector<Symbol> cells);

  // entry[i][j] = i XOR j. Requires a power-of-two order.
  static LatinSquare Xor(std::size_t order);
  // entry[i][j] = (i + j) mod n.
  static LatinSquare Cyclic(std::size_t order);

  std::size_t order() const { return order_; }
  Symbol at(std::size_t row, std::size_t col) const {
    return cells_[row * order_ + col];
  }
  std::span<const Symbol> row(std::size_t r) const {
    return {cells_.data() + r * order_, order_};
  }
  const std::vector<Symbol>& cells() const { return cells_; }
  std::vector<std::vector<std::int64_t>> ToRows() const;

  friend bool operator==(const LatinSquare&, const LatinSquare&) = default;

 private:
  LatinSquare(std::size_t order, std::vector<Symbol> cells)
      : order_(order), cells_(std::move(cells)) {}

  std::size_t order_ = 0;
  std::vector<Symbol> cells_;
};

// Left division table: D[x][z] is the unique y with mul[x][y] = z.
LatinSquare Parastrophe(const LatinSquare& mul);

// A Latin square together with its parastrophe, so both x*y and x\y are a
// single table lookup.
class Quasigroup {
 public:
  explicit Quasigroup(LatinSquare mul);

  std::size_t order() const { return mul_.order(); }
  Symbol mul(Symbol x, Symbol y) const { return mul_.at(x, y); }
  Symbol ldiv(Symbol x, Symbol y) const { return ldiv_.at(x, y); }

  const LatinSquare& mul_table() const { return mul_; }
  const LatinSquare& ldiv_table() const { return ldiv_; }

 private:
  LatinSquare mul_;
  LatinSquare ldiv_;
};

// Proper squares a RandomLatinSquare walk passes through by default.
std::size_t DefaultProperVisits(std::size_t order);

// Random Latin square from a Jacobson-Matthews walk started at the cyclic
// square and stopped on its proper_visits-th proper square, followed by a
// random isotopy (row, column and symbol permutation). Deterministic for a
// given engine state. Throws InvalidArgument for order 0, order above
// kMaxOrder, or proper_visits = 0.
LatinSquare RandomLatinSquare(std::size_t order, Rng& rng,
                              std::optional<std::size_t> proper_visits = {});
LatinSquare RandomLatinSquare(std::size_t order, std::uint64_t seed);

// Exchanges the two symbols of a randomly chosen intercalate (a 2x2
// sub-square on two symbols). Returns nullopt when the square has none.
std::optional<LatinSquare> SwapRandomIntercalate(const LatinSquare& square,
                                                 Rng& rng);

}  // namespace sebq

#endif  // SEBQ_LATIN_SQUARE_H_
