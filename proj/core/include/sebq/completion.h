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

#ifndef SEBQ_COMPLETION_H_
#define SEBQ_COMPLETION_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "sebq/latin_square.h"

namespace sebq {

// Completion works on 64-bit candidate masks.
inline constexpr std::size_t kMaxCompletionOrder = 64;

// An order-n grid in which some cells are known. Known cells never repeat a
// symbol within a row or column.
class PartialLatinSquare {
 public:
  explicit PartialLatinSquare(std::size_t order);
  // Rows of symbols with -1 for unknown cells. Throws StructuralError on a
  // bad shape or range and LatinPropertyError on a duplicate.
  static PartialLatinSquare FromRows(
      const std::vector<std::vector<std::int64_t>>& rows);
  static PartialLatinSquare FromSquare(const LatinSquare& square);

  std::size_t order() const { return order_; }
  bool known(std::size_t r, std::size_t c) const {
    return cells_[r * order_ + c].has_value();
  }
  std::optional<Symbol> get(std::size_t r, std::size_t c) const {
    return cells_[r * order_ + c];
  }
  std::size_t known_count() const { return known_count_; }

  // Fills an unknown cell. Returns false, leaving the grid untouched, when
  // the cell already holds a different symbol or the symbol would repeat in
  // its row or column. Setting a cell to its current value succeeds.
  bool TrySet(std::size_t r, std::size_t c, Symbol s);
  // Throws LatinPropertyError where TrySet would return false.
  void Set(std::size_t r, std::size_t c, Symbol s);

  // Cells equal to the corresponding cell of `truth`.
  std::size_t CountMatching(const LatinSquare& truth) const;

 private:
  std::size_t order_;
  std::size_t known_count_ = 0;
  std::vector<std::optional<Symbol>> cells_;
  std::vector<std::uint64_t> row_used_, col_used_;
};

struct CompletionResult {
  enum class Status { kUnique, kMultiple, kUnsat };

  Status status = Status::kUnsat;
  // The first completion found, if any.
  std::optional<LatinSquare> square;
};

// Backtracking search, always filling the unknown cell with the fewest
// candidates. Stops after finding a second completion. Throws
// InvalidArgument above kMaxCompletionOrder.
CompletionResult CompleteLatinSquare(const PartialLatinSquare& partial);

}  // namespace sebq

#endif  // SEBQ_COMPLETION_H_
