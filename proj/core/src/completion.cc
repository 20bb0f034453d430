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

#include <bit>
#include <string>

#include "sebq/errors.h"

namespace sebq {
namespace {

class Solver {
 public:
  explicit Solver(const PartialLatinSquare& p)
      : n_(p.order()),
        full_(n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1),
        cells_(n_ * n_),
        row_used_(n_, 0),
        col_used_(n_, 0) {
    for (std::size_t r = 0; r < n_; ++r) {
      for (std::size_t c = 0; c < n_; ++c) {
        if (auto s = p.get(r, c)) {
          cells_[r * n_ + c] = *s;
          row_used_[r] |= std::uint64_t{1} << *s;
          col_used_[c] |= std::uint64_t{1} << *s;
        } else {
          cells_[r * n_ + c] = kEmpty;
          empty_.push_back(r * n_ + c);
        }
      }
    }
  }

  CompletionResult Run() {
    Search(0);
    CompletionResult result;
    if (solutions_ == 0) {
      result.status = CompletionResult::Status::kUnsat;
    } else {
      result.status = solutions_ == 1 ? CompletionResult::Status::kUnique
                                      : CompletionResult::Status::kMultiple;
      result.square = LatinSquare::FromCells(n_, std::move(first_));
    }
    return result;
  }

 private:
  static constexpr Symbol kEmpty = 0xFFFF;

  std::uint64_t Candidates(std::size_t cell) const {
    return full_ & ~(row_used_[cell / n_] | col_used_[cell % n_]);
  }

  // empty_[0, depth) are filled; picks the most constrained of the rest.
  void Search(std::size_t depth) {
    if (solutions_ >= 2) return;
    if (depth == empty_.size()) {
      if (++solutions_ == 1) first_ = cells_;
      return;
    }
    std::size_t best = depth;
    int best_count = 65;
    for (std::size_t i = depth; i < empty_.size(); ++i) {
      const int count = std::popcount(Candidates(empty_[i]));
      if (count < best_count) {
        best = i;
        best_count = count;
        if (count <= 1) break;
      }
    }
    if (best_count == 0) return;
    std::swap(empty_[depth], empty_[best]);
    const std::size_t cell = empty_[depth];
    const std::size_t r = cell / n_, c = cell % n_;
    for (std::uint64_t cand = Candidates(cell); cand; cand &= cand - 1) {
      const int s = std::countr_zero(cand);
      const std::uint64_t bit = std::uint64_t{1} << s;
      cells_[cell] = static_cast<Symbol>(s);
      row_used_[r] |= bit;
      col_used_[c] |= bit;
      Search(depth + 1);
      row_used_[r] &= ~bit;
      col_used_[c] &= ~bit;
      if (solutions_ >= 2) break;
    }
    cells_[cell] = kEmpty;
    std::swap(empty_[depth], empty_[best]);
  }

  std::size_t n_;
  std::uint64_t full_;
  std::vector<Symbol> cells_;
  std::vector<std::uint64_t> row_used_, col_used_;
  std::vector<std::size_t> empty_;
  std::size_t solutions_ = 0;
  std::vector<Symbol> first_;
};

}  // namespace

PartialLatinSquare::PartialLatinSquare(std::size_t order)
    : order_(order),
      cells_(order * order),
      row_used_(order, 0),
      col_used_(order, 0) {
  if (order == 0 || order > kMaxCompletionOrder)
    throw InvalidArgument("partial square order must be in 1..64");
}

PartialLatinSquare PartialLatinSquare::FromRows(
    const std::vector<std::vector<std::int64_t>>& rows) {
  const std::size_t n = rows.size();
  if (n == 0) throw StructuralError("partial square has no rows");
  PartialLatinSquare p(n);
  for (std::size_t r = 0; r < n; ++r) {
    if (rows[r].size() != n)
      throw StructuralError("row " + std::to_string(r) + " has length " +
                            std::to_string(rows[r].size()) + ", expected " +
                            std::to_string(n));
    for (std::size_t c = 0; c < n; ++c) {
      const std::int64_t v = rows[r][c];
      if (v == -1) continue;
      if (v < 0 || v >= static_cast<std::int64_t>(n))
        throw StructuralError("symbol " + std::to_string(v) +
                              " out of range at row " + std::to_string(r));
      p.Set(r, c, static_cast<Symbol>(v));
    }
  }
  return p;
}

PartialLatinSquare PartialLatinSquare::FromSquare(const LatinSquare& square) {
  PartialLatinSquare p(square.order());
  for (std::size_t r = 0; r < square.order(); ++r)
    for (std::size_t c = 0; c < square.order(); ++c)
      p.Set(r, c, square.at(r, c));
  return p;
}

bool PartialLatinSquare::TrySet(std::size_t r, std::size_t c, Symbol s) {
  if (r >= order_ || c >= order_ || s >= order_)
    throw InvalidArgument("cell or symbol out of range");
  std::optional<Symbol>& cell = cells_[r * order_ + c];
  if (cell) return *cell == s;
  const std::uint64_t bit = std::uint64_t{1} << s;
  if ((row_used_[r] | col_used_[c]) & bit) return false;
  cell = s;
  row_used_[r] |= bit;
  col_used_[c] |= bit;
  ++known_count_;
  return true;
}

void PartialLatinSquare::Set(std::size_t r, std::size_t c, Symbol s) {
  if (!TrySet(r, c, s))
    throw LatinPropertyError("symbol " + std::to_string(s) + " at (" +
                             std::to_string(r) + ", " + std::to_string(c) +
                             ") conflicts with a known cell");
}

std::size_t PartialLatinSquare::CountMatching(const LatinSquare& truth) const {
  if (truth.order() != order_) throw InvalidArgument("order mismatch");
  std::size_t matches = 0;
  for (std::size_t i = 0; i < cells_.size(); ++i)
    if (cells_[i] && *cells_[i] == truth.cells()[i]) ++matches;
  return matches;
}

CompletionResult CompleteLatinSquare(const PartialLatinSquare& partial) {
  return Solver(partial).Run();
}

}  // namespace sebq
