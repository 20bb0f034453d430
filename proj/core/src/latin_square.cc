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

#include "sebq/latin_square.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "sebq/errors.h"

namespace sebq {
namespace {

void ThrowFor(const LatinCheck& check) {
  if (check.structural()) throw StructuralError(check.Describe());
  throw LatinPropertyError(check.Describe());
}

// Jacobson-Matthews walk over the incidence cube M[x][y][z] (1 when cell
// (x, y) holds z). A proper state is a Latin square; an improper state has
// exactly one -1 entry. Instead of storing the n^3 cube we keep, for every
// line of the cube, the sums of idx*M and idx^2*M over the line. A line
// without the -1 entry has one +1, whose index is the first sum; a line
// through the -1 entry at c has two +1 entries a, b with a+b = s1 + c and
// a^2+b^2 = s2 + c^2, which determines them.
class JacobsonMatthews {
 public:
  explicit JacobsonMatthews(const LatinSquare& start)
      : n_(start.order()),
        xy_(n_ * n_), xz_(n_ * n_), yz_(n_ * n_) {
    for (std::size_t x = 0; x < n_; ++x)
      for (std::size_t y = 0; y < n_; ++y) Add(x, y, start.at(x, y), 1);
  }

  void Step(Rng& rng) {
    std::size_t x, y, z, x1, y1, z1;
    if (proper_) {
      x = UniformBelow(rng, n_);
      y = UniformBelow(rng, n_);
      const std::size_t current = Single(xy_[x * n_ + y]);
      z = UniformBelow(rng, n_ - 1);
      if (z >= current) ++z;
      x1 = Single(yz_[y * n_ + z]);
      y1 = Single(xz_[x * n_ + z]);
      z1 = current;
    } else {
      x = ix_;
      y = iy_;
      z = iz_;
      x1 = PickOfTwo(yz_[y * n_ + z], x, rng);
      y1 = PickOfTwo(xz_[x * n_ + z], y, rng);
      z1 = PickOfTwo(xy_[x * n_ + y], z, rng);
    }
    // Line (x1, y1) never passes through the -1 cell, so it has one entry.
    const bool corner_was_set = Single(xy_[x1 * n_ + y1]) == z1;

    Add(x, y, z, 1);
    Add(x, y1, z1, 1);
    Add(x1, y, z1, 1);
    Add(x1, y1, z, 1);
    Add(x, y1, z, -1);
    Add(x1, y, z, -1);
    Add(x, y, z1, -1);
    Add(x1, y1, z1, -1);

    proper_ = corner_was_set;
    if (!proper_) {
      ix_ = x1;
      iy_ = y1;
      iz_ = z1;
    }
  }

  bool proper() const { return proper_; }

  std::vector<Symbol> Cells() const {
    std::vector<Symbol> cells(n_ * n_);
    for (std::size_t i = 0; i < cells.size(); ++i)
      cells[i] = static_cast<Symbol>(Single(xy_[i]));
    return cells;
  }

 private:
  struct LineSums {
    std::int64_t s1 = 0;
    std::int64_t s2 = 0;
  };

  static std::size_t Single(const LineSums& line) {
    return static_cast<std::size_t>(line.s1);
  }

  // The two +1 positions of a line whose -1 entry sits at `minus`.
  static std::size_t PickOfTwo(const LineSums& line, std::size_t minus,
                               Rng& rng) {
    const auto c = static_cast<std::int64_t>(minus);
    const std::int64_t sum = line.s1 + c;
    const std::int64_t squares = line.s2 + c * c;
    const auto gap = static_cast<std::int64_t>(
        std::llround(std::sqrt(static_cast<double>(2 * squares - sum * sum))));
    const std::int64_t hi = (sum + gap) / 2;
    const std::int64_t lo = (sum - gap) / 2;
    return static_cast<std::size_t>(RandomBit(rng) ? hi : lo);
  }

  void Add(std::size_t x, std::size_t y, std::size_t z, int delta) {
    auto bump = [delta](LineSums& line, std::size_t idx) {
      const auto v = static_cast<std::int64_t>(idx);
      line.s1 += delta * v;
      line.s2 += delta * v * v;
    };
    bump(xy_[x * n_ + y], z);
    bump(xz_[x * n_ + z], y);
    bump(yz_[y * n_ + z], x);
  }

  std::size_t n_;
  std::vector<LineSums> xy_, xz_, yz_;
  bool proper_ = true;
  std::size_t ix_ = 0, iy_ = 0, iz_ = 0;
};

std::vector<std::size_t> RandomPermutation(std::size_t n, Rng& rng) {
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  Shuffle(perm, rng);
  return perm;
}

}  // namespace

std::string LatinCheck::Describe() const {
  std::ostringstream out;
  switch (status) {
    case Status::kValid:
      out << "valid Latin square";
      break;
    case Status::kNotSquare:
      out << "table is not square (row " << index << " has wrong length)";
      break;
    case Status::kSymbolOutOfRange:
      out << "symbol " << symbol << " out of range in row " << index;
      break;
    case Status::kDuplicateInRow:
      out << "duplicate symbol " << symbol << " in row " << index;
      break;
    case Status::kDuplicateInColumn:
      out << "duplicate symbol " << symbol << " in column " << index;
      break;
  }
  return out.str();
}

LatinCheck ValidateLatinSquare(
    const std::vector<std::vector<std::int64_t>>& table) {
  const std::size_t n = table.size();
  LatinCheck check;
  if (n == 0) {
    check.status = LatinCheck::Status::kNotSquare;
    return check;
  }
  for (std::size_t r = 0; r < n; ++r) {
    if (table[r].size() != n) {
      check.status = LatinCheck::Status::kNotSquare;
      check.index = r;
      return check;
    }
    for (std::int64_t v : table[r]) {
      if (v < 0 || v >= static_cast<std::int64_t>(n)) {
        check.status = LatinCheck::Status::kSymbolOutOfRange;
        check.index = r;
        check.symbol = v;
        return check;
      }
    }
  }
  std::vector<char> seen(n);
  for (std::size_t r = 0; r < n; ++r) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::int64_t v : table[r]) {
      if (seen[v]) {
        check.status = LatinCheck::Status::kDuplicateInRow;
        check.index = r;
        check.symbol = v;
        return check;
      }
      seen[v] = 1;
    }
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t r = 0; r < n; ++r) {
      const std::int64_t v = table[r][c];
      if (seen[v]) {
        check.status = LatinCheck::Status::kDuplicateInColumn;
        check.index = c;
        check.symbol = v;
        return check;
      }
      seen[v] = 1;
    }
  }
  return check;
}

LatinSquare LatinSquare::FromRows(
    const std::vector<std::vector<std::int64_t>>& rows) {
  const LatinCheck check = ValidateLatinSquare(rows);
  if (!check.ok()) ThrowFor(check);
  if (rows.size() > kMaxOrder) throw StructuralError("order above kMaxOrder");
  const std::size_t n = rows.size();
  std::vector<Symbol> cells;
  cells.reserve(n * n);
  for (const auto& row : rows)
    for (std::int64_t v : row) cells.push_back(static_cast<Symbol>(v));
  return LatinSquare(n, std::move(cells));
}

LatinSquare LatinSquare::FromCells(std::size_t order,
                                   std::vector<Symbol> cells) {
  if (order == 0 || cells.size() != order * order)
    throw StructuralError("cell count does not match order");
  std::vector<std::vector<std::int64_t>> rows(order);
  for (std::size_t r = 0; r < order; ++r)
    rows[r].assign(cells.begin() + r * order, cells.begin() + (r + 1) * order);
  const LatinCheck check = ValidateLatinSquare(rows);
  if (!check.ok()) ThrowFor(check);
  if (order > kMaxOrder) throw StructuralError("order above kMaxOrder");
  return LatinSquare(order, std::move(cells));
}

LatinSquare LatinSquare::Xor(std::size_t order) {
  if (order == 0 || (order & (order - 1)) != 0 || order > kMaxOrder)
    throw InvalidArgument("XOR square needs a power-of-two order");
  std::vector<Symbol> cells(order * order);
  for (std::size_t i = 0; i < order; ++i)
    for (std::size_t j = 0; j < order; ++j)
      cells[i * order + j] = static_cast<Symbol>(i ^ j);
  return LatinSquare(order, std::move(cells));
}

LatinSquare LatinSquare::Cyclic(std::size_t order) {
  if (order == 0 || order > kMaxOrder)
    throw InvalidArgument("order must be in 1..kMaxOrder");
  std::vector<Symbol> cells(order * order);
  for (std::size_t i = 0; i < order; ++i)
    for (std::size_t j = 0; j < order; ++j)
      cells[i * order + j] = static_cast<Symbol>((i + j) % order);
  return LatinSquare(order, std::move(cells));
}

std::vector<std::vector<std::int64_t>> LatinSquare::ToRows() const {
  std::vector<std::vector<std::int64_t>> rows(order_);
  for (std::size_t r = 0; r < order_; ++r)
    rows[r].assign(cells_.begin() + r * order_,
                   cells_.begin() + (r + 1) * order_);
  return rows;
}

LatinSquare Parastrophe(const LatinSquare& mul) {
  const std::size_t n = mul.order();
  std::vector<Symbol> cells(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      cells[x * n + mul.at(x, y)] = static_cast<Symbol>(y);
  return LatinSquare::FromCells(n, std::move(cells));
}

Quasigroup::Quasigroup(LatinSquare mul)
    : mul_(std::move(mul)), ldiv_(Parastrophe(mul_)) {}

std::size_t DefaultProperVisits(std::size_t order) {
  // The walk sits on a proper square about once every `order` moves, so
  // this is roughly min(n^3, 2n^2 + 4096) moves, and at least 256.
  const std::size_t n = order;
  const std::size_t moves =
      std::max<std::size_t>(256, std::min(n * n * n, 2 * n * n + 4096));
  return (moves + n - 1) / n;
}

LatinSquare RandomLatinSquare(std::size_t order, Rng& rng,
                              std::optional<std::size_t> proper_visits) {
  if (order == 0 || order > kMaxOrder)
    throw InvalidArgument("Latin square order must be in 1..kMaxOrder");
  if (order < 3) {
    // Orders 1 and 2 are reached by the isotopy alone.
    const LatinSquare base = LatinSquare::Cyclic(order);
    std::vector<Symbol> cells = base.cells();
    if (order == 2 && RandomBit(rng))
      for (auto& s : cells) s ^= 1;
    return LatinSquare::FromCells(order, std::move(cells));
  }
  JacobsonMatthews walk(LatinSquare::Cyclic(order));
  const std::size_t visits =
      proper_visits.value_or(DefaultProperVisits(order));
  if (visits == 0) throw InvalidArgument("proper visits must be positive");
  // Stop on a fixed count of proper squares. Stopping on the first proper
  // square after a fixed number of moves would favour squares reached from
  // long improper excursions.
  for (std::size_t seen = 0; seen < visits;) {
    walk.Step(rng);
    seen += walk.proper();
  }

  const std::vector<Symbol> mixed = walk.Cells();
  const auto rows = RandomPermutation(order, rng);
  const auto cols = RandomPermutation(order, rng);
  const auto syms = RandomPermutation(order, rng);
  std::vector<Symbol> cells(order * order);
  for (std::size_t r = 0; r < order; ++r)
    for (std::size_t c = 0; c < order; ++c)
      cells[rows[r] * order + cols[c]] =
          static_cast<Symbol>(syms[mixed[r * order + c]]);
  return LatinSquare::FromCells(order, std::move(cells));
}

LatinSquare RandomLatinSquare(std::size_t order, std::uint64_t seed) {
  Rng rng(seed);
  return RandomLatinSquare(order, rng);
}

std::optional<LatinSquare> SwapRandomIntercalate(const LatinSquare& square,
                                                 Rng& rng) {
  const std::size_t n = square.order();
  // Column of each symbol within each row.
  std::vector<std::size_t> col_of(n * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) col_of[r * n + square.at(r, c)] = c;

  struct Intercalate {
    std::size_t r1, r2, c1, c2;
  };
  std::vector<Intercalate> found;
  for (std::size_t r1 = 0; r1 < n; ++r1) {
    for (std::size_t r2 = r1 + 1; r2 < n; ++r2) {
      for (std::size_t c1 = 0; c1 < n; ++c1) {
        const Symbol a = square.at(r1, c1);
        const Symbol b = square.at(r2, c1);
        const std::size_t c2 = col_of[r1 * n + b];
        if (c2 > c1 && square.at(r2, c2) == a)
          found.push_back({r1, r2, c1, c2});
      }
    }
  }
  if (found.empty()) return std::nullopt;
  const Intercalate& pick = found[UniformBelow(rng, found.size())];
  std::vector<Symbol> cells = square.cells();
  std::swap(cells[pick.r1 * n + pick.c1], cells[pick.r1 * n + pick.c2]);
  std::swap(cells[pick.r2 * n + pick.c1], cells[pick.r2 * n + pick.c2]);
  return LatinSquare::FromCells(n, std::move(cells));
}

}  // namespace sebq
