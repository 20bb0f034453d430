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

// Brute-force reference helpers shared by the unit tests. Everything here is
// written from the definitions, independently of the library code it checks.

#ifndef SEBQ_TESTS_ORACLES_H_
#define SEBQ_TESTS_ORACLES_H_

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "sebq/latin_square.h"
#include "sebq/rng.h"

namespace sebq::testing {

using Table = std::vector<std::vector<std::int64_t>>;

inline bool IsLatin(const Table& t) {
  const std::size_t n = t.size();
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<bool> row(n), col(n);
    for (std::size_t j = 0; j < n; ++j) {
      if (t[i][j] < 0 || t[i][j] >= static_cast<std::int64_t>(n)) return false;
      if (t[j][i] < 0 || t[j][i] >= static_cast<std::int64_t>(n)) return false;
      if (row[t[i][j]] || col[t[j][i]]) return false;
      row[t[i][j]] = col[t[j][i]] = true;
    }
  }
  return true;
}

// Every Latin square of order n as row-major cells, by trying all row
// permutations in turn. Only sensible for n <= 4.
inline std::vector<std::vector<Symbol>> AllLatinSquares(std::size_t n) {
  std::vector<std::vector<Symbol>> perms;
  std::vector<Symbol> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));

  std::vector<std::vector<Symbol>> out;
  std::vector<std::size_t> pick;
  auto rec = [&](auto&& self) -> void {
    if (pick.size() == n) {
      std::vector<Symbol> cells;
      for (std::size_t r : pick)
        cells.insert(cells.end(), perms[r].begin(), perms[r].end());
      out.push_back(cells);
      return;
    }
    for (std::size_t r = 0; r < perms.size(); ++r) {
      bool ok = true;
      for (std::size_t prev : pick)
        for (std::size_t c = 0; c < n && ok; ++c)
          ok = perms[prev][c] != perms[r][c];
      if (!ok) continue;
      pick.push_back(r);
      self(self);
      pick.pop_back();
    }
  };
  rec(rec);
  return out;
}

inline std::vector<Symbol> RandomSymbols(std::size_t count, std::size_t order,
                                         Rng& rng) {
  std::vector<Symbol> out(count);
  for (Symbol& s : out) s = static_cast<Symbol>(rng() % order);
  return out;
}

// Solves x * y = z for y by scanning row x.
inline Symbol SolveRight(const LatinSquare& q, Symbol x, Symbol z) {
  for (std::size_t y = 0; y < q.order(); ++y)
    if (q.at(x, y) == z) return static_cast<Symbol>(y);
  return 0xFFFF;
}

}  // namespace sebq::testing

#endif  // SEBQ_TESTS_ORACLES_H_
