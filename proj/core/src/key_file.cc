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

#include <charconv>
#include <sstream>
#include <vector>

#include "sebq/errors.h"

namespace sebq {
namespace {

std::vector<std::string_view> SplitLines(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    const std::size_t end = text.find('\n');
    std::string_view line = text.substr(0, end);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    if (end == std::string_view::npos) break;
    text.remove_prefix(end + 1);
  }
  return lines;
}

std::int64_t ParseDecimal(std::string_view token, std::size_t line_no) {
  std::int64_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw StructuralError("key file line " + std::to_string(line_no) +
                          ": not a decimal integer: '" + std::string(token) +
                          "'");
  }
  return value;
}

std::vector<std::int64_t> ParseRow(std::string_view line, std::size_t line_no) {
  std::vector<std::int64_t> row;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    if (pos == line.size()) break;
    std::size_t end = pos;
    while (end < line.size() && line[end] != ' ' && line[end] != '\t') ++end;
    row.push_back(ParseDecimal(line.substr(pos, end - pos), line_no));
    pos = end;
  }
  return row;
}

}  // namespace

std::string SerializeKeyFile(const LatinSquare& square) {
  std::ostringstream out;
  out << kKeyFileHeader << '\n' << square.order() << '\n';
  for (std::size_t r = 0; r < square.order(); ++r) {
    for (std::size_t c = 0; c < square.order(); ++c) {
      if (c) out << ' ';
      out << square.at(r, c);
    }
    out << '\n';
  }
  return out.str();
}

LatinSquare ParseKeyFile(std::string_view text) {
  std::vector<std::string_view> lines = SplitLines(text);
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.size() < 2 || lines[0] != kKeyFileHeader)
    throw StructuralError("missing 'SEBQ-LSQ v1' header");
  const std::int64_t n = ParseDecimal(lines[1], 2);
  if (n < 1 || n > static_cast<std::int64_t>(kMaxOrder))
    throw StructuralError("key order out of range");
  if (lines.size() != static_cast<std::size_t>(n) + 2)
    throw StructuralError("key file has " + std::to_string(lines.size() - 2) +
                          " table rows, expected " + std::to_string(n));
  std::vector<std::vector<std::int64_t>> rows;
  rows.reserve(n);
  for (std::size_t i = 2; i < lines.size(); ++i)
    rows.push_back(ParseRow(lines[i], i + 1));
  return LatinSquare::FromRows(rows);
}

}  // namespace sebq
