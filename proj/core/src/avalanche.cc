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

#include "sebq/avalanche.h"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

#include "json.hpp"
#include "sebq/errors.h"

namespace sebq {
namespace {

BlockVector RandomBlocks(std::size_t count, std::size_t order, Rng& rng) {
  BlockVector out(count);
  for (Symbol& s : out) s = static_cast<Symbol>(UniformBelow(rng, order));
  return out;
}

std::size_t BlocksFor(std::size_t bits, int k, const char* what) {
  if (bits == 0 || bits % k != 0)
    throw InvalidArgument(std::string(what) +
                          " length must be a positive multiple of k");
  return bits / k;
}

}  // namespace

const char* AvalancheTargetName(AvalancheTarget target) {
  switch (target) {
    case AvalancheTarget::kKey: return "key";
    case AvalancheTarget::kIv: return "iv";
    case AvalancheTarget::kPlaintext: return "plaintext";
  }
  return "?";
}

std::optional<AvalancheTarget> ParseAvalancheTarget(const std::string& name) {
  if (name == "key") return AvalancheTarget::kKey;
  if (name == "iv") return AvalancheTarget::kIv;
  if (name == "plaintext") return AvalancheTarget::kPlaintext;
  return std::nullopt;
}

double PercentChanged(std::span<const Symbol> a, std::span<const Symbol> b,
                      int k) {
  if (a.size() != b.size()) throw InvalidArgument("length mismatch");
  if (a.empty()) return 0.0;
  std::size_t diff = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    diff += std::popcount(static_cast<unsigned>(a[i] ^ b[i]));
  return 100.0 * static_cast<double>(diff) / (static_cast<double>(a.size()) * k);
}

void FlipBit(BlockVector& blocks, std::size_t position, int k) {
  if (position >= blocks.size() * static_cast<std::size_t>(k))
    throw InvalidArgument("flip position " + std::to_string(position) +
                          " is out of range");
  blocks[position / k] ^= static_cast<Symbol>(1u << (k - 1 - position % k));
}

double AvalancheOnce(AvalancheTarget target, const SebqKey& key,
                     const BlockVector& iv, const BlockVector& message,
                     std::size_t position, Rng& rng) {
  const BlockVector base = Encrypt(key, iv, message);
  BlockVector changed;
  switch (target) {
    case AvalancheTarget::kKey: {
      auto square = SwapRandomIntercalate(key.quasigroup().mul_table(), rng);
      if (!square)
        throw InvalidArgument("key square has no intercalate to swap");
      changed = Encrypt(SebqKey::FromSquare(std::move(*square)), iv, message);
      break;
    }
    case AvalancheTarget::kIv: {
      BlockVector flipped = iv;
      FlipBit(flipped, position, key.bits());
      changed = Encrypt(key, flipped, message);
      break;
    }
    case AvalancheTarget::kPlaintext: {
      BlockVector flipped = message;
      FlipBit(flipped, position, key.bits());
      changed = Encrypt(key, iv, flipped);
      break;
    }
  }
  return PercentChanged(base, changed, key.bits());
}

std::vector<double> AvalancheReport::PositionAverages() const {
  std::vector<double> out;
  for (const auto& row : percent)
    out.push_back(row.empty() ? 0.0
                              : std::accumulate(row.begin(), row.end(), 0.0) /
                                    row.size());
  return out;
}

std::string AvalancheReport::ToCsv() const {
  std::ostringstream out;
  const std::size_t trials = percent.empty() ? 0 : percent.front().size();
  out << "position";
  for (std::size_t t = 1; t <= trials; ++t) out << ",trial_" << t;
  out << ",average\n";
  out.setf(std::ios::fixed);
  out.precision(3);
  const std::vector<double> averages = PositionAverages();
  for (std::size_t i = 0; i < percent.size(); ++i) {
    out << positions[i];
    for (double p : percent[i]) out << ',' << p;
    out << ',' << averages[i] << '\n';
  }
  return out.str();
}

std::string AvalancheReport::ToJson() const {
  nlohmann::json j = {{"target", AvalancheTargetName(target)},
                      {"positions", positions},
                      {"percent", percent},
                      {"position_average", PositionAverages()},
                      {"max", max},
                      {"min", min},
                      {"mean", mean}};
  return j.dump();
}

AvalancheReport RunAvalanche(AvalancheTarget target,
                             const AvalancheParams& params) {
  const int k = params.k;
  if (k < kMinSymbolBits || k > kMaxSymbolBits)
    throw InvalidArgument("k must be in 1..8");
  if (params.positions.empty() || params.trials_per_position == 0)
    throw InvalidArgument("avalanche needs at least one flip");
  const std::size_t n = BlocksFor(params.iv_bits, k, "IV");
  const std::size_t l = BlocksFor(params.message_bits, k, "message");
  const std::size_t limit =
      target == AvalancheTarget::kIv ? params.iv_bits : params.message_bits;
  for (std::size_t p : params.positions)
    if (target != AvalancheTarget::kKey && p >= limit)
      throw InvalidArgument("flip position " + std::to_string(p) +
                            " is out of range");

  AvalancheReport report;
  report.target = target;
  report.positions = params.positions;
  std::vector<double> all;
  std::uint64_t index = 0;
  for (std::size_t p : params.positions) {
    std::vector<double>& row = report.percent.emplace_back();
    for (std::size_t t = 0; t < params.trials_per_position; ++t) {
      Rng rng(DeriveSeed(params.seed, index++));
      const SebqKey key = SebqKey::Generate(k, rng);
      const BlockVector iv = RandomBlocks(n, key.order(), rng);
      const BlockVector message = RandomBlocks(l, key.order(), rng);
      row.push_back(AvalancheOnce(target, key, iv, message, p, rng));
      all.push_back(row.back());
    }
  }
  report.max = *std::max_element(all.begin(), all.end());
  report.min = *std::min_element(all.begin(), all.end());
  report.mean = std::accumulate(all.begin(), all.end(), 0.0) / all.size();
  return report;
}

}  // namespace sebq
