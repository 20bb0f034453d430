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

#include "sebq/ciphertext_stats.h"

#include <algorithm>
#include <sstream>

#include "sebq/errors.h"
#include "sebq/rng.h"

namespace sebq {

const char* MessageKindName(MessageKind kind) {
  switch (kind) {
    case MessageKind::kRandom: return "random";
    case MessageKind::kZeros: return "zeros";
    case MessageKind::kOnes: return "ones";
  }
  return "?";
}

std::optional<MessageKind> ParseMessageKind(const std::string& name) {
  for (MessageKind kind :
       {MessageKind::kRandom, MessageKind::kZeros, MessageKind::kOnes})
    if (name == MessageKindName(kind)) return kind;
  return std::nullopt;
}

std::size_t CiphertextStatsReport::MinPasses() const {
  std::size_t out = sequences;
  for (const SubTestTally& t : tests)
    if (t.ran) out = std::min(out, t.passes);
  return out;
}

std::string CiphertextStatsReport::ToCsv() const {
  std::ostringstream csv;
  csv << "test,success_percent,passes,trials,mean_p_value\n";
  csv.setf(std::ios::fixed);
  csv.precision(4);
  for (const SubTestTally& t : tests) {
    if (!t.ran) {
      csv << t.name << ",skipped,0,0,\n";
      continue;
    }
    csv << t.name << ',' << 100.0 * t.passes / t.ran << ',' << t.passes << ','
        << t.ran << ',' << t.p_sum / t.ran << '\n';
  }
  return csv.str();
}

std::vector<std::uint8_t> SymbolBits(std::span<const Symbol> blocks, int k) {
  std::vector<std::uint8_t> bits;
  bits.reserve(blocks.size() * k);
  for (Symbol s : blocks)
    for (int b = k - 1; b >= 0; --b) bits.push_back((s >> b) & 1);
  return bits;
}

CiphertextStatsReport RunCiphertextStats(const CiphertextStatsParams& p) {
  if (p.k < kMinSymbolBits || p.k > kMaxSymbolBits)
    throw InvalidArgument("k must be in 1..8");
  const std::size_t k = static_cast<std::size_t>(p.k);
  if (p.message_bits == 0 || p.message_bits % k)
    throw InvalidArgument("message bits must be a positive multiple of k");
  if (p.iv_bits == 0 || p.iv_bits % k)
    throw InvalidArgument("IV bits must be a positive multiple of k");
  if (p.sequences == 0) throw InvalidArgument("need at least one sequence");

  CiphertextStatsReport report;
  report.sequences = p.sequences;
  for (std::size_t t = 0; t < p.sequences; ++t) {
    Rng rng(DeriveSeed(p.seed, t));
    const SebqKey key = SebqKey::Generate(p.k, rng);
    auto random_blocks = [&](std::size_t count) {
      BlockVector out(count);
      for (Symbol& s : out)
        s = static_cast<Symbol>(UniformBelow(rng, key.order()));
      return out;
    };
    const BlockVector iv = random_blocks(p.iv_bits / k);
    BlockVector message;
    switch (p.message) {
      case MessageKind::kRandom:
        message = random_blocks(p.message_bits / k);
        break;
      case MessageKind::kZeros:
        message.assign(p.message_bits / k, 0);
        break;
      case MessageKind::kOnes:
        message.assign(p.message_bits / k,
                       static_cast<Symbol>(key.order() - 1));
        break;
    }
    const auto bits = SymbolBits(Encrypt(key, iv, message), p.k);
    const auto results = RandomnessSuite(bits, p.alpha);
    if (t == 0)
      for (const TestReport& r : results) report.tests.push_back({r.name});
    for (std::size_t i = 0; i < results.size(); ++i) {
      if (results[i].skipped) continue;
      SubTestTally& tally = report.tests[i];
      ++tally.ran;
      tally.p_sum += results[i].p_value;
      tally.passes += results[i].passed;
    }
  }
  return report;
}

}  // namespace sebq
