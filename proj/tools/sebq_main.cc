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

// sebq: key generation, file encryption, analysis reports and attack demos.
//
// Exit codes: 0 ok, 1 usage or parameter error, 2 I/O error or unreadable
// key file, 3 corrupt frame, 4 bad padding, 5 key and frame disagree on k.

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <openssl/evp.h>

#include "CLI11.hpp"
#include "sebq/avalanche.h"
#include "sebq/bits.h"
#include "sebq/cipher.h"
#include "sebq/ciphertext_stats.h"
#include "sebq/completion.h"
#include "sebq/cost.h"
#include "sebq/errors.h"
#include "sebq/feistel.h"
#include "sebq/frame.h"
#include "sebq/games.h"
#include "sebq/key_file.h"

namespace {

enum ExitCode {
  kOk = 0,
  kUsage = 1,
  kIo = 2,
  kCorruptFrame = 3,
  kBadPadding = 4,
  kKeyMismatch = 5,
};

// Carries an exit code out of a command.
struct Failure {
  ExitCode code;
  std::string message;
};

[[noreturn]] void Fail(ExitCode code, std::string message) {
  throw Failure{code, std::move(message)};
}

struct Config {
  int k = 4;
  std::size_t n = 16;
  std::size_t a = 0;
  std::optional<std::uint64_t> seed;
  std::string scheme = "plain";
  double alpha = 0.01;
  std::size_t trials = 0;
  std::string in, out, key;
  std::string iv;
  std::string transcript;
  // analyze
  std::size_t bits = 4000;
  std::size_t iv_bits = 400;
  std::string message_kind = "random";
  std::string target = "plaintext";
  std::string positions = "0,1,2,3,4,5,6,7,8,9";
  std::string json_out;
  std::uint64_t l = 16;
  unsigned target_bits = 128;
  std::uint64_t ops = sebq::kReferenceTrialOps;
  // attack
  unsigned message = 0;
};

std::vector<std::uint8_t> ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) Fail(kIo, "cannot open " + path);
  std::vector<std::uint8_t> data((std::istreambuf_iterator<char>(in)),
                                 std::istreambuf_iterator<char>());
  if (in.bad()) Fail(kIo, "error reading " + path);
  return data;
}

void WriteFile(const std::string& path, const void* data, std::size_t size) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) Fail(kIo, "cannot write " + path);
  out.write(static_cast<const char*>(data),
            static_cast<std::streamsize>(size));
  if (!out) Fail(kIo, "error writing " + path);
}

void WriteText(const std::string& path, const std::string& text) {
  WriteFile(path, text.data(), text.size());
}

sebq::Rng MakeRng(const Config& c) { return sebq::MakeRng(c.seed); }

void CheckK(int k, int max = sebq::kMaxSymbolBits) {
  if (k < sebq::kMinSymbolBits || k > max)
    Fail(kUsage, "--k must be in 1.." + std::to_string(max) + ", got " +
                     std::to_string(k));
}

sebq::Scheme ParseScheme(const std::string& name) {
  if (name == "plain") return sebq::Scheme::kPlain;
  if (name == "cca2") return sebq::Scheme::kCca2;
  Fail(kUsage, "--scheme must be plain or cca2");
}

sebq::SebqKey LoadKey(const std::string& path) {
  const std::vector<std::uint8_t> raw = ReadFile(path);
  try {
    return sebq::SebqKey::FromSquare(sebq::ParseKeyFile(
        std::string_view(reinterpret_cast<const char*>(raw.data()),
                         raw.size())));
  } catch (const sebq::InvalidArgument& e) {
    Fail(kIo, "bad key file " + path + ": " + e.what());
  }
}

std::string Sha256Hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int size = 0;
  if (!EVP_Digest(data.data(), data.size(), digest, &size, EVP_sha256(),
                  nullptr))
    Fail(kIo, "SHA-256 failed");
  std::ostringstream out;
  for (unsigned int i = 0; i < size; ++i)
    out << std::hex << std::setw(2) << std::setfill('0') << int{digest[i]};
  return out.str();
}

std::vector<std::uint64_t> ParseList(const std::string& text,
                                     const char* flag) {
  std::vector<std::uint64_t> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoull(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      Fail(kUsage, std::string(flag) + ": bad number '" + item + "'");
    }
  }
  return out;
}

sebq::BlockVector RandomBlocks(std::size_t count, std::size_t order,
                               sebq::Rng& rng) {
  sebq::BlockVector out(count);
  for (auto& s : out) s = static_cast<sebq::Symbol>(sebq::UniformBelow(rng, order));
  return out;
}

int CmdKeygen(const Config& c) {
  CheckK(c.k);
  sebq::Rng rng = MakeRng(c);
  const sebq::SebqKey key = sebq::SebqKey::Generate(c.k, rng);
  const std::string text = sebq::SerializeKeyFile(key.quasigroup().mul_table());
  WriteText(c.out, text);
  std::cout << "order " << key.order() << "\nfingerprint sha256:"
            << Sha256Hex(text) << '\n';
  return kOk;
}

int CmdEncrypt(const Config& c) {
  const sebq::SebqKey key = LoadKey(c.key);
  const sebq::Scheme scheme = ParseScheme(c.scheme);
  sebq::BlockVector iv;
  if (!c.iv.empty()) {
    for (std::uint64_t s : ParseList(c.iv, "--iv")) {
      if (s >= key.order()) Fail(kUsage, "--iv symbol out of range");
      iv.push_back(static_cast<sebq::Symbol>(s));
    }
  } else {
    if (c.n == 0 || c.n > 0xFFFF) Fail(kUsage, "--n must be in 1..65535");
    sebq::Rng rng = MakeRng(c);
    iv = RandomBlocks(c.n, key.order(), rng);
  }
  if (iv.empty()) Fail(kUsage, "--iv must list at least one symbol");

  const sebq::BitString plaintext = sebq::BitString::FromBytes(ReadFile(c.in));
  sebq::CipherFrame frame;
  if (scheme == sebq::Scheme::kPlain) {
    frame = sebq::SealPlain(key, iv, plaintext);
  } else {
    const std::size_t a = c.a ? c.a : sebq::DefaultExpansionLength(iv.size());
    if (a < 2 || a > 0xFFFF) Fail(kUsage, "--a must be in 2..65535");
    frame = sebq::SealCca2(sebq::Cca2Key::WithDefaultExpander(key, a), iv,
                           plaintext);
  }
  const std::vector<std::uint8_t> bytes = sebq::SerializeFrame(frame);
  WriteFile(c.out, bytes.data(), bytes.size());
  std::cout << "encrypted " << plaintext.bit_length << " bits, scheme "
            << c.scheme << ", k " << key.bits() << ", n " << iv.size()
            << '\n';
  return kOk;
}

int CmdDecrypt(const Config& c) {
  const sebq::SebqKey key = LoadKey(c.key);
  const std::vector<std::uint8_t> raw = ReadFile(c.in);
  sebq::CipherFrame frame;
  try {
    frame = sebq::ParseFrame(raw);
  } catch (const sebq::FrameError& e) {
    Fail(kCorruptFrame, e.what());
  }
  if (frame.k != key.bits())
    Fail(kKeyMismatch, "frame was written with k=" + std::to_string(frame.k) +
                           " but the key has k=" + std::to_string(key.bits()));
  sebq::BitString plain;
  try {
    if (frame.version == sebq::kFrameVersionPlain) {
      plain = sebq::OpenPlain(key, frame);
    } else {
      if (frame.expander_id != sebq::kDefaultExpanderId)
        Fail(kCorruptFrame, "frame needs an external expander");
      plain = sebq::OpenCca2(
          sebq::Cca2Key::WithDefaultExpander(key, frame.a), frame);
    }
  } catch (const sebq::PaddingError& e) {
    Fail(kBadPadding, e.what());
  }
  if (plain.bit_length % 8 != 0)
    Fail(kBadPadding, "plaintext is not a whole number of bytes");
  WriteFile(c.out, plain.bytes.data(), plain.bytes.size());
  std::cout << "decrypted " << plain.bit_length << " bits\n";
  return kOk;
}

int CmdStats(const Config& c) {
  CheckK(c.k);
  const auto kind = sebq::ParseMessageKind(c.message_kind);
  if (!kind) Fail(kUsage, "--message-kind must be random, zeros or ones");
  sebq::CiphertextStatsParams params;
  params.k = c.k;
  params.message_bits = c.bits;
  params.iv_bits = c.iv_bits;
  params.sequences = c.trials ? c.trials : 100;
  params.alpha = c.alpha;
  params.message = *kind;
  params.seed = c.seed.value_or(sebq::MakeRng(std::nullopt)());

  sebq::CiphertextStatsReport report;
  try {
    report = sebq::RunCiphertextStats(params);
  } catch (const sebq::InvalidArgument& e) {
    Fail(kUsage, e.what());
  }
  if (c.out.empty())
    std::cout << report.ToCsv();
  else
    WriteText(c.out, report.ToCsv());
  std::cout << "stats: " << report.tests.size() << " tests, "
            << report.sequences << " sequences of " << c.bits
            << " bits, min passes " << report.MinPasses() << '/'
            << report.sequences << " at alpha " << c.alpha << '\n';
  return kOk;
}

int CmdAvalanche(const Config& c) {
  CheckK(c.k);
  const auto target = sebq::ParseAvalancheTarget(c.target);
  if (!target) Fail(kUsage, "--target must be key, iv or plaintext");
  sebq::AvalancheParams params;
  params.k = c.k;
  params.message_bits = c.bits;
  params.iv_bits = c.iv_bits;
  params.positions.clear();
  for (std::uint64_t p : ParseList(c.positions, "--positions"))
    params.positions.push_back(static_cast<std::size_t>(p));
  if (params.positions.empty()) Fail(kUsage, "--positions is empty");
  const std::size_t trials = c.trials ? c.trials : 100;
  if (trials % params.positions.size() != 0)
    Fail(kUsage, "--trials must be a multiple of the number of positions");
  params.trials_per_position = trials / params.positions.size();
  params.seed = c.seed.value_or(sebq::MakeRng(std::nullopt)());

  sebq::AvalancheReport report;
  try {
    report = sebq::RunAvalanche(*target, params);
  } catch (const sebq::InvalidArgument& e) {
    Fail(kUsage, e.what());
  }
  if (c.out.empty())
    std::cout << report.ToCsv();
  else
    WriteText(c.out, report.ToCsv());
  if (!c.json_out.empty()) WriteText(c.json_out, report.ToJson() + "\n");
  std::cout << std::fixed << std::setprecision(3) << "avalanche " << c.target
            << ": " << trials << " flips, mean " << report.mean << ", min "
            << report.min << ", max " << report.max << '\n';
  return kOk;
}

int CmdOpcount(const Config& c) {
  if (c.n == 0 || c.l == 0) Fail(kUsage, "--n and --l must be positive");
  std::cout << sebq::OperationCountReport(c.n, c.k, c.l);
  return kOk;
}

int CmdSecureOrder(const Config& c) {
  if (c.target_bits == 0 || c.ops == 0)
    Fail(kUsage, "--target-bits and --ops must be positive");
  std::cout << sebq::SecureOrderReport(c.target_bits, c.ops);
  return kOk;
}

void PrintColumn(const std::vector<sebq::Symbol>& column) {
  for (std::size_t i = 0; i < column.size(); ++i)
    std::cout << (i ? " " : "") << column[i];
  std::cout << '\n';
}

int CmdCpaColumn(const Config& c) {
  CheckK(c.k, 4);
  sebq::Rng rng = MakeRng(c);
  const sebq::SchemeConfig config{sebq::Scheme::kPlain, c.k, 1, 0};
  const auto instance = sebq::SchemeInstance::Generate(config, rng);
  if (c.message >= instance.order()) Fail(kUsage, "--message out of range");
  sebq::OracleRules rules;
  rules.chosen_iv = true;
  sebq::OracleSession session(instance, rules, 0, rng());
  const auto column =
      sebq::CpaColumnRecovery(session, static_cast<sebq::Symbol>(c.message));
  bool match = true;
  for (std::size_t r = 0; r < column.size(); ++r)
    match &= column[r] == instance.ground_truth().at(r, c.message);
  std::cout << "column " << c.message << ": ";
  PrintColumn(column);
  std::cout << "queries " << session.log().q_e << ", "
            << (match ? "matches" : "DOES NOT match") << " the hidden key\n";
  return kOk;
}

int CmdCcaRecover(const Config& c) {
  CheckK(c.k, 4);
  const sebq::Scheme scheme = ParseScheme(c.scheme);
  const std::uint64_t seed = c.seed.value_or(sebq::MakeRng(std::nullopt)());
  const sebq::SchemeConfig config{scheme, c.k, 1, c.a};

  sebq::Rng rng(sebq::DeriveSeed(seed, 0));
  const auto instance = sebq::SchemeInstance::Generate(config, rng);
  sebq::OracleRules rules;
  rules.decryption = true;
  sebq::OracleSession session(instance, rules, sebq::RandomBit(rng), rng());
  const sebq::Ciphertext challenge = session.Challenge({0}, {1});
  const sebq::TableRecovery rec = sebq::CcaTableRecovery(session, challenge);
  const std::size_t cells = instance.order() * instance.order();
  const std::size_t recovered =
      rec.completed ? sebq::PartialLatinSquare::FromSquare(*rec.completed)
                          .CountMatching(instance.ground_truth())
                    : rec.observed.CountMatching(instance.ground_truth());

  sebq::TableRecoveryAdversary adversary;
  sebq::ExperimentOptions options;
  options.trials = c.trials ? c.trials : 200;
  options.seed = sebq::DeriveSeed(seed, 1);
  std::ofstream transcript;
  if (!c.transcript.empty()) {
    transcript.open(c.transcript);
    if (!transcript) Fail(kIo, "cannot write " + c.transcript);
    options.transcript = &transcript;
  }
  const sebq::ExperimentResult result =
      sebq::RunIndCca(adversary, config, rules, options);
  if (result.aborted) Fail(kUsage, "experiment aborted: " + result.violation);

  std::cout << std::fixed << std::setprecision(3) << "scheme " << c.scheme
            << ", order " << instance.order() << ", " << rec.queries
            << " decryption queries, grid "
            << (rec.consistent ? "consistent" : "inconsistent") << '\n'
            << "recovered " << recovered << '/' << cells << " cells, advantage "
            << result.advantage() << " over " << result.trials << " trials\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"SEBQ quasigroup cipher toolkit"};
  app.require_subcommand(1);
  Config c;

  auto add_seed = [&](CLI::App* cmd) {
    cmd->add_option("--seed", c.seed, "RNG seed (system entropy if absent)");
  };

  auto* keygen = app.add_subcommand("keygen", "Generate a random key square");
  keygen->add_option("--k", c.k, "Bits per symbol (1..8)");
  keygen->add_option("--out", c.out, "Key file to write")->required();
  add_seed(keygen);

  auto* encrypt = app.add_subcommand("encrypt", "Encrypt a file into a frame");
  auto* decrypt = app.add_subcommand("decrypt", "Decrypt a frame");
  for (CLI::App* cmd : {encrypt, decrypt}) {
    cmd->add_option("--key", c.key, "Key file")->required();
    cmd->add_option("--in", c.in, "Input file")->required();
    cmd->add_option("--out", c.out, "Output file")->required();
  }
  encrypt->add_option("--n", c.n, "IV length in blocks");
  encrypt->add_option("--a", c.a, "cca2 expansion length (default 2n)");
  encrypt->add_option("--scheme", c.scheme, "plain or cca2");
  encrypt->add_option("--iv", c.iv, "Comma-separated IV symbols (test vectors)");
  add_seed(encrypt);

  auto* analyze = app.add_subcommand("analyze", "Statistical reports");
  analyze->require_subcommand(1);
  auto* stats = analyze->add_subcommand("stats", "Randomness battery");
  stats->add_option("--k", c.k, "Bits per symbol");
  stats->add_option("--bits", c.bits, "Plaintext bits per sequence");
  stats->add_option("--iv-bits", c.iv_bits, "IV bits");
  stats->add_option("--trials", c.trials, "Sequences (default 100)");
  stats->add_option("--alpha", c.alpha, "Significance level");
  stats->add_option("--message-kind", c.message_kind, "random, zeros or ones");
  stats->add_option("--out", c.out, "CSV file (stdout if absent)");
  add_seed(stats);

  auto* avalanche = analyze->add_subcommand("avalanche", "Avalanche effect");
  avalanche->add_option("--target", c.target, "key, iv or plaintext");
  avalanche->add_option("--k", c.k, "Bits per symbol");
  avalanche->add_option("--bits", c.bits, "Plaintext bits");
  avalanche->add_option("--iv-bits", c.iv_bits, "IV bits");
  avalanche->add_option("--positions", c.positions, "Bit positions to flip");
  avalanche->add_option("--trials", c.trials, "Total flips (default 100)");
  avalanche->add_option("--out", c.out, "CSV file (stdout if absent)");
  avalanche->add_option("--json", c.json_out, "JSON summary file");
  add_seed(avalanche);

  auto* opcount = analyze->add_subcommand("opcount", "Operation count");
  opcount->add_option("--n", c.n, "Leader blocks")->required();
  opcount->add_option("--k", c.k, "Bits per symbol")->required();
  opcount->add_option("--l", c.l, "Message blocks")->required();

  auto* secure = analyze->add_subcommand("secure-order", "Minimum key order");
  secure->add_option("--target-bits", c.target_bits, "Security level in bits");
  secure->add_option("--ops", c.ops, "Operations per trial decryption");

  auto* attack = app.add_subcommand("attack", "Attack demonstrations");
  attack->require_subcommand(1);
  auto* cpa = attack->add_subcommand("cpa-column", "Chosen-IV column recovery");
  cpa->add_option("--k", c.k, "Bits per symbol (1..4)");
  cpa->add_option("--message", c.message, "Message symbol");
  add_seed(cpa);
  auto* cca = attack->add_subcommand("cca-recover", "CCA table recovery");
  cca->add_option("--k", c.k, "Bits per symbol (1..4)");
  cca->add_option("--scheme", c.scheme, "plain or cca2");
  cca->add_option("--a", c.a, "cca2 expansion length (default 2)");
  cca->add_option("--trials", c.trials, "Experiment trials (default 200)");
  cca->add_option("--transcript", c.transcript, "JSON-lines transcript file");
  add_seed(cca);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*keygen) return CmdKeygen(c);
    if (*encrypt) return CmdEncrypt(c);
    if (*decrypt) return CmdDecrypt(c);
    if (*stats) return CmdStats(c);
    if (*avalanche) return CmdAvalanche(c);
    if (*opcount) return CmdOpcount(c);
    if (*secure) return CmdSecureOrder(c);
    if (*cpa) return CmdCpaColumn(c);
    if (*cca) return CmdCcaRecover(c);
  } catch (const Failure& f) {
    std::cerr << "sebq: " << f.message << '\n';
    return f.code;
  } catch (const sebq::InvalidArgument& e) {
    std::cerr << "sebq: " << e.what() << '\n';
    return kUsage;
  } catch (const sebq::Error& e) {
    std::cerr << "sebq: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
