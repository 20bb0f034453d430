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

#ifndef SEBQ_GAMES_H_
#define SEBQ_GAMES_H_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sebq/cipher.h"
#include "sebq/completion.h"
#include "sebq/feistel.h"

namespace sebq {

enum class Scheme { kPlain, kCca2 };

const char* SchemeName(Scheme scheme);

struct SchemeConfig {
  Scheme scheme = Scheme::kPlain;
  int k = 2;
  // Leader (plain) or seed (cca2) length in blocks.
  std::size_t n = 1;
  // Expansion length for cca2; 0 selects DefaultExpansionLength(n).
  std::size_t a = 0;
};

// A freshly keyed scheme. The key stays inside; the mul table is exposed
// only so experiments can score an adversary against the truth.
class SchemeInstance {
 public:
  static SchemeInstance Generate(const SchemeConfig& config, Rng& rng);
  static SchemeInstance FromKey(const SchemeConfig& config, SebqKey key);

  const SchemeConfig& config() const { return config_; }
  std::size_t order() const { return key_.order(); }

  BlockVector Encrypt(const BlockVector& iv, const BlockVector& m) const;
  BlockVector Decrypt(const BlockVector& iv, const BlockVector& c) const;

  const LatinSquare& ground_truth() const {
    return key_.quasigroup().mul_table();
  }

 private:
  SchemeInstance(SchemeConfig config, SebqKey key);

  SchemeConfig config_;
  SebqKey key_;
  std::optional<Cca2Key> cca2_;
};

struct Ciphertext {
  BlockVector iv;
  BlockVector body;

  friend bool operator==(const Ciphertext&, const Ciphertext&) = default;
};

// What the adversary may do in a session.
struct OracleRules {
  // Encryption queries may name their IV. Otherwise the oracle draws it.
  bool chosen_iv = false;
  // No message may be queried twice, and no queried message may contain a
  // block of either challenge message (before or after the challenge).
  bool restricted = false;
  bool decryption = false;
  std::optional<std::size_t> max_encryptions;
  std::optional<std::size_t> max_decryptions;
};

struct QueryRecord {
  enum class Kind { kEncrypt, kDecrypt, kLeftRight };

  Kind kind;
  BlockVector iv;
  BlockVector input;   // message, ciphertext body, or x0 for left-right
  BlockVector input1;  // x1 for left-right, empty otherwise
  BlockVector output;
};

struct QueryLog {
  std::size_t q_e = 0;   // encryption and left-right queries
  std::size_t q_d = 0;
  std::uint64_t mu_e = 0;  // plaintext bits submitted for encryption
  std::uint64_t mu_d = 0;  // ciphertext bits submitted for decryption
  std::size_t rejected = 0;
  std::vector<QueryRecord> records;
};

// Oracles of one experiment run, bound to a hidden key and a hidden bit b.
// Rule violations throw QueryViolation (BudgetExceeded for budgets).
class OracleSession {
 public:
  OracleSession(const SchemeInstance& instance, OracleRules rules, int b,
                std::uint64_t iv_seed);

  std::size_t order() const { return instance_.order(); }
  int k() const { return instance_.config().k; }
  std::size_t n() const { return instance_.config().n; }
  Scheme scheme() const { return instance_.config().scheme; }
  const OracleRules& rules() const { return rules_; }

  Ciphertext Encrypt(const BlockVector& m,
                     const std::optional<BlockVector>& iv = std::nullopt);
  // Refuses any challenge ciphertext.
  BlockVector Decrypt(const Ciphertext& c);
  // Encrypts x_b under a fresh IV; |x0| must equal |x1|.
  Ciphertext LeftRight(const BlockVector& x0, const BlockVector& x1);
  // LeftRight that also records the pair as the challenge. Once per session.
  Ciphertext Challenge(const BlockVector& x0, const BlockVector& x1);

  const QueryLog& log() const { return log_; }

 private:
  void CheckMessage(const BlockVector& m) const;
  bool SharesChallengeSymbol(const BlockVector& m) const;
  BlockVector FreshIv();

  const SchemeInstance& instance_;
  OracleRules rules_;
  int b_;
  Rng iv_rng_;
  QueryLog log_;
  std::vector<Ciphertext> challenges_;
  std::vector<BlockVector> queried_messages_;
  std::vector<bool> challenge_symbol_;  // indexed by symbol
  bool challenged_ = false;
};

// lr_oracle of the left-or-right experiments.
inline Ciphertext LrOracle(OracleSession& session, const BlockVector& x0,
                           const BlockVector& x1) {
  return session.LeftRight(x0, x1);
}

struct ChallengePair {
  BlockVector x0, x1;
};

class Adversary {
 public:
  virtual ~Adversary() = default;
  virtual std::string name() const = 0;
  // Find phase: may query the oracles, then names the two messages.
  virtual ChallengePair Choose(OracleSession& session, Rng& rng) = 0;
  // Guess phase: returns the guess b' in {0, 1}.
  virtual int Guess(OracleSession& session, const Ciphertext& challenge,
                    Rng& rng) = 0;
};

// Ignores the oracles and flips a coin.
class RandomGuessAdversary final : public Adversary {
 public:
  std::string name() const override { return "random-guess"; }
  ChallengePair Choose(OracleSession& session, Rng& rng) override;
  int Guess(OracleSession& session, const Ciphertext& challenge,
            Rng& rng) override;
};

// Restricted-game strategy for single-block leaders: challenges on symbols
// 0 and 1, then learns every table cell it can with distinct messages over
// the other symbols (each query at most once), and guesses b = 0 only when
// the challenge cell is consistent with column 0 but not column 1.
class ExhaustiveRestrictedAdversary final : public Adversary {
 public:
  // Messages of length 1..max_length over the non-challenge symbols.
  explicit ExhaustiveRestrictedAdversary(std::size_t max_length = 3)
      : max_length_(max_length) {}

  std::string name() const override { return "exhaustive-restricted"; }
  ChallengePair Choose(OracleSession& session, Rng& rng) override;
  int Guess(OracleSession& session, const Ciphertext& challenge,
            Rng& rng) override;

 private:
  std::size_t max_length_;
  std::optional<PartialLatinSquare> known_;
};

// Chosen-IV strategy: recovers the column of x0 by encrypting it under
// every IV, then reads b off the challenge.
class RepeatedMessageAdversary final : public Adversary {
 public:
  std::string name() const override { return "repeated-message"; }
  ChallengePair Choose(OracleSession& session, Rng& rng) override;
  int Guess(OracleSession& session, const Ciphertext& challenge,
            Rng& rng) override;
};

struct TableRecovery {
  PartialLatinSquare observed;
  std::optional<LatinSquare> completed;  // only when observed is consistent
  bool consistent = true;
  std::size_t queries = 0;
};

// Decrypts (iv = r, c) for every row r and every c != the challenge body,
// reading each answer m as the cell mul[r][m] = c, then completes the grid.
// Requires single-block leaders and challenge. Answers that contradict the
// grid mark the result inconsistent and are dropped.
TableRecovery CcaTableRecovery(OracleSession& session,
                               const Ciphertext& challenge);

// Chooses symbols 0 and 1, recovers the table, and guesses from the row of
// the challenge IV. Falls back to a coin flip when recovery fails.
class TableRecoveryAdversary final : public Adversary {
 public:
  std::string name() const override { return "table-recovery"; }
  ChallengePair Choose(OracleSession& session, Rng& rng) override;
  int Guess(OracleSession& session, const Ciphertext& challenge,
            Rng& rng) override;

  const std::optional<TableRecovery>& last_recovery() const { return last_; }

 private:
  std::optional<TableRecovery> last_;
};

// Encrypts `message` (one block) under every IV in turn, returning
// column[r] = mul[r][message]. Throws UnsupportedConfiguration unless the
// session allows chosen IVs without the restriction and n = 1.
std::vector<Symbol> CpaColumnRecovery(OracleSession& session, Symbol message);

struct ExperimentOptions {
  std::size_t trials = 1000;
  std::uint64_t seed = 1;
  // When set, one JSON object per trial is written here.
  std::ostream* transcript = nullptr;
  // Include every oracle query in the transcript lines.
  bool log_queries = false;
};

struct ExperimentResult {
  std::size_t trials = 0;
  std::size_t b1 = 0, b1_guess1 = 0;
  std::size_t b0 = 0, b0_guess1 = 0;
  std::size_t correct = 0;
  std::size_t encryption_queries = 0;
  std::size_t decryption_queries = 0;
  bool aborted = false;
  std::string violation;

  // Pr[b' = 1 | b = 1] - Pr[b' = 1 | b = 0].
  double advantage() const;
};

// One adversary per call is reused across trials; each trial draws a fresh
// key and b from an independent stream. A rule violation stops the run and
// is reported in the result.
ExperimentResult RunIndCpa(Adversary& adversary, const SchemeConfig& scheme,
                           const OracleRules& rules,
                           const ExperimentOptions& options);
// As RunIndCpa with the decryption oracle switched on.
ExperimentResult RunIndCca(Adversary& adversary, const SchemeConfig& scheme,
                           const OracleRules& rules,
                           const ExperimentOptions& options);

}  // namespace sebq

#endif  // SEBQ_GAMES_H_
