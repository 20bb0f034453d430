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

#include "sebq/games.h"

#include <algorithm>
#include <ostream>

#include "json.hpp"
#include "sebq/errors.h"

namespace sebq {
namespace {

using nlohmann::json;

const char* KindName(QueryRecord::Kind kind) {
  switch (kind) {
    case QueryRecord::Kind::kEncrypt: return "enc";
    case QueryRecord::Kind::kDecrypt: return "dec";
    case QueryRecord::Kind::kLeftRight: return "lr";
  }
  return "?";
}

void RequireSingleBlockLeader(const OracleSession& session, const char* who) {
  if (session.n() != 1)
    throw UnsupportedConfiguration(std::string(who) +
                                   " needs a single-block leader (n = 1)");
}

// Enumerates every string of `length` symbols drawn from `alphabet`.
template <typename Visit>
void ForEachString(const std::vector<Symbol>& alphabet, std::size_t length,
                   Visit visit) {
  if (alphabet.empty()) return;
  std::vector<std::size_t> digits(length, 0);
  BlockVector s(length);
  while (true) {
    for (std::size_t i = 0; i < length; ++i) s[i] = alphabet[digits[i]];
    visit(s);
    std::size_t i = 0;
    while (i < length && ++digits[i] == alphabet.size()) digits[i++] = 0;
    if (i == length) return;
  }
}

bool Feasible(PartialLatinSquare grid, std::size_t r, std::size_t c,
              Symbol s) {
  if (!grid.TrySet(r, c, s)) return false;
  return CompleteLatinSquare(grid).status !=
         CompletionResult::Status::kUnsat;
}

ExperimentResult RunExperiment(Adversary& adversary,
                               const SchemeConfig& scheme, OracleRules rules,
                               const ExperimentOptions& options) {
  ExperimentResult result;
  for (std::size_t t = 0; t < options.trials; ++t) {
    Rng trial_rng(DeriveSeed(options.seed, 2 * t));
    Rng adversary_rng(DeriveSeed(options.seed, 2 * t + 1));
    const SchemeInstance instance = SchemeInstance::Generate(scheme, trial_rng);
    const int b = RandomBit(trial_rng);
    OracleSession session(instance, rules, b, trial_rng());

    int guess = 0;
    try {
      const ChallengePair pair = adversary.Choose(session, adversary_rng);
      const Ciphertext challenge = session.Challenge(pair.x0, pair.x1);
      guess = adversary.Guess(session, challenge, adversary_rng);
      if (guess != 0 && guess != 1)
        throw QueryViolation("guess must be 0 or 1");
    } catch (const QueryViolation& e) {
      result.aborted = true;
      result.violation = "trial " + std::to_string(t) + ": " + e.what();
      break;
    } catch (const InvalidArgument& e) {
      result.aborted = true;
      result.violation = "trial " + std::to_string(t) + ": " + e.what();
      break;
    }

    ++result.trials;
    (b == 1 ? result.b1 : result.b0)++;
    if (guess == 1) (b == 1 ? result.b1_guess1 : result.b0_guess1)++;
    if (guess == b) ++result.correct;
    result.encryption_queries += session.log().q_e;
    result.decryption_queries += session.log().q_d;

    if (options.transcript) {
      const QueryLog& log = session.log();
      json line = {
          {"trial", t},
          {"adversary", adversary.name()},
          {"scheme", SchemeName(scheme.scheme)},
          {"b", b},
          {"b_guess", guess},
          {"q_e", log.q_e},
          {"q_d", log.q_d},
          {"mu_e", log.mu_e},
          {"mu_d", log.mu_d},
          {"rejected", log.rejected},
          {"accumulators",
           {{"b1", result.b1},
            {"b1_guess1", result.b1_guess1},
            {"b0", result.b0},
            {"b0_guess1", result.b0_guess1},
            {"advantage", result.advantage()}}},
      };
      if (options.log_queries) {
        json queries = json::array();
        for (const QueryRecord& q : log.records) {
          json entry = {{"op", KindName(q.kind)},
                        {"iv", q.iv},
                        {"in", q.input},
                        {"out", q.output}};
          if (q.kind == QueryRecord::Kind::kLeftRight) entry["in1"] = q.input1;
          queries.push_back(std::move(entry));
        }
        line["queries"] = std::move(queries);
      }
      *options.transcript << line.dump() << '\n';
    }
  }
  return result;
}

}  // namespace

const char* SchemeName(Scheme scheme) {
  return scheme == Scheme::kPlain ? "plain" : "cca2";
}

SchemeInstance::SchemeInstance(SchemeConfig config, SebqKey key)
    : config_(config), key_(std::move(key)) {
  if (config_.n == 0) throw InvalidArgument("leader length must be positive");
  if (config_.k != key_.bits())
    throw InvalidArgument("key width does not match the configuration");
  if (config_.scheme == Scheme::kCca2) {
    const std::size_t a =
        config_.a ? config_.a : DefaultExpansionLength(config_.n);
    cca2_ = Cca2Key::WithDefaultExpander(key_, a);
  }
}

SchemeInstance SchemeInstance::Generate(const SchemeConfig& config, Rng& rng) {
  return SchemeInstance(config, SebqKey::Generate(config.k, rng));
}

SchemeInstance SchemeInstance::FromKey(const SchemeConfig& config,
                                       SebqKey key) {
  return SchemeInstance(config, std::move(key));
}

BlockVector SchemeInstance::Encrypt(const BlockVector& iv,
                                    const BlockVector& m) const {
  if (iv.size() != config_.n) throw InvalidArgument("IV has the wrong length");
  return cca2_ ? EncryptCca2(*cca2_, iv, m) : sebq::Encrypt(key_, iv, m);
}

BlockVector SchemeInstance::Decrypt(const BlockVector& iv,
                                    const BlockVector& c) const {
  if (iv.size() != config_.n) throw InvalidArgument("IV has the wrong length");
  return cca2_ ? DecryptCca2(*cca2_, iv, c) : sebq::Decrypt(key_, iv, c);
}

OracleSession::OracleSession(const SchemeInstance& instance, OracleRules rules,
                             int b, std::uint64_t iv_seed)
    : instance_(instance),
      rules_(rules),
      b_(b),
      iv_rng_(iv_seed),
      challenge_symbol_(instance.order(), false) {
  if (b != 0 && b != 1) throw InvalidArgument("challenge bit must be 0 or 1");
}

BlockVector OracleSession::FreshIv() {
  BlockVector iv(n());
  for (Symbol& s : iv) s = static_cast<Symbol>(UniformBelow(iv_rng_, order()));
  return iv;
}

void OracleSession::CheckMessage(const BlockVector& m) const {
  if (!rules_.restricted) return;
  if (std::find(queried_messages_.begin(), queried_messages_.end(), m) !=
      queried_messages_.end())
    throw QueryViolation("restricted game: message queried twice");
  if (SharesChallengeSymbol(m))
    throw QueryViolation(
        "restricted game: query shares a block with a challenge message");
}

bool OracleSession::SharesChallengeSymbol(const BlockVector& m) const {
  return std::any_of(m.begin(), m.end(), [&](Symbol s) {
    return s < challenge_symbol_.size() && challenge_symbol_[s];
  });
}

Ciphertext OracleSession::Encrypt(const BlockVector& m,
                                  const std::optional<BlockVector>& iv) {
  if (iv && !rules_.chosen_iv)
    throw QueryViolation("this oracle does not accept chosen IVs");
  if (rules_.max_encryptions && log_.q_e >= *rules_.max_encryptions)
    throw BudgetExceeded("encryption query budget exhausted");
  CheckMessage(m);

  Ciphertext out{iv ? *iv : FreshIv(), {}};
  out.body = instance_.Encrypt(out.iv, m);
  ++log_.q_e;
  log_.mu_e += m.size() * static_cast<std::uint64_t>(k());
  if (rules_.restricted) queried_messages_.push_back(m);
  log_.records.push_back(
      {QueryRecord::Kind::kEncrypt, out.iv, m, {}, out.body});
  return out;
}

BlockVector OracleSession::Decrypt(const Ciphertext& c) {
  if (!rules_.decryption)
    throw QueryViolation("this experiment has no decryption oracle");
  if (std::find(challenges_.begin(), challenges_.end(), c) !=
      challenges_.end()) {
    ++log_.rejected;
    throw QueryViolation("decryption of the challenge ciphertext refused");
  }
  if (rules_.max_decryptions && log_.q_d >= *rules_.max_decryptions)
    throw BudgetExceeded("decryption query budget exhausted");

  BlockVector m = instance_.Decrypt(c.iv, c.body);
  ++log_.q_d;
  log_.mu_d += c.body.size() * static_cast<std::uint64_t>(k());
  log_.records.push_back({QueryRecord::Kind::kDecrypt, c.iv, c.body, {}, m});
  return m;
}

Ciphertext OracleSession::LeftRight(const BlockVector& x0,
                                    const BlockVector& x1) {
  if (x0.size() != x1.size())
    throw QueryViolation("left-right messages differ in length");
  if (rules_.max_encryptions && log_.q_e >= *rules_.max_encryptions)
    throw BudgetExceeded("encryption query budget exhausted");

  Ciphertext out{FreshIv(), {}};
  out.body = instance_.Encrypt(out.iv, b_ == 0 ? x0 : x1);
  ++log_.q_e;
  log_.mu_e += x0.size() * static_cast<std::uint64_t>(k());
  log_.records.push_back(
      {QueryRecord::Kind::kLeftRight, out.iv, x0, x1, out.body});
  return out;
}

Ciphertext OracleSession::Challenge(const BlockVector& x0,
                                    const BlockVector& x1) {
  if (challenged_) throw QueryViolation("challenge already issued");
  if (rules_.restricted) {
    for (const BlockVector* x : {&x0, &x1})
      for (Symbol s : *x)
        if (s < challenge_symbol_.size()) challenge_symbol_[s] = true;
    for (const BlockVector& m : queried_messages_)
      if (SharesChallengeSymbol(m))
        throw QueryViolation(
            "restricted game: challenge reuses a block of an earlier query");
  }
  Ciphertext out = LeftRight(x0, x1);
  challenged_ = true;
  challenges_.push_back(out);
  return out;
}

ChallengePair RandomGuessAdversary::Choose(OracleSession&, Rng&) {
  return {{0}, {1}};
}

int RandomGuessAdversary::Guess(OracleSession&, const Ciphertext&, Rng& rng) {
  return RandomBit(rng);
}

ChallengePair ExhaustiveRestrictedAdversary::Choose(OracleSession& session,
                                                    Rng&) {
  RequireSingleBlockLeader(session, "exhaustive-restricted");
  known_.emplace(session.order());
  std::vector<Symbol> alphabet;
  for (std::size_t s = 2; s < session.order(); ++s)
    alphabet.push_back(static_cast<Symbol>(s));

  for (std::size_t length = 1; length <= max_length_; ++length) {
    ForEachString(alphabet, length, [&](const BlockVector& m) {
      const Ciphertext c = session.Encrypt(m);
      // With n = 1 the leader after each block is that block's ciphertext.
      Symbol row = c.iv[0];
      for (std::size_t j = 0; j < m.size(); ++j) {
        known_->TrySet(row, m[j], c.body[j]);
        row = c.body[j];
      }
    });
  }
  return {{0}, {1}};
}

int ExhaustiveRestrictedAdversary::Guess(OracleSession&,
                                         const Ciphertext& challenge,
                                         Rng& rng) {
  const Symbol r = challenge.iv[0], c = challenge.body[0];
  const bool zero = Feasible(*known_, r, 0, c);
  const bool one = Feasible(*known_, r, 1, c);
  if (zero != one) return zero ? 0 : 1;
  return RandomBit(rng);
}

ChallengePair RepeatedMessageAdversary::Choose(OracleSession&, Rng&) {
  return {{0}, {1}};
}

int RepeatedMessageAdversary::Guess(OracleSession& session,
                                    const Ciphertext& challenge, Rng&) {
  const std::vector<Symbol> column = CpaColumnRecovery(session, 0);
  return column[challenge.iv[0]] == challenge.body[0] ? 0 : 1;
}

std::vector<Symbol> CpaColumnRecovery(OracleSession& session, Symbol message) {
  if (!session.rules().chosen_iv || session.rules().restricted)
    throw UnsupportedConfiguration(
        "column recovery needs chosen IVs and repeated messages");
  RequireSingleBlockLeader(session, "column recovery");
  std::vector<Symbol> column(session.order());
  for (std::size_t r = 0; r < session.order(); ++r) {
    const Ciphertext c =
        session.Encrypt({message}, BlockVector{static_cast<Symbol>(r)});
    column[r] = c.body[0];
  }
  return column;
}

TableRecovery CcaTableRecovery(OracleSession& session,
                               const Ciphertext& challenge) {
  RequireSingleBlockLeader(session, "table recovery");
  if (challenge.body.size() != 1)
    throw UnsupportedConfiguration("table recovery needs a one-block challenge");
  const std::size_t order = session.order();
  const Symbol excluded = challenge.body[0];

  TableRecovery out{PartialLatinSquare(order), std::nullopt, true, 0};
  for (std::size_t r = 0; r < order; ++r) {
    for (std::size_t c = 0; c < order; ++c) {
      if (c == excluded) continue;
      const BlockVector m = session.Decrypt(
          {{static_cast<Symbol>(r)}, {static_cast<Symbol>(c)}});
      ++out.queries;
      if (!out.observed.TrySet(r, m[0], static_cast<Symbol>(c)))
        out.consistent = false;
    }
  }
  if (out.consistent) {
    CompletionResult done = CompleteLatinSquare(out.observed);
    if (done.status == CompletionResult::Status::kUnique)
      out.completed = std::move(done.square);
  }
  return out;
}

ChallengePair TableRecoveryAdversary::Choose(OracleSession&, Rng&) {
  return {{0}, {1}};
}

int TableRecoveryAdversary::Guess(OracleSession& session,
                                  const Ciphertext& challenge, Rng& rng) {
  last_ = CcaTableRecovery(session, challenge);
  if (last_->completed) {
    const Symbol r = challenge.iv[0], c = challenge.body[0];
    const bool zero = last_->completed->at(r, 0) == c;
    const bool one = last_->completed->at(r, 1) == c;
    if (zero != one) return zero ? 0 : 1;
  }
  return RandomBit(rng);
}

double ExperimentResult::advantage() const {
  const double p1 = b1 ? static_cast<double>(b1_guess1) / b1 : 0.0;
  const double p0 = b0 ? static_cast<double>(b0_guess1) / b0 : 0.0;
  return p1 - p0;
}

ExperimentResult RunIndCpa(Adversary& adversary, const SchemeConfig& scheme,
                           const OracleRules& rules,
                           const ExperimentOptions& options) {
  OracleRules cpa = rules;
  cpa.decryption = false;
  return RunExperiment(adversary, scheme, cpa, options);
}

ExperimentResult RunIndCca(Adversary& adversary, const SchemeConfig& scheme,
                           const OracleRules& rules,
                           const ExperimentOptions& options) {
  OracleRules cca = rules;
  cca.decryption = true;
  return RunExperiment(adversary, scheme, cca, options);
}

}  // namespace sebq
