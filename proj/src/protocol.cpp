// Copyright 2026 The QSS Simulator Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qss/protocol.hpp"

#include <cmath>
#include <numeric>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace qss {

namespace {

std::size_t sample_count(double f, std::size_t alive) {
  // The small offset keeps products like 0.1 * 30 from rounding up to 4.
  const double raw = std::ceil(f * static_cast<double>(alive) - 1e-9);
  if (raw <= 0.0) return 0;
  return std::min(alive, static_cast<std::size_t>(raw));
}

std::uint8_t xor_a_bits(const std::vector<std::vector<PartyOp>>& ops, std::size_t pos) {
  std::uint8_t acc = 0;
  for (const auto& party : ops) acc ^= party[pos].a_bit;
  return acc;
}

}  // namespace

void RunConfig::validate() const {
  if (m < 2) throw ConfigError("m: group 1 needs at least 2 members, got " + std::to_string(m));
  if (n < 1) throw ConfigError("n: group 2 needs at least 1 member, got " + std::to_string(n));
  if (N < 1) throw ConfigError("N: need at least 1 qubit per receiver");
  if (!(f >= 0.0 && f < 1.0)) throw ConfigError("f: must lie in [0, 1)");
  if (!(g > 0.0 && g < 1.0)) throw ConfigError("g: must lie in (0, 1)");
  if (!(epsilon_t >= 0.0 && epsilon_t < 0.5)) throw ConfigError("epsilon_t: must lie in [0, 0.5)");
}

PhotonState prepared_state(const PartyOp& op) noexcept {
  return PhotonState{basis_from_bit(op.b_bit), op.a_bit, +1};
}

std::vector<PartyOp> random_party_ops(std::size_t count, RandomStream& rng) {
  std::vector<PartyOp> ops(count);
  for (auto& op : ops) {
    op.a_bit = rng.bit();
    op.b_bit = rng.bit();
  }
  return ops;
}

PreparedBatch alice1_prepare(const RunConfig& cfg, RandomStream& rng) {
  PreparedBatch batch;
  batch.ops = random_party_ops(cfg.total_positions(), rng);
  batch.signals.reserve(batch.ops.size());
  for (std::size_t k = 0; k < batch.ops.size(); ++k)
    batch.signals.push_back(Signal{k, 1, prepared_state(batch.ops[k])});
  return batch;
}

void alice_i_transform(std::span<const PartyOp> ops, std::span<Signal> signals) {
  if (ops.size() != signals.size())
    throw ConfigError("alice_i_transform: " + std::to_string(ops.size()) + " ops for " +
                      std::to_string(signals.size()) + " signals");
  for (std::size_t k = 0; k < signals.size(); ++k) {
    if (signals[k].photon_count == 0) continue;
    signals[k].state = apply_unitary(ops[k].unitary(), signals[k].state);
  }
}

PhotonState transport(const PhotonState& prepared, std::span<const PartyOp> ops) noexcept {
  PhotonState s = prepared;
  for (const auto& op : ops) s = apply_unitary(op.unitary(), s);
  return s;
}

SampleCheckResult pns_sample_check(int hop, std::span<Signal> signals, std::vector<bool>& consumed,
                                   const RevealOracle& reveal, double f, double epsilon_t,
                                   RandomStream& rng, Transcript* log) {
  if (consumed.size() != signals.size())
    throw ConfigError("pns_sample_check: consumed mask does not match signal count");
  SampleCheckResult res;
  res.hop = hop;

  std::vector<std::size_t> alive;
  for (std::size_t k = 0; k < signals.size(); ++k)
    if (!consumed[k]) alive.push_back(k);

  // Partial Fisher-Yates: the first `count` slots become a uniform sample.
  const std::size_t count = sample_count(f, alive.size());
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t j = i + rng.uniform_index(alive.size() - i);
    std::swap(alive[i], alive[j]);
  }

  auto abort_with = [&](AbortReason r) {
    res.verdict = Verdict::kAbort;
    res.abort_reason = r;
  };

  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t pos = alive[i];
    const Basis basis = basis_from_bit(rng.bit());
    const DetectorRecord rec = detect_and_measure(signals[pos], basis, rng);
    res.sampled.push_back(pos);
    consumed[pos] = true;
    signals[pos].photon_count = 0;
    if (log) log->push(event::SampledByAlice{hop, pos, rec});

    if (rec.coincidence()) {
      ++res.coincidences;
      abort_with(AbortReason::kMultiPhoton);
      return res;
    }
    const auto history = reveal ? reveal(pos) : std::nullopt;
    if (!history) {
      abort_with(AbortReason::kProtocolViolation);
      return res;
    }
    const PhotonState expected = transport(history->prepared, history->ops);
    if (!rec.any_click()) {
      // A photon was owed here; its absence is evidence in either basis.
      ++res.basis_matched;
      ++res.mismatches;
      continue;
    }
    if (expected.basis != basis) continue;
    ++res.basis_matched;
    const std::uint8_t got = rec.arm_a_clicked ? *rec.arm_a_bit : *rec.arm_b_bit;
    if (got != expected.bit) ++res.mismatches;
  }

  if (res.basis_matched > 0)
    res.error_rate = static_cast<double>(res.mismatches) / static_cast<double>(res.basis_matched);
  if (res.error_rate > epsilon_t) abort_with(AbortReason::kErrorRate);
  return res;
}

std::vector<std::vector<Signal>> distribute_to_bobs(std::span<const Signal> signals,
                                                    const std::vector<bool>& consumed, int n,
                                                    std::size_t N) {
  if (signals.size() != static_cast<std::size_t>(n) * N || consumed.size() != signals.size())
    throw ConfigError("distribute_to_bobs: expected n*N signals");
  std::vector<std::vector<Signal>> bobs(static_cast<std::size_t>(n));
  for (std::size_t k = 0; k < signals.size(); ++k)
    if (!consumed[k]) bobs[k / N].push_back(signals[k]);
  return bobs;
}

void announce_basis_strings(Board& board, const std::vector<std::vector<PartyOp>>& ops,
                            Transcript* log) {
  board.basis_strings.clear();
  for (std::size_t i = 0; i < ops.size(); ++i) {
    std::string bits(ops[i].size(), '0');
    for (std::size_t k = 0; k < bits.size(); ++k) bits[k] = static_cast<char>('0' + ops[i][k].b_bit);
    if (log) log->push(event::AnnouncedBasisStrings{PartyId::alice(static_cast<int>(i) + 1), bits});
    board.basis_strings.push_back(std::move(bits));
  }
  board.announced = true;
}

std::optional<Basis> Board::receiver_basis(std::size_t position) const {
  if (!announced) return std::nullopt;
  std::uint8_t acc = 0;
  for (const auto& s : basis_strings) {
    if (position >= s.size()) return std::nullopt;
    acc ^= static_cast<std::uint8_t>(s[position] - '0');
  }
  return basis_from_bit(acc);
}

std::vector<std::vector<BobOutcome>> bob_measure(const Board& board,
                                                 const std::vector<std::vector<Signal>>& bobs,
                                                 RandomStream& rng, Transcript* log) {
  if (!board.announced) throw OrderingViolation("receiver measured before basis announcement");
  std::vector<std::vector<BobOutcome>> out(bobs.size());
  for (std::size_t j = 0; j < bobs.size(); ++j) {
    const int bob = static_cast<int>(j) + 1;
    for (const auto& sig : bobs[j]) {
      if (sig.photon_count == 0) continue;
      const auto basis = board.receiver_basis(sig.position);
      if (!basis) throw OrderingViolation("no announced basis for position " + std::to_string(sig.position));
      const auto r = measure(sig.state, *basis, rng);
      out[j].push_back(BobOutcome{bob, sig.position, *basis, r.outcome});
      if (log) log->push(event::BobMeasured{bob, sig.position, *basis, r.outcome});
    }
  }
  return out;
}

std::vector<std::vector<BobOutcome>> announce_and_measure(
    Board& board, const std::vector<std::vector<PartyOp>>& ops,
    const std::vector<std::vector<Signal>>& bobs, RandomStream& rng, Transcript* log) {
  announce_basis_strings(board, ops, log);
  return bob_measure(board, bobs, rng, log);
}

void final_check_and_extract(Board& board, const std::vector<std::vector<PartyOp>>& ops,
                             const std::vector<std::vector<BobOutcome>>& outcomes, double g,
                             double epsilon_t, RandomStream& rng, RunReport& report,
                             Transcript* log) {
  std::string key1, key2;
  std::vector<std::size_t> key_positions;
  for (const auto& per_bob : outcomes) {
    for (const auto& o : per_bob) {
      const std::uint8_t expected = xor_a_bits(ops, o.position);
      if (rng.bernoulli(g)) {
        report.checked_positions.push_back(o.position);
        ++report.final_checked;
        if (o.outcome != expected) ++report.final_mismatches;
        if (log) log->push(event::RevealedForCheck{PartyId::bob(o.bob), o.position, o.outcome});
      } else {
        key_positions.push_back(o.position);
        key1.push_back(static_cast<char>('0' + expected));
        key2.push_back(static_cast<char>('0' + o.outcome));
      }
    }
  }
  board.checked_positions = report.checked_positions;
  if (report.final_checked > 0)
    report.final_error_rate =
        static_cast<double>(report.final_mismatches) / static_cast<double>(report.final_checked);
  if (report.final_error_rate > epsilon_t) {
    report.abort = AbortInfo{kFinalCheckHop, AbortReason::kErrorRate};
    return;
  }
  board.key_positions = key_positions;
  report.key_positions = std::move(key_positions);
  report.group1_key = std::move(key1);
  report.group2_key = std::move(key2);
}

RunResult run(const RunConfig& cfg, ChannelAdversary& adversary) {
  cfg.validate();
  const std::size_t total = cfg.total_positions();

  RunResult out;
  RunReport& report = out.report;
  Transcript& log = out.transcript;

  Board board;
  board.m = cfg.m;
  board.n = cfg.n;
  board.N = cfg.N;

  RandomStream adv_rng = RandomStream::derive(cfg.seed, StreamTag::kAdversary, 0);

  auto alice1_rng = RandomStream::derive(cfg.seed, StreamTag::kAliceOps, 1);
  PreparedBatch batch = alice1_prepare(cfg, alice1_rng);
  std::vector<std::vector<PartyOp>>& ops = out.truth.ops;
  ops.push_back(batch.ops);
  for (int i = 2; i <= cfg.m; ++i) {
    auto rng = RandomStream::derive(cfg.seed, StreamTag::kAliceOps, static_cast<std::uint64_t>(i));
    ops.push_back(random_party_ops(total, rng));
  }
  std::vector<Signal>& signals = batch.signals;
  for (const auto& s : signals) {
    out.truth.prepared.push_back(s.state);
    log.push(event::Prepared{s.position, s.state});
  }
  for (std::size_t i = 0; i < ops.size(); ++i) adversary.on_insider_ops(static_cast<int>(i) + 1, ops[i]);
  adversary.on_prepare(signals, adv_rng);

  std::vector<bool> consumed(total, false);

  auto forward = [&](const Link& link, Signal& sig) {
    const std::size_t pos = sig.position;
    sig = adversary.on_forward(link, sig, adv_rng);
    sig.position = pos;
    log.push(event::Forwarded{link.from, link.to, pos, sig.photon_count});
  };

  auto finish = [&]() -> RunResult {
    for (std::size_t k = 0; k < total; ++k)
      if (consumed[k]) report.consumed_positions.push_back(k);
    if (report.abort) {
      report.group1_key.clear();
      report.group2_key.clear();
      report.key_positions.clear();
      log.push(event::Abort{report.abort->hop, report.abort->reason});
    } else {
      log.push(event::Completed{});
    }
    report.attacker_report = adversary.finalize(board, adv_rng);
    return std::move(out);
  };

  for (int hop = 2; hop <= cfg.m; ++hop) {
    const Link link{PartyId::alice(hop - 1), PartyId::alice(hop)};
    for (auto& sig : signals)
      if (!consumed[sig.position]) forward(link, sig);

    if (cfg.variant == Variant::kModified) {
      // Alice `hop` learns Alice 1's state and the ops of Alices 2..hop-1.
      const RevealOracle reveal = [&](std::size_t pos) -> std::optional<RevealedHistory> {
        if (pos >= total) return std::nullopt;
        RevealedHistory h{out.truth.prepared[pos], {}};
        for (int i = 2; i < hop; ++i) h.ops.push_back(ops[static_cast<std::size_t>(i - 1)][pos]);
        return h;
      };
      auto hop_rng = RandomStream::derive(cfg.seed, StreamTag::kHopCheck, static_cast<std::uint64_t>(hop));
      SampleCheckResult res =
          pns_sample_check(hop, signals, consumed, reveal, cfg.f, cfg.epsilon_t, hop_rng, &log);
      if (cfg.public_sample_announcement)
        board.announced_samples.insert(board.announced_samples.end(), res.sampled.begin(),
                                       res.sampled.end());
      const bool abort = res.verdict == Verdict::kAbort;
      const AbortReason reason = res.abort_reason.value_or(AbortReason::kErrorRate);
      report.hop_checks.push_back(std::move(res));
      if (abort) {
        report.abort = AbortInfo{hop, reason};
        return finish();
      }
    }
    alice_i_transform(ops[static_cast<std::size_t>(hop - 1)], signals);
  }

  auto bobs = distribute_to_bobs(signals, consumed, cfg.n, cfg.N);
  for (std::size_t j = 0; j < bobs.size(); ++j) {
    const Link link{PartyId::alice(cfg.m), PartyId::bob(static_cast<int>(j) + 1)};
    for (auto& sig : bobs[j]) forward(link, sig);
  }

  auto bob_rng = RandomStream::derive(cfg.seed, StreamTag::kBobMeasure, 0);
  announce_basis_strings(board, ops, &log);
  adversary.on_announcement(board);
  const auto outcomes = bob_measure(board, bobs, bob_rng, &log);

  auto check_rng = RandomStream::derive(cfg.seed, StreamTag::kFinalCheck, 0);
  final_check_and_extract(board, ops, outcomes, cfg.g, cfg.epsilon_t, check_rng, report, &log);
  return finish();
}

namespace {

using ordered_json = nlohmann::ordered_json;

void emit(std::ostream& os, const char* field, ordered_json value) {
  ordered_json rec;
  rec["field"] = field;
  rec["value"] = std::move(value);
  os << rec.dump() << '\n';
}

ordered_json attacker_json(const AttackerReport& r) {
  ordered_json j;
  j["attack"] = r.attack;
  ordered_json a = ordered_json::object(), b = ordered_json::object();
  for (const auto& [party, s] : r.estimated_a) a["A" + std::to_string(party)] = s;
  for (const auto& [party, s] : r.estimated_b) b["A" + std::to_string(party)] = s;
  j["estimated_a"] = a;
  j["estimated_b"] = b;
  j["key_guess"] = r.key_guess;
  j["key_bits_scored"] = r.key_bits_scored;
  j["key_bits_correct"] = r.key_bits_correct;
  j["key_accuracy"] = r.key_accuracy ? ordered_json(*r.key_accuracy) : ordered_json(nullptr);
  j["ops_scored"] = r.ops_scored;
  j["ops_correct"] = r.ops_correct;
  j["op_accuracy"] = r.op_accuracy ? ordered_json(*r.op_accuracy) : ordered_json(nullptr);
  return j;
}

}  // namespace

void RunReport::write_jsonl(std::ostream& os) const {
  emit(os, "outcome", completed() ? "completed" : "aborted");
  if (abort) {
    emit(os, "abort_hop", abort->hop == kFinalCheckHop ? ordered_json("final") : ordered_json(abort->hop));
    emit(os, "abort_reason", abort_reason_name(abort->reason));
  } else {
    emit(os, "abort_hop", nullptr);
    emit(os, "abort_reason", nullptr);
  }
  emit(os, "group1_key", group1_key);
  emit(os, "group2_key", group2_key);
  emit(os, "key_length", group1_key.size());
  ordered_json hops = ordered_json::array();
  for (const auto& h : hop_checks) {
    hops.push_back(ordered_json{{"hop", h.hop},
                                {"samples", h.sampled.size()},
                                {"coincidences", h.coincidences},
                                {"basis_matched", h.basis_matched},
                                {"mismatches", h.mismatches},
                                {"error_rate", h.error_rate},
                                {"verdict", h.verdict == Verdict::kContinue ? "continue" : "abort"}});
  }
  emit(os, "hop_checks", hops);
  emit(os, "final_checked", final_checked);
  emit(os, "final_mismatches", final_mismatches);
  emit(os, "final_error_rate", final_error_rate);
  emit(os, "consumed_positions", consumed_positions);
  emit(os, "checked_positions", checked_positions);
  emit(os, "attacker_report", attacker_report ? attacker_json(*attacker_report) : ordered_json(nullptr));
}

std::string RunReport::to_jsonl() const {
  std::ostringstream os;
  write_jsonl(os);
  return os.str();
}

}  // namespace qss
