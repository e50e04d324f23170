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

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include <gtest/gtest.h>

#include "qss/attacks.hpp"

namespace qss {
namespace {

RunConfig small_config(Variant v = Variant::kOriginal) {
  RunConfig cfg;
  cfg.m = 3;
  cfg.n = 2;
  cfg.N = 100;
  cfg.variant = v;
  cfg.seed = 11;
  return cfg;
}

std::vector<std::vector<PartyOp>> fixed_ops(std::initializer_list<std::initializer_list<PartyOp>> rows) {
  std::vector<std::vector<PartyOp>> out;
  for (const auto& r : rows) out.emplace_back(r);
  return out;
}

// ---- configuration --------------------------------------------------------

TEST(RunConfig, RejectsOutOfRangeFields) {
  auto bad = [](auto mutate) {
    RunConfig c;
    mutate(c);
    return c;
  };
  EXPECT_THROW(bad([](RunConfig& c) { c.m = 1; }).validate(), ConfigError);
  EXPECT_THROW(bad([](RunConfig& c) { c.n = 0; }).validate(), ConfigError);
  EXPECT_THROW(bad([](RunConfig& c) { c.N = 0; }).validate(), ConfigError);
  EXPECT_THROW(bad([](RunConfig& c) { c.f = 1.0; }).validate(), ConfigError);
  EXPECT_THROW(bad([](RunConfig& c) { c.g = 0.0; }).validate(), ConfigError);
  EXPECT_THROW(bad([](RunConfig& c) { c.epsilon_t = 0.5; }).validate(), ConfigError);
  EXPECT_NO_THROW(RunConfig{}.validate());
}

// ---- alice1_prepare -------------------------------------------------------

TEST(Alice1Prepare, CodeMapping) {
  EXPECT_EQ(prepared_state({0, 0}), (PhotonState{Basis::kZ, 0, +1}));
  EXPECT_EQ(prepared_state({1, 0}), (PhotonState{Basis::kZ, 1, +1}));
  EXPECT_EQ(prepared_state({0, 1}), (PhotonState{Basis::kX, 0, +1}));
  EXPECT_EQ(prepared_state({1, 1}), (PhotonState{Basis::kX, 1, +1}));
}

TEST(Alice1Prepare, SinglePhotonSignalsInPreparedStates) {
  RunConfig cfg = small_config();
  RandomStream rng(1);
  const PreparedBatch b = alice1_prepare(cfg, rng);
  ASSERT_EQ(b.ops.size(), cfg.total_positions());
  ASSERT_EQ(b.signals.size(), cfg.total_positions());
  std::size_t ones = 0;
  for (std::size_t k = 0; k < b.signals.size(); ++k) {
    EXPECT_EQ(b.signals[k].position, k);
    EXPECT_EQ(b.signals[k].photon_count, 1u);
    EXPECT_EQ(b.signals[k].state, prepared_state(b.ops[k]));
    ones += b.ops[k].a_bit + b.ops[k].b_bit;
  }
  // 400 fair bits.
  EXPECT_NEAR(static_cast<double>(ones) / 400.0, 0.5, 0.1);
}

// ---- alice_i_transform ----------------------------------------------------

TEST(AliceITransform, Examples) {
  std::vector<Signal> sig{{0, 1, {Basis::kZ, 0, +1}}, {1, 1, {Basis::kZ, 0, +1}}, {2, 1, {Basis::kX, 1, -1}},
                          {3, 3, {Basis::kZ, 0, +1}}};
  const std::vector<PartyOp> ops{{1, 0}, {1, 1}, {0, 0}, {1, 1}};
  alice_i_transform(ops, sig);
  EXPECT_EQ(sig[0].state, (PhotonState{Basis::kZ, 1, -1}));
  EXPECT_EQ(sig[1].state, (PhotonState{Basis::kX, 1, -1}));
  EXPECT_EQ(sig[2].state, (PhotonState{Basis::kX, 1, -1}));
  EXPECT_EQ(sig[3].state, (PhotonState{Basis::kX, 1, -1}));
  EXPECT_EQ(sig[3].photon_count, 3u);
}

TEST(AliceITransform, VacuumUntouchedAndLengthChecked) {
  std::vector<Signal> sig{{0, 0, {Basis::kZ, 0, +1}}};
  alice_i_transform(std::vector<PartyOp>{{1, 1}}, sig);
  EXPECT_EQ(sig[0].state, (PhotonState{Basis::kZ, 0, +1}));
  EXPECT_THROW(alice_i_transform(std::vector<PartyOp>{{1, 1}, {0, 0}}, sig), ConfigError);
}

// ---- pns_sample_check -----------------------------------------------------

struct HopFixture {
  std::vector<PartyOp> ops1;
  std::vector<Signal> signals;
  std::vector<bool> consumed;

  explicit HopFixture(std::size_t count, std::uint64_t seed) {
    RunConfig cfg;
    cfg.n = 1;
    cfg.N = count;
    RandomStream rng(seed);
    auto b = alice1_prepare(cfg, rng);
    ops1 = b.ops;
    signals = b.signals;
    consumed.assign(count, false);
  }

  RevealOracle oracle() const {
    return [this](std::size_t pos) -> std::optional<RevealedHistory> {
      return RevealedHistory{prepared_state(ops1[pos]), {}};
    };
  }
};

TEST(PnsSampleCheck, HonestChannelPasses) {
  for (double f : {0.1, 0.25, 0.6}) {
    HopFixture fx(200, 3);
    RandomStream rng(5);
    Transcript log;
    const auto r = pns_sample_check(2, fx.signals, fx.consumed, fx.oracle(), f, 0.05, rng, &log);
    EXPECT_EQ(r.verdict, Verdict::kContinue);
    EXPECT_EQ(r.coincidences, 0u);
    EXPECT_EQ(r.mismatches, 0u);
    EXPECT_EQ(r.error_rate, 0.0);
    EXPECT_EQ(r.sampled.size(), static_cast<std::size_t>(std::ceil(f * 200 - 1e-9)));
    EXPECT_EQ(log.size(), r.sampled.size());
    for (std::size_t pos : r.sampled) {
      EXPECT_TRUE(fx.consumed[pos]);
      EXPECT_EQ(fx.signals[pos].photon_count, 0u);
    }
    std::set<std::size_t> uniq(r.sampled.begin(), r.sampled.end());
    EXPECT_EQ(uniq.size(), r.sampled.size());
  }
}

TEST(PnsSampleCheck, LaterHopUsesRevealedOps) {
  HopFixture fx(300, 8);
  RandomStream ops_rng(9);
  const auto ops2 = random_party_ops(300, ops_rng);
  alice_i_transform(ops2, fx.signals);
  const RevealOracle reveal = [&](std::size_t pos) -> std::optional<RevealedHistory> {
    return RevealedHistory{prepared_state(fx.ops1[pos]), {ops2[pos]}};
  };
  RandomStream rng(10);
  const auto r = pns_sample_check(3, fx.signals, fx.consumed, reveal, 0.5, 0.0, rng, nullptr);
  EXPECT_EQ(r.verdict, Verdict::kContinue);
  EXPECT_GT(r.basis_matched, 40u);
  EXPECT_EQ(r.mismatches, 0u);
}

TEST(PnsSampleCheck, ZeroFractionSamplesNothing) {
  HopFixture fx(50, 1);
  RandomStream rng(1);
  const auto r = pns_sample_check(2, fx.signals, fx.consumed, fx.oracle(), 0.0, 0.05, rng, nullptr);
  EXPECT_TRUE(r.sampled.empty());
  EXPECT_EQ(r.verdict, Verdict::kContinue);
  EXPECT_EQ(std::count(fx.consumed.begin(), fx.consumed.end(), true), 0);
}

TEST(PnsSampleCheck, TwoPhotonSignalsAbortAlmostAlways) {
  // 20 samples of 2-photon signals: P(no coincidence) = 2^-20.
  int aborts = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    HopFixture fx(20, seed);
    for (auto& s : fx.signals) s.photon_count = 2;
    RandomStream rng(1000 + seed);
    const auto r = pns_sample_check(2, fx.signals, fx.consumed, fx.oracle(), 0.999, 0.05, rng, nullptr);
    ASSERT_LE(r.sampled.size(), 20u);
    if (r.verdict == Verdict::kAbort) {
      ASSERT_EQ(r.abort_reason, AbortReason::kMultiPhoton);
      ASSERT_EQ(r.coincidences, 1u);
      ++aborts;
    }
  }
  EXPECT_GE(aborts, 99);
}

TEST(PnsSampleCheck, UpstreamInterceptResendShowsQuarterErrorRate) {
  HopFixture fx(20000, 21);
  InterceptResend eve({{Link{PartyId::alice(1), PartyId::alice(2)}}});
  RandomStream eve_rng(22);
  const Link link{PartyId::alice(1), PartyId::alice(2)};
  for (auto& s : fx.signals) s = eve.on_forward(link, s, eve_rng);
  RandomStream rng(23);
  const auto r = pns_sample_check(2, fx.signals, fx.consumed, fx.oracle(), 0.5, 0.05, rng, nullptr);
  EXPECT_GT(r.basis_matched, 4000u);
  EXPECT_NEAR(r.error_rate, 0.25, 0.03);
  EXPECT_EQ(r.verdict, Verdict::kAbort);
  EXPECT_EQ(r.abort_reason, AbortReason::kErrorRate);
}

TEST(PnsSampleCheck, MissingRevealDataIsProtocolViolation) {
  HopFixture fx(10, 2);
  RandomStream rng(2);
  const RevealOracle silent = [](std::size_t) -> std::optional<RevealedHistory> { return std::nullopt; };
  const auto r = pns_sample_check(2, fx.signals, fx.consumed, silent, 0.5, 0.05, rng, nullptr);
  EXPECT_EQ(r.verdict, Verdict::kAbort);
  EXPECT_EQ(r.abort_reason, AbortReason::kProtocolViolation);
}

TEST(PnsSampleCheck, MissingPhotonCountsAsError) {
  HopFixture fx(10, 2);
  for (auto& s : fx.signals) s.photon_count = 0;
  RandomStream rng(2);
  const auto r = pns_sample_check(2, fx.signals, fx.consumed, fx.oracle(), 0.5, 0.05, rng, nullptr);
  EXPECT_EQ(r.basis_matched, 5u);
  EXPECT_EQ(r.mismatches, 5u);
  EXPECT_EQ(r.abort_reason, AbortReason::kErrorRate);
}

// ---- distribute_to_bobs ---------------------------------------------------

TEST(DistributeToBobs, Partition) {
  std::vector<Signal> sig;
  for (std::size_t k = 0; k < 6; ++k) sig.push_back(Signal{k, 1, {}});
  std::vector<bool> consumed(6, false);
  auto positions = [](const std::vector<Signal>& v) {
    std::vector<std::size_t> out;
    for (const auto& s : v) out.push_back(s.position);
    return out;
  };
  auto bobs = distribute_to_bobs(sig, consumed, 2, 3);
  ASSERT_EQ(bobs.size(), 2u);
  EXPECT_EQ(positions(bobs[0]), (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_EQ(positions(bobs[1]), (std::vector<std::size_t>{3, 4, 5}));

  consumed[1] = true;
  bobs = distribute_to_bobs(sig, consumed, 2, 3);
  EXPECT_EQ(positions(bobs[0]), (std::vector<std::size_t>{0, 2}));

  consumed.assign(6, false);
  bobs = distribute_to_bobs(sig, consumed, 1, 6);
  ASSERT_EQ(bobs.size(), 1u);
  EXPECT_EQ(positions(bobs[0]).size(), 6u);

  EXPECT_THROW(distribute_to_bobs(sig, consumed, 2, 2), ConfigError);
}

// ---- announce_and_measure -------------------------------------------------

TEST(AnnounceAndMeasure, MeasuringBeforeAnnouncementIsRejected) {
  Board board;
  board.m = 2;
  board.n = 1;
  board.N = 1;
  RandomStream rng(1);
  const std::vector<std::vector<Signal>> bobs{{Signal{0, 1, {}}}};
  EXPECT_THROW(bob_measure(board, bobs, rng, nullptr), OrderingViolation);
}

TEST(AnnounceAndMeasure, BasisIsXorOfAnnouncedStrings) {
  Board board;
  board.m = 2;
  board.n = 1;
  board.N = 1;
  const auto ops = fixed_ops({{{0, 1}}, {{0, 1}}});
  announce_basis_strings(board, ops, nullptr);
  EXPECT_EQ(board.receiver_basis(0), Basis::kZ);
}

TEST(AnnounceAndMeasure, ThreePartyOutcomeIsXorOfABits) {
  // a-bits (1, 0, 1) at the single position; b-bits arbitrary.
  const auto ops = fixed_ops({{{1, 1}}, {{0, 1}}, {{1, 1}}});
  std::vector<Signal> sig{Signal{0, 1, prepared_state(ops[0][0])}};
  alice_i_transform(ops[1], sig);
  alice_i_transform(ops[2], sig);
  Board board;
  board.m = 3;
  board.n = 1;
  board.N = 1;
  RandomStream rng(4);
  Transcript log;
  const auto out = announce_and_measure(board, ops, {sig}, rng, &log);
  ASSERT_EQ(out[0].size(), 1u);
  EXPECT_EQ(out[0][0].basis, sig[0].state.basis);
  EXPECT_EQ(out[0][0].outcome, 0);
  EXPECT_EQ(log.size(), 4u);  // three announcements, one measurement
}

// ---- final_check_and_extract ----------------------------------------------

TEST(FinalCheck, RevealedPositionsNeverEnterKeys) {
  const std::size_t count = 100;
  std::vector<std::vector<PartyOp>> ops(2, std::vector<PartyOp>(count));
  std::vector<std::vector<BobOutcome>> outcomes(1);
  for (std::size_t k = 0; k < count; ++k) outcomes[0].push_back(BobOutcome{1, k, Basis::kZ, 0});
  std::vector<std::size_t> key_lengths;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Board board;
    RandomStream rng(seed);
    RunReport rep;
    final_check_and_extract(board, ops, outcomes, 0.5, 0.05, rng, rep, nullptr);
    ASSERT_TRUE(rep.completed());
    ASSERT_EQ(rep.key_positions.size() + rep.checked_positions.size(), count);
    std::set<std::size_t> checked(rep.checked_positions.begin(), rep.checked_positions.end());
    for (std::size_t k : rep.key_positions) ASSERT_FALSE(checked.count(k));
    ASSERT_EQ(rep.group1_key, rep.group2_key);
    key_lengths.push_back(rep.key_positions.size());
  }
  double mean = 0;
  for (auto l : key_lengths) mean += static_cast<double>(l);
  mean /= static_cast<double>(key_lengths.size());
  // Binomial(100, 0.5): sd of the mean over 200 runs is 5 / sqrt(200).
  EXPECT_NEAR(mean, 50.0, 1.5);
}

TEST(FinalCheck, ErrorsAboveThresholdDiscardKeys) {
  const std::size_t count = 400;
  std::vector<std::vector<PartyOp>> ops(2, std::vector<PartyOp>(count));
  std::vector<std::vector<BobOutcome>> outcomes(1);
  for (std::size_t k = 0; k < count; ++k)
    outcomes[0].push_back(BobOutcome{1, k, Basis::kZ, static_cast<std::uint8_t>(k % 4 == 0)});
  Board board;
  RandomStream rng(3);
  RunReport rep;
  final_check_and_extract(board, ops, outcomes, 0.5, 0.05, rng, rep, nullptr);
  ASSERT_FALSE(rep.completed());
  EXPECT_EQ(rep.abort->hop, kFinalCheckHop);
  EXPECT_EQ(rep.abort->reason, AbortReason::kErrorRate);
  EXPECT_TRUE(rep.group1_key.empty());
  EXPECT_TRUE(rep.group2_key.empty());
  EXPECT_NEAR(rep.final_error_rate, 0.25, 0.08);
}

// ---- run ------------------------------------------------------------------

TEST(Run, HonestOriginalCompletesWithEqualKeys) {
  PassThroughAdversary honest;
  const RunResult r = run(small_config(), honest);
  EXPECT_TRUE(r.report.completed());
  EXPECT_EQ(r.report.group1_key, r.report.group2_key);
  EXPECT_FALSE(r.report.group1_key.empty());
  EXPECT_EQ(r.report.final_error_rate, 0.0);
  EXPECT_FALSE(r.report.attacker_report.has_value());
  EXPECT_EQ(find_invariant_violation(r.transcript, Variant::kOriginal), std::nullopt);
  EXPECT_TRUE(std::holds_alternative<event::Completed>(r.transcript.events().back()));
}

TEST(Run, SameSeedSameTranscript) {
  for (Variant v : {Variant::kOriginal, Variant::kModified}) {
    PassThroughAdversary a, b;
    const auto r1 = run(small_config(v), a);
    const auto r2 = run(small_config(v), b);
    EXPECT_EQ(r1.transcript.to_jsonl(), r2.transcript.to_jsonl());
    EXPECT_EQ(r1.report.to_jsonl(), r2.report.to_jsonl());
  }
  PassThroughAdversary a, b;
  RunConfig other = small_config();
  other.seed = 12;
  EXPECT_NE(run(small_config(), a).transcript.to_jsonl(), run(other, b).transcript.to_jsonl());
}

TEST(Run, KeysCoverExactlyUncheckedUnconsumedPositions) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    RunConfig cfg = small_config(Variant::kModified);
    cfg.seed = seed;
    PassThroughAdversary honest;
    const auto r = run(cfg, honest);
    ASSERT_TRUE(r.report.completed());
    std::set<std::size_t> all;
    all.insert(r.report.key_positions.begin(), r.report.key_positions.end());
    all.insert(r.report.checked_positions.begin(), r.report.checked_positions.end());
    all.insert(r.report.consumed_positions.begin(), r.report.consumed_positions.end());
    EXPECT_EQ(all.size(), cfg.total_positions());
    EXPECT_EQ(r.report.key_positions.size() + r.report.checked_positions.size() +
                  r.report.consumed_positions.size(),
              cfg.total_positions());
    EXPECT_EQ(r.report.group1_key.size(), r.report.key_positions.size());
    EXPECT_EQ(r.report.group1_key, r.report.group2_key);
  }
}

TEST(Run, ExpectedKeyLengthAfterSamplingAndChecking) {
  // nN (1-f)^(m-1) (1-g) with ceil rounding on the hop samples.
  RunConfig cfg = small_config(Variant::kModified);
  cfg.N = 500;
  double total = 0;
  const int seeds = 40;
  for (int s = 0; s < seeds; ++s) {
    cfg.seed = static_cast<std::uint64_t>(s);
    PassThroughAdversary honest;
    total += static_cast<double>(run(cfg, honest).report.group1_key.size());
  }
  const double expected = 1000.0 * 0.75 * 0.75 * 0.75;
  EXPECT_NEAR(total / seeds, expected, 5.0);
}

TEST(Run, OriginalAndModifiedWithoutSamplingAgree) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    RunConfig a = small_config(Variant::kOriginal), b = small_config(Variant::kModified);
    a.seed = b.seed = seed;
    b.f = 0.0;
    PassThroughAdversary h1, h2;
    const auto ra = run(a, h1), rb = run(b, h2);
    EXPECT_EQ(ra.report.group1_key, rb.report.group1_key);
    EXPECT_EQ(ra.report.group2_key, rb.report.group2_key);
    EXPECT_EQ(ra.transcript.to_jsonl(), rb.transcript.to_jsonl());
  }
}

TEST(Run, InvariantsHoldUnderAttackAndAbort) {
  const RunConfig base = small_config(Variant::kModified);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    RunConfig cfg = base;
    cfg.seed = seed;
    std::vector<std::unique_ptr<ChannelAdversary>> advs;
    advs.push_back(trojan_alice1({2}));
    advs.push_back(inner_eve(InnerEveConfig{}, cfg.m));
    advs.push_back(intercept_resend({final_links(cfg.m, cfg.n)}));
    advs.push_back(intercept_resend({{Link{PartyId::alice(1), PartyId::alice(2)}}}));
    for (auto& adv : advs) {
      for (Variant v : {Variant::kOriginal, Variant::kModified}) {
        cfg.variant = v;
        const auto r = run(cfg, *adv);
        EXPECT_EQ(find_invariant_violation(r.transcript, v), std::nullopt);
        if (!r.report.completed()) {
          EXPECT_TRUE(r.report.group1_key.empty());
          EXPECT_TRUE(r.report.group2_key.empty());
          EXPECT_TRUE(r.report.key_positions.empty());
          EXPECT_TRUE(std::holds_alternative<event::Abort>(r.transcript.events().back()));
        }
      }
    }
  }
}

TEST(Run, HopAbortStopsBeforeAnnouncement) {
  RunConfig cfg = small_config(Variant::kModified);
  TrojanAlice1 trojan({2});
  const auto r = run(cfg, trojan);
  ASSERT_FALSE(r.report.completed());
  EXPECT_EQ(r.report.abort->hop, 2);
  for (const auto& e : r.transcript.events()) {
    EXPECT_FALSE(std::holds_alternative<event::AnnouncedBasisStrings>(e));
    EXPECT_FALSE(std::holds_alternative<event::BobMeasured>(e));
  }
}

TEST(Run, PrivateSampleAnnouncementKeepsBoardClean) {
  struct BoardSpy : ChannelAdversary {
    std::size_t seen = 0;
    void on_announcement(const Board& b) override { seen = b.announced_samples.size(); }
  };
  RunConfig cfg = small_config(Variant::kModified);
  BoardSpy pub, priv;
  run(cfg, pub);
  cfg.public_sample_announcement = false;
  run(cfg, priv);
  EXPECT_EQ(pub.seen, 50u + 38u);
  EXPECT_EQ(priv.seen, 0u);
}

TEST(TranscriptInvariants, DetectsViolations) {
  Transcript t;
  t.push(event::AnnouncedBasisStrings{PartyId::alice(1), "0"});
  t.push(event::Forwarded{PartyId::alice(2), PartyId::bob(1), 0, 1});
  t.push(event::Completed{});
  EXPECT_NE(find_invariant_violation(t, Variant::kOriginal), std::nullopt);

  Transcript s;
  s.push(event::SampledByAlice{2, 0, {}});
  s.push(event::Completed{});
  EXPECT_NE(find_invariant_violation(s, Variant::kOriginal), std::nullopt);
  EXPECT_EQ(find_invariant_violation(s, Variant::kModified), std::nullopt);

  Transcript two;
  two.push(event::Abort{2, AbortReason::kMultiPhoton});
  two.push(event::Completed{});
  EXPECT_NE(find_invariant_violation(two, Variant::kModified), std::nullopt);
}

// ---- serialization --------------------------------------------------------

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void check_golden(const std::string& name, const std::string& actual) {
  const std::string path = std::string(QSS_GOLDEN_DIR) + "/" + name;
  if (std::getenv("QSS_UPDATE_GOLDEN")) {
    std::ofstream(path, std::ios::binary) << actual;
    GTEST_SKIP() << "rewrote " << path;
  }
  EXPECT_EQ(read_file(path), actual) << "golden mismatch for " << name;
}

TEST(Golden, HonestModifiedRun) {
  RunConfig cfg;
  cfg.m = 3;
  cfg.n = 2;
  cfg.N = 4;
  cfg.variant = Variant::kModified;
  cfg.seed = 7;
  PassThroughAdversary honest;
  const auto r = run(cfg, honest);
  check_golden("honest_modified_m3_n2_N4_seed7.transcript.jsonl", r.transcript.to_jsonl());
  check_golden("honest_modified_m3_n2_N4_seed7.report.jsonl", r.report.to_jsonl());
}

TEST(Golden, TrojanOriginalRun) {
  RunConfig cfg;
  cfg.m = 2;
  cfg.n = 1;
  cfg.N = 4;
  cfg.seed = 3;
  TrojanAlice1 trojan({2});
  const auto r = run(cfg, trojan);
  check_golden("trojan_original_m2_n1_N4_seed3.transcript.jsonl", r.transcript.to_jsonl());
  check_golden("trojan_original_m2_n1_N4_seed3.report.jsonl", r.report.to_jsonl());
}

}  // namespace
}  // namespace qss
