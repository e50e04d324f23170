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

#ifndef QSS_PROTOCOL_HPP
#define QSS_PROTOCOL_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qss/adversary.hpp"
#include "qss/photonic.hpp"
#include "qss/random.hpp"
#include "qss/transcript.hpp"
#include "qss/types.hpp"

namespace qss {

struct RunConfig {
  int m = 3;
  int n = 2;
  std::size_t N = 100;
  Variant variant = Variant::kOriginal;
  /// Fraction of the surviving positions each checking Alice consumes.
  double f = 0.25;
  /// Fraction of delivered positions revealed in the final check.
  double g = 0.25;
  double epsilon_t = 0.05;
  std::uint64_t seed = 0;
  /// Whether hop-check sample positions are posted on the public board.
  bool public_sample_announcement = true;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;

  /// Throws ConfigError naming the offending field.
  void validate() const;
  std::size_t total_positions() const noexcept { return static_cast<std::size_t>(n) * N; }
};

/// Alice 1's strings and the signals she emits.
struct PreparedBatch {
  std::vector<PartyOp> ops;
  std::vector<Signal> signals;
};

/// Prepared state for code (a, b): Z/X basis chosen by b, bit a, sign +1.
PhotonState prepared_state(const PartyOp& op) noexcept;

std::vector<PartyOp> random_party_ops(std::size_t count, RandomStream& rng);

PreparedBatch alice1_prepare(const RunConfig& cfg, RandomStream& rng);

/// Applies H^b U^a to every non-vacuum signal. Throws ConfigError on a
/// length mismatch.
void alice_i_transform(std::span<const PartyOp> ops, std::span<Signal> signals);

/// State reached from `prepared` after each op in order.
PhotonState transport(const PhotonState& prepared, std::span<const PartyOp> ops) noexcept;

/// What a checking Alice learns about one sampled position: Alice 1's
/// prepared state and the ops of every Alice between them.
struct RevealedHistory {
  PhotonState prepared;
  std::vector<PartyOp> ops;
};

using RevealOracle = std::function<std::optional<RevealedHistory>(std::size_t position)>;

enum class Verdict : std::uint8_t { kContinue, kAbort };

struct SampleCheckResult {
  int hop = 0;
  /// Positions in the order they were examined. On abort this stops at the
  /// sample that triggered it.
  std::vector<std::size_t> sampled;
  std::size_t coincidences = 0;
  std::size_t basis_matched = 0;
  std::size_t mismatches = 0;
  double error_rate = 0.0;
  Verdict verdict = Verdict::kContinue;
  std::optional<AbortReason> abort_reason;
};

/// Hop check performed by Alice `hop` before she applies her own ops.
/// `signals` and `consumed` are indexed by position. Samples
/// ceil(f * alive) alive positions uniformly, splits and measures each in a
/// random basis, aborts on the first coincidence, and otherwise compares
/// basis-matched outcomes against the state predicted from the revealed
/// history. A sample with no click counts as an error. Every examined
/// position is consumed.
SampleCheckResult pns_sample_check(int hop, std::span<Signal> signals, std::vector<bool>& consumed,
                                   const RevealOracle& reveal, double f, double epsilon_t,
                                   RandomStream& rng, Transcript* log);

/// Bob j (index j-1) gets positions [jN, (j+1)N) that were not consumed.
std::vector<std::vector<Signal>> distribute_to_bobs(std::span<const Signal> signals,
                                                    const std::vector<bool>& consumed, int n,
                                                    std::size_t N);

/// Thrown when a receiver would measure before the basis strings exist.
class OrderingViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Posts B_1..B_m on the board.
void announce_basis_strings(Board& board, const std::vector<std::vector<PartyOp>>& ops,
                            Transcript* log);

struct BobOutcome {
  int bob = 1;
  std::size_t position = 0;
  Basis basis = Basis::kZ;
  std::uint8_t outcome = 0;
};

/// Each Bob measures each received signal in the XOR of the announced
/// b-bits. Vacuum arrivals produce no outcome. Throws OrderingViolation if
/// the board has no announcement yet.
std::vector<std::vector<BobOutcome>> bob_measure(const Board& board,
                                                 const std::vector<std::vector<Signal>>& bobs,
                                                 RandomStream& rng, Transcript* log);

std::vector<std::vector<BobOutcome>> announce_and_measure(
    Board& board, const std::vector<std::vector<PartyOp>>& ops,
    const std::vector<std::vector<Signal>>& bobs, RandomStream& rng, Transcript* log);

struct AbortInfo {
  int hop = kFinalCheckHop;
  AbortReason reason = AbortReason::kErrorRate;

  friend bool operator==(const AbortInfo&, const AbortInfo&) = default;
};

struct RunReport {
  std::optional<AbortInfo> abort;
  std::string group1_key;
  std::string group2_key;
  std::vector<std::size_t> key_positions;
  std::vector<SampleCheckResult> hop_checks;
  std::size_t final_checked = 0;
  std::size_t final_mismatches = 0;
  double final_error_rate = 0.0;
  std::vector<std::size_t> consumed_positions;
  std::vector<std::size_t> checked_positions;
  std::optional<AttackerReport> attacker_report;

  bool completed() const noexcept { return !abort.has_value(); }

  /// One JSON record per field, fixed order. See docs/records.md.
  void write_jsonl(std::ostream& os) const;
  std::string to_jsonl() const;
};

/// Group-2 check: each delivered position is revealed with probability g
/// and compared with the XOR of all a-bits. Fills keys, checked positions,
/// and the final error rate in `report`; on an error rate above epsilon_t
/// sets the abort and leaves the keys empty.
void final_check_and_extract(Board& board, const std::vector<std::vector<PartyOp>>& ops,
                             const std::vector<std::vector<BobOutcome>>& outcomes, double g,
                             double epsilon_t, RandomStream& rng, RunReport& report,
                             Transcript* log);

/// Simulator-side facts no party sees in full.
struct GroundTruth {
  /// ops[i-1][position] for Alice i.
  std::vector<std::vector<PartyOp>> ops;
  std::vector<PhotonState> prepared;
};

struct RunResult {
  RunReport report;
  Transcript transcript;
  GroundTruth truth;
};

/// Executes one run end to end with `adversary` on every quantum link.
/// Deterministic in (cfg, adversary behaviour).
RunResult run(const RunConfig& cfg, ChannelAdversary& adversary);

}  // namespace qss

#endif  // QSS_PROTOCOL_HPP
