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

#ifndef QSS_ANALYSIS_HPP
#define QSS_ANALYSIS_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "qss/attacks.hpp"
#include "qss/protocol.hpp"

namespace qss {

/// Two-sided 99% normal quantile.
inline constexpr double kZ99 = 2.5758293035489004;

struct WilsonInterval {
  double estimate = 0.0;
  double lower = 0.0;
  double upper = 1.0;

  bool contains(double p) const noexcept { return lower <= p && p <= upper; }
};

/// Wilson score interval for a binomial proportion. With zero trials the
/// interval is [0, 1] around an estimate of 0.
WilsonInterval wilson_interval(std::size_t successes, std::size_t trials, double z = kZ99);

struct RateEstimate {
  std::size_t successes = 0;
  std::size_t trials = 0;
  WilsonInterval ci;

  static RateEstimate of(std::size_t successes, std::size_t trials) {
    return {successes, trials, wilson_interval(successes, trials)};
  }
  double rate() const noexcept { return ci.estimate; }
};

struct PassThroughSpec {};

/// Intercept-resend target selection. `final_links` adds every Alice m ->
/// Bob j link for the run's (m, n).
struct InterceptResendSpec {
  bool final_links = false;
  std::vector<Link> links;
};

using AdversarySpec = std::variant<PassThroughSpec, TrojanAlice1Config, InnerEveConfig, InterceptResendSpec>;

std::string adversary_name(const AdversarySpec& spec);
std::unique_ptr<ChannelAdversary> make_adversary(const AdversarySpec& spec, const RunConfig& cfg);

/// Fills the accuracy fields of report.attacker_report. Key accuracy is
/// scored over the key positions of a completed run, or over every
/// position Bob measured when the run aborted after measurement. Op
/// accuracy is scored over every position with an estimate.
void score_attacker(RunReport& report, const GroundTruth& truth, const Transcript& transcript);

/// Seed of trial `index`: SplitMix64 over a counter offset from `base`.
/// Pairwise distinct for distinct indices.
std::uint64_t trial_seed(std::uint64_t base, std::size_t index);

struct ExperimentSpec {
  RunConfig base;
  AdversarySpec adversary = PassThroughSpec{};
  std::size_t trials = 1;
  /// Worker threads; 0 means hardware concurrency.
  unsigned threads = 0;

  void validate() const;
};

struct HopTally {
  int hop = 0;
  std::size_t samples = 0;
  std::size_t coincidences = 0;
};

/// One row of the tabular export.
struct TrialSummary {
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  std::optional<AbortInfo> abort;
  std::size_t final_checked = 0;
  std::size_t final_mismatches = 0;
  double final_error_rate = 0.0;
  std::size_t key_length = 0;
  bool keys_equal = false;
  std::size_t attacker_scored = 0;
  std::size_t attacker_correct = 0;
  std::size_t ops_scored = 0;
  std::size_t ops_correct = 0;
  std::vector<HopTally> hops;
};

TrialSummary summarize_trial(std::size_t trial, std::uint64_t seed, const RunResult& result);

struct AggregateReport {
  std::string adversary;
  std::size_t trials = 0;
  std::size_t completed = 0;
  std::map<std::string, std::size_t> aborted_by_reason;
  /// Pooled over all checked bits of all trials.
  RateEstimate final_error_rate;
  /// Completed trials whose two keys agree.
  RateEstimate key_agreement;
  /// Pooled over all scored key bits.
  RateEstimate attacker_key_accuracy;
  RateEstimate attacker_op_accuracy;
  RateEstimate abort_frequency;
  /// Trials aborted at each hop; the final check is hop 0.
  std::map<int, RateEstimate> per_hop_detection;
  /// Pooled coincidences over hop-check samples.
  RateEstimate sample_coincidence;
  std::vector<TrialSummary> rows;
  /// Not serialized.
  double wall_clock_seconds = 0.0;

  void write_jsonl(std::ostream& os) const;
  void write_csv(std::ostream& os) const;
};

/// Order-independent: rows are sorted by trial index before folding.
AggregateReport aggregate(std::vector<TrialSummary> rows, std::string adversary);

AggregateReport run_experiment(const ExperimentSpec& spec);

struct DetectionPoint {
  double f = 0.0;
  RateEstimate abort_frequency;
};

/// Runs `spec` on the modified variant once per sample fraction.
std::vector<DetectionPoint> estimate_detection_curve(const ExperimentSpec& spec,
                                                     std::span<const double> f_values);

void write_detection_curve_csv(std::ostream& os, std::span<const DetectionPoint> curve);

}  // namespace qss

#endif  // QSS_ANALYSIS_HPP
