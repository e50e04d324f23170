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

#ifndef QSS_ATTACKS_HPP
#define QSS_ATTACKS_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "qss/adversary.hpp"
#include "qss/photonic.hpp"
#include "qss/types.hpp"

namespace qss {

/// Raised by classify_operation on malformed probe outcomes.
class InvalidProbe : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

struct OpClassification {
  Gate guess = Gate::kI;
  /// Both basis groups were unanimous, so the tie-break picked the Z group.
  bool ambiguous = false;

  /// (a, b) bits whose H^b U^a equals `guess`.
  PartyOp as_party_op() const noexcept { return PartyOp{u_power(guess), h_power(guess)}; }
};

/// Identifies which of {I, U, H, Hbar} acted on `probe` from 2^K outcomes
/// measured in Z and 2^K measured in X. The basis in which the image of
/// the probe is an eigenstate gives unanimous outcomes; the other basis
/// gives coin flips. When both are unanimous the Z group wins.
OpClassification classify_operation(std::span<const std::uint8_t> z_outcomes,
                                    std::span<const std::uint8_t> x_outcomes,
                                    const PhotonState& probe = PhotonState{});

struct TrojanAlice1Config {
  /// Photons per prepared signal. 1 makes the attack a no-op.
  std::uint32_t photons_per_signal = 2;
};

/// Alice 1 sends multi-photon signals, peels one photon off each signal on
/// its way into group 2, and measures it once the bases are public.
class TrojanAlice1 : public ChannelAdversary {
 public:
  explicit TrojanAlice1(TrojanAlice1Config cfg);

  void on_prepare(std::span<Signal> signals, RandomStream& rng) override;
  Signal on_forward(const Link& link, Signal sig, RandomStream& rng) override;
  std::optional<AttackerReport> finalize(const Board& board, RandomStream& rng) override;

 private:
  TrojanAlice1Config cfg_;
  std::vector<std::optional<PhotonState>> stored_;
};

struct InnerEveConfig {
  /// The Alice Eve is (2..m). Her own ops are known to her.
  int eve_index = 2;
  /// Probe bundles carry 2^(K+1) photons.
  int K = 3;
  PhotonState probe{};
  /// Hops to attack. Empty optional means every hop i in 2..m other than
  /// eve_index.
  std::optional<std::vector<int>> target_hops;

  std::uint32_t bundle_size() const noexcept { return 2u << K; }
};

/// Eve substitutes a probe bundle on the way into each target Alice,
/// reads her operation from the bundle on the way out, applies the
/// estimated operation to the genuine signal she held back, and forwards it.
class InnerEve : public ChannelAdversary {
 public:
  /// Throws ConfigError unless 2 <= eve_index <= m and 1 <= K <= 20.
  InnerEve(InnerEveConfig cfg, int m);

  const std::vector<int>& targets() const noexcept { return targets_; }

  void on_insider_ops(int alice, std::span<const PartyOp> ops) override;
  Signal on_forward(const Link& link, Signal sig, RandomStream& rng) override;
  std::optional<AttackerReport> finalize(const Board& board, RandomStream& rng) override;

 private:
  bool is_target(int alice) const noexcept;

  InnerEveConfig cfg_;
  std::vector<int> targets_;
  std::vector<PartyOp> own_ops_;
  std::vector<std::optional<Signal>> held_;
  std::map<int, std::vector<std::optional<PartyOp>>> estimates_;
};

struct InterceptResendConfig {
  std::vector<Link> links;
};

/// Measures one photon of each signal on the selected links in a random
/// basis and resends a fresh single photon in the observed state.
class InterceptResend : public ChannelAdversary {
 public:
  explicit InterceptResend(InterceptResendConfig cfg);

  std::size_t intercepted() const noexcept { return intercepted_; }

  Signal on_forward(const Link& link, Signal sig, RandomStream& rng) override;
  std::optional<AttackerReport> finalize(const Board& board, RandomStream& rng) override;

 private:
  struct Observation {
    Basis basis;
    std::uint8_t bit;
  };
  InterceptResendConfig cfg_;
  std::size_t intercepted_ = 0;
  std::vector<std::optional<Observation>> group2_observations_;
};

/// Every Alice m -> Bob j link.
std::vector<Link> final_links(int m, int n);

std::unique_ptr<ChannelAdversary> trojan_alice1(const TrojanAlice1Config& cfg);
std::unique_ptr<ChannelAdversary> inner_eve(const InnerEveConfig& cfg, int m);
std::unique_ptr<ChannelAdversary> intercept_resend(const InterceptResendConfig& cfg);

}  // namespace qss

#endif  // QSS_ATTACKS_HPP
