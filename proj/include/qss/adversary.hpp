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

#ifndef QSS_ADVERSARY_HPP
#define QSS_ADVERSARY_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qss/photonic.hpp"
#include "qss/random.hpp"
#include "qss/types.hpp"

namespace qss {

/// The public classical board. Everything here is visible to every party
/// and to the adversary.
struct Board {
  int m = 0;
  int n = 0;
  std::size_t N = 0;

  /// B_i for Alice i at index i-1, as '0'/'1' characters. Empty until
  /// `announced` is set.
  std::vector<std::string> basis_strings;
  bool announced = false;

  /// Positions destroyed by hop checks. Only filled when sample
  /// announcements are public.
  std::vector<std::size_t> announced_samples;

  std::vector<std::size_t> checked_positions;
  std::vector<std::size_t> key_positions;

  std::size_t total_positions() const noexcept { return static_cast<std::size_t>(n) * N; }

  /// XOR of all announced b-bits at `position`, i.e. the basis Bob uses.
  std::optional<Basis> receiver_basis(std::size_t position) const;
};

/// What an attack recovered. Strings are indexed by position and use
/// '0', '1', or '?' for unknown.
struct AttackerReport {
  std::string attack;
  std::map<int, std::string> estimated_a;
  std::map<int, std::string> estimated_b;
  std::string key_guess;

  // Scoring against ground truth; filled by analysis::score_attacker.
  std::size_t key_bits_scored = 0;
  std::size_t key_bits_correct = 0;
  std::optional<double> key_accuracy;
  std::size_t ops_scored = 0;
  std::size_t ops_correct = 0;
  std::optional<double> op_accuracy;
};

/// Hooks wired to every quantum link of a run. The default implementation
/// is an honest channel.
class ChannelAdversary {
 public:
  virtual ~ChannelAdversary() = default;

  /// Called once with Alice 1's freshly prepared signals, before they leave
  /// her lab.
  virtual void on_prepare(std::span<Signal> signals, RandomStream& rng) {
    (void)signals;
    (void)rng;
  }

  /// Called for every signal crossing `link`. The returned signal is what
  /// the receiving party gets; its position is forced back to the input's.
  virtual Signal on_forward(const Link& link, Signal sig, RandomStream& rng) {
    (void)link;
    (void)rng;
    return sig;
  }

  virtual void on_announcement(const Board& board) { (void)board; }

  /// Insider knowledge: called once per Alice with her full op strings
  /// before any signal moves. An adversary co-located with Alice i reads
  /// only her entry; the others are ignored.
  virtual void on_insider_ops(int alice, std::span<const PartyOp> ops) {
    (void)alice;
    (void)ops;
  }

  /// Called once at the end of every run, completed or aborted.
  virtual std::optional<AttackerReport> finalize(const Board& board, RandomStream& rng) {
    (void)board;
    (void)rng;
    return std::nullopt;
  }
};

using PassThroughAdversary = ChannelAdversary;

}  // namespace qss

#endif  // QSS_ADVERSARY_HPP
