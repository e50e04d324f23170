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

#ifndef QSS_PHOTONIC_HPP
#define QSS_PHOTONIC_HPP

// Exact algebra of the single-photon layer. Every state the protocol can
// reach is one of the eight vectors {+-|0>, +-|1>, +-|+>, +-|->}, and every
// operation is one of the eight signed elements {+-I, +-U, +-H, +-Hbar}
// with U = |0><1| - |1><0| and Hbar = H U. Both sets are stored as small
// tuples; no amplitudes are ever computed.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "qss/random.hpp"

namespace qss {

enum class Basis : std::uint8_t { kZ = 0, kX = 1 };

constexpr Basis complement(Basis b) noexcept { return b == Basis::kZ ? Basis::kX : Basis::kZ; }
constexpr Basis basis_from_bit(std::uint8_t b) noexcept { return b ? Basis::kX : Basis::kZ; }
constexpr std::uint8_t basis_bit(Basis b) noexcept { return b == Basis::kX ? 1 : 0; }
char basis_char(Basis b) noexcept;

/// A pure qubit from the reachable orbit. (basis, bit) selects the physical
/// state: Z/0 = |0>, Z/1 = |1>, X/0 = |+>, X/1 = |->. sign is a global phase.
struct PhotonState {
  Basis basis = Basis::kZ;
  std::uint8_t bit = 0;
  std::int8_t sign = +1;

  friend constexpr bool operator==(const PhotonState&, const PhotonState&) = default;

  /// Same physical state, ignoring the global phase.
  constexpr bool same_ray(const PhotonState& o) const noexcept {
    return basis == o.basis && bit == o.bit;
  }
};

std::string to_string(const PhotonState& s);

enum class Gate : std::uint8_t { kI = 0, kU = 1, kH = 2, kHbar = 3 };

const char* gate_name(Gate g) noexcept;

/// One of {+-I, +-U, +-H, +-Hbar}.
struct ProtocolUnitary {
  Gate gate = Gate::kI;
  std::int8_t sign = +1;

  friend constexpr bool operator==(const ProtocolUnitary&, const ProtocolUnitary&) = default;
};

std::string to_string(const ProtocolUnitary& u);

/// Gate with the H-power h and U-power u, i.e. the element H^h U^u.
constexpr Gate gate_from_powers(std::uint8_t h, std::uint8_t u) noexcept {
  return static_cast<Gate>((h ? 2 : 0) | (u ? 1 : 0));
}
constexpr std::uint8_t h_power(Gate g) noexcept { return (static_cast<std::uint8_t>(g) >> 1) & 1; }
constexpr std::uint8_t u_power(Gate g) noexcept { return static_cast<std::uint8_t>(g) & 1; }

/// The eight signed states and the eight signed operations, in a fixed order.
const std::array<PhotonState, 8>& all_states() noexcept;
const std::array<ProtocolUnitary, 8>& all_unitaries() noexcept;

PhotonState apply_unitary(const ProtocolUnitary& u, const PhotonState& s) noexcept;

/// The element equal to `outer` applied after `inner`.
ProtocolUnitary compose(const ProtocolUnitary& outer, const ProtocolUnitary& inner) noexcept;

struct MeasureResult {
  std::uint8_t outcome = 0;
  PhotonState post;
};

/// Projective measurement in basis b. Matching basis is deterministic;
/// a conjugate basis gives a fair coin.
MeasureResult measure(const PhotonState& s, Basis b, RandomStream& rng);

/// Exact Born probability of `outcome` when s is measured in b.
double outcome_probability(const PhotonState& s, Basis b, std::uint8_t outcome) noexcept;

/// Photons sharing one sequence position. All photons carry `state`;
/// photon_count == 0 is vacuum.
struct Signal {
  std::size_t position = 0;
  std::uint32_t photon_count = 0;
  PhotonState state;

  friend bool operator==(const Signal&, const Signal&) = default;
};

struct SplitSignal {
  Signal arm_a;
  Signal arm_b;
};

/// 50/50 splitter: each photon independently leaves through arm a or arm b.
SplitSignal pns_split(const Signal& sig, RandomStream& rng);

/// Outcome of a splitter followed by two threshold detectors.
struct DetectorRecord {
  bool arm_a_clicked = false;
  bool arm_b_clicked = false;
  std::optional<std::uint8_t> arm_a_bit;
  std::optional<std::uint8_t> arm_b_bit;
  Basis basis_used = Basis::kZ;

  bool coincidence() const noexcept { return arm_a_clicked && arm_b_clicked; }
  bool any_click() const noexcept { return arm_a_clicked || arm_b_clicked; }

  friend bool operator==(const DetectorRecord&, const DetectorRecord&) = default;
};

/// Splits sig and measures one photon in each non-empty arm in basis b.
/// Threshold detectors do not resolve how many photons reached an arm.
DetectorRecord detect_and_measure(const Signal& sig, Basis b, RandomStream& rng);

}  // namespace qss

#endif  // QSS_PHOTONIC_HPP
