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

#include "qss/photonic.hpp"

namespace qss {

namespace {

// A state (basis b, bit a, sign s) is the vector s * (-1)^a * H^b U^a |0>.
// Writing both states and operations in H^h U^u form reduces everything to
// the two relations U H = -H U and U U = -I.
constexpr int parity_sign(unsigned k) noexcept { return (k & 1) ? -1 : +1; }

}  // namespace

char basis_char(Basis b) noexcept { return b == Basis::kZ ? 'Z' : 'X'; }

std::string to_string(const PhotonState& s) {
  static constexpr const char* kNames[2][2] = {{"|0>", "|1>"}, {"|+>", "|->"}};
  std::string out = s.sign < 0 ? "-" : "+";
  out += kNames[basis_bit(s.basis)][s.bit & 1];
  return out;
}

const char* gate_name(Gate g) noexcept {
  switch (g) {
    case Gate::kI: return "I";
    case Gate::kU: return "U";
    case Gate::kH: return "H";
    case Gate::kHbar: return "Hbar";
  }
  return "?";
}

std::string to_string(const ProtocolUnitary& u) {
  return std::string(u.sign < 0 ? "-" : "+") + gate_name(u.gate);
}

const std::array<PhotonState, 8>& all_states() noexcept {
  static const std::array<PhotonState, 8> kStates = [] {
    std::array<PhotonState, 8> out{};
    std::size_t i = 0;
    for (Basis b : {Basis::kZ, Basis::kX})
      for (std::uint8_t bit : {0, 1})
        for (std::int8_t sign : {+1, -1}) out[i++] = PhotonState{b, bit, sign};
    return out;
  }();
  return kStates;
}

const std::array<ProtocolUnitary, 8>& all_unitaries() noexcept {
  static const std::array<ProtocolUnitary, 8> kOps = [] {
    std::array<ProtocolUnitary, 8> out{};
    std::size_t i = 0;
    for (Gate g : {Gate::kI, Gate::kU, Gate::kH, Gate::kHbar})
      for (std::int8_t sign : {+1, -1}) out[i++] = ProtocolUnitary{g, sign};
    return out;
  }();
  return kOps;
}

PhotonState apply_unitary(const ProtocolUnitary& u, const PhotonState& s) noexcept {
  const unsigned h = h_power(u.gate);
  const unsigned up = u_power(u.gate);
  const unsigned b = basis_bit(s.basis);
  const unsigned a = s.bit & 1;
  // H^h U^up H^b U^a = (-1)^(up*b) (-1)^(up*a) H^(h^b) U^(up^a)
  const unsigned a_out = up ^ a;
  const int sign = u.sign * s.sign * parity_sign(a + up * b + up * a + a_out);
  return PhotonState{basis_from_bit(static_cast<std::uint8_t>(h ^ b)),
                     static_cast<std::uint8_t>(a_out), static_cast<std::int8_t>(sign)};
}

ProtocolUnitary compose(const ProtocolUnitary& outer, const ProtocolUnitary& inner) noexcept {
  const unsigned h1 = h_power(outer.gate), u1 = u_power(outer.gate);
  const unsigned h2 = h_power(inner.gate), u2 = u_power(inner.gate);
  const int sign = outer.sign * inner.sign * parity_sign(u1 * h2 + u1 * u2);
  return ProtocolUnitary{gate_from_powers(static_cast<std::uint8_t>(h1 ^ h2),
                                          static_cast<std::uint8_t>(u1 ^ u2)),
                         static_cast<std::int8_t>(sign)};
}

MeasureResult measure(const PhotonState& s, Basis b, RandomStream& rng) {
  const std::uint8_t outcome = (s.basis == b) ? s.bit : rng.bit();
  return MeasureResult{outcome, PhotonState{b, outcome, +1}};
}

double outcome_probability(const PhotonState& s, Basis b, std::uint8_t outcome) noexcept {
  if (s.basis != b) return 0.5;
  return s.bit == outcome ? 1.0 : 0.0;
}

SplitSignal pns_split(const Signal& sig, RandomStream& rng) {
  std::uint32_t to_a = 0;
  for (std::uint32_t k = 0; k < sig.photon_count; ++k) to_a += rng.bit();
  return SplitSignal{Signal{sig.position, to_a, sig.state},
                     Signal{sig.position, sig.photon_count - to_a, sig.state}};
}

DetectorRecord detect_and_measure(const Signal& sig, Basis b, RandomStream& rng) {
  const SplitSignal arms = pns_split(sig, rng);
  DetectorRecord rec;
  rec.basis_used = b;
  if (arms.arm_a.photon_count > 0) {
    rec.arm_a_clicked = true;
    rec.arm_a_bit = measure(arms.arm_a.state, b, rng).outcome;
  }
  if (arms.arm_b.photon_count > 0) {
    rec.arm_b_clicked = true;
    rec.arm_b_bit = measure(arms.arm_b.state, b, rng).outcome;
  }
  return rec;
}

}  // namespace qss
