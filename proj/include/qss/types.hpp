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

#ifndef QSS_TYPES_HPP
#define QSS_TYPES_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include "qss/photonic.hpp"

namespace qss {

/// Invalid configuration or precondition violation by the caller.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Variant : std::uint8_t { kOriginal, kModified };

const char* variant_name(Variant v) noexcept;
Variant parse_variant(const std::string& s);

enum class AbortReason : std::uint8_t { kMultiPhoton, kErrorRate, kProtocolViolation };

const char* abort_reason_name(AbortReason r) noexcept;

/// One party's choice at one position: a selects I or U, b selects I or H.
/// The applied unitary is H^b after U^a.
struct PartyOp {
  std::uint8_t a_bit = 0;
  std::uint8_t b_bit = 0;

  ProtocolUnitary unitary() const noexcept { return ProtocolUnitary{gate_from_powers(b_bit, a_bit), +1}; }

  friend bool operator==(const PartyOp&, const PartyOp&) = default;
};

enum class Group : std::uint8_t { kAlice, kBob };

/// Party in group 1 (Alice 1..m) or group 2 (Bob 1..n). Indices are 1-based.
struct PartyId {
  Group group = Group::kAlice;
  int index = 1;

  static PartyId alice(int i) { return {Group::kAlice, i}; }
  static PartyId bob(int j) { return {Group::kBob, j}; }

  friend bool operator==(const PartyId&, const PartyId&) = default;
};

/// "A3", "B1".
std::string to_string(const PartyId& p);
PartyId parse_party(const std::string& s);

/// Directed quantum link.
struct Link {
  PartyId from;
  PartyId to;

  bool into_group2() const noexcept { return to.group == Group::kBob; }

  friend bool operator==(const Link&, const Link&) = default;
};

/// "A1-A2", "A3-B2".
std::string to_string(const Link& l);
Link parse_link(const std::string& s);

}  // namespace qss

#endif  // QSS_TYPES_HPP
