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

#include "qss/types.hpp"

#include <charconv>

namespace qss {

const char* variant_name(Variant v) noexcept {
  return v == Variant::kOriginal ? "original" : "modified";
}

Variant parse_variant(const std::string& s) {
  if (s == "original") return Variant::kOriginal;
  if (s == "modified") return Variant::kModified;
  throw ConfigError("variant: expected 'original' or 'modified', got '" + s + "'");
}

const char* abort_reason_name(AbortReason r) noexcept {
  switch (r) {
    case AbortReason::kMultiPhoton: return "multi-photon";
    case AbortReason::kErrorRate: return "error-rate";
    case AbortReason::kProtocolViolation: return "protocol-violation";
  }
  return "unknown";
}

std::string to_string(const PartyId& p) {
  return (p.group == Group::kAlice ? "A" : "B") + std::to_string(p.index);
}

PartyId parse_party(const std::string& s) {
  if (s.size() < 2 || (s[0] != 'A' && s[0] != 'B'))
    throw ConfigError("party: expected A<i> or B<j>, got '" + s + "'");
  int idx = 0;
  const auto [ptr, ec] = std::from_chars(s.data() + 1, s.data() + s.size(), idx);
  if (ec != std::errc{} || ptr != s.data() + s.size() || idx < 1)
    throw ConfigError("party: bad index in '" + s + "'");
  return {s[0] == 'A' ? Group::kAlice : Group::kBob, idx};
}

std::string to_string(const Link& l) { return to_string(l.from) + "-" + to_string(l.to); }

Link parse_link(const std::string& s) {
  const auto dash = s.find('-');
  if (dash == std::string::npos) throw ConfigError("link: expected FROM-TO, got '" + s + "'");
  return {parse_party(s.substr(0, dash)), parse_party(s.substr(dash + 1))};
}

}  // namespace qss
