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

#ifndef QSS_TRANSCRIPT_HPP
#define QSS_TRANSCRIPT_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qss/photonic.hpp"
#include "qss/types.hpp"

namespace qss {

/// Hop value used by aborts raised in the group-2 check rather than by a
/// checking Alice.
inline constexpr int kFinalCheckHop = 0;

namespace event {

struct Prepared {
  std::size_t position;
  PhotonState state;
};
struct Forwarded {
  PartyId from;
  PartyId to;
  std::size_t position;
  std::uint32_t photon_count;
};
struct SampledByAlice {
  int alice;
  std::size_t position;
  DetectorRecord record;
};
struct AnnouncedBasisStrings {
  PartyId party;
  std::string bits;
};
struct RevealedForCheck {
  PartyId party;
  std::size_t position;
  std::uint8_t bit;
};
struct BobMeasured {
  int bob;
  std::size_t position;
  Basis basis;
  std::uint8_t outcome;
};
struct Abort {
  int hop;
  AbortReason reason;
};
struct Completed {};

}  // namespace event

using Event = std::variant<event::Prepared, event::Forwarded, event::SampledByAlice,
                           event::AnnouncedBasisStrings, event::RevealedForCheck,
                           event::BobMeasured, event::Abort, event::Completed>;

/// Ordered log of everything that crossed a quantum or classical channel.
class Transcript {
 public:
  void push(Event e) { events_.push_back(std::move(e)); }
  const std::vector<Event>& events() const noexcept { return events_; }
  std::size_t size() const noexcept { return events_.size(); }
  bool empty() const noexcept { return events_.empty(); }

  /// One JSON object per line, fixed key order. See docs/records.md.
  void write_jsonl(std::ostream& os) const;
  std::string to_jsonl() const;

 private:
  std::vector<Event> events_;
};

/// Checks the structural invariants every transcript must satisfy:
/// announcements only after the last delivery into group 2, no hop samples
/// in the original variant, and exactly one terminal event at the end.
/// Returns a description of the first violation found.
std::optional<std::string> find_invariant_violation(const Transcript& t, Variant variant);

}  // namespace qss

#endif  // QSS_TRANSCRIPT_HPP
