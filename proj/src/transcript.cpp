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

#include "qss/transcript.hpp"

#include <ostream>
#include <sstream>

#include <json.hpp>

namespace qss {

namespace {

using ordered_json = nlohmann::ordered_json;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

ordered_json optional_bit(const std::optional<std::uint8_t>& b) {
  return b ? ordered_json(static_cast<int>(*b)) : ordered_json(nullptr);
}

ordered_json to_record(const Event& e) {
  return std::visit(
      Overloaded{
          [](const event::Prepared& ev) {
            return ordered_json{{"event", "Prepared"},
                                {"position", ev.position},
                                {"basis", std::string(1, basis_char(ev.state.basis))},
                                {"bit", static_cast<int>(ev.state.bit)},
                                {"sign", static_cast<int>(ev.state.sign)}};
          },
          [](const event::Forwarded& ev) {
            return ordered_json{{"event", "Forwarded"},
                                {"from", to_string(ev.from)},
                                {"to", to_string(ev.to)},
                                {"position", ev.position},
                                {"photons", ev.photon_count}};
          },
          [](const event::SampledByAlice& ev) {
            return ordered_json{{"event", "SampledByAlice"},
                                {"alice", ev.alice},
                                {"position", ev.position},
                                {"basis", std::string(1, basis_char(ev.record.basis_used))},
                                {"a_clicked", ev.record.arm_a_clicked},
                                {"a_bit", optional_bit(ev.record.arm_a_bit)},
                                {"b_clicked", ev.record.arm_b_clicked},
                                {"b_bit", optional_bit(ev.record.arm_b_bit)}};
          },
          [](const event::AnnouncedBasisStrings& ev) {
            return ordered_json{{"event", "AnnouncedBasisStrings"},
                                {"party", to_string(ev.party)},
                                {"bits", ev.bits}};
          },
          [](const event::RevealedForCheck& ev) {
            return ordered_json{{"event", "RevealedForCheck"},
                                {"party", to_string(ev.party)},
                                {"position", ev.position},
                                {"bit", static_cast<int>(ev.bit)}};
          },
          [](const event::BobMeasured& ev) {
            return ordered_json{{"event", "BobMeasured"},
                                {"bob", ev.bob},
                                {"position", ev.position},
                                {"basis", std::string(1, basis_char(ev.basis))},
                                {"outcome", static_cast<int>(ev.outcome)}};
          },
          [](const event::Abort& ev) {
            return ordered_json{
                {"event", "Abort"},
                {"hop", ev.hop == kFinalCheckHop ? ordered_json("final") : ordered_json(ev.hop)},
                {"reason", abort_reason_name(ev.reason)}};
          },
          [](const event::Completed&) { return ordered_json{{"event", "Completed"}}; },
      },
      e);
}

}  // namespace

void Transcript::write_jsonl(std::ostream& os) const {
  for (const auto& e : events_) os << to_record(e).dump() << '\n';
}

std::string Transcript::to_jsonl() const {
  std::ostringstream os;
  write_jsonl(os);
  return os.str();
}

std::optional<std::string> find_invariant_violation(const Transcript& t, Variant variant) {
  const auto& evs = t.events();
  std::size_t last_into_group2 = 0;
  bool any_into_group2 = false;
  std::size_t first_announcement = evs.size();
  std::size_t terminal_count = 0;
  for (std::size_t i = 0; i < evs.size(); ++i) {
    const Event& e = evs[i];
    if (const auto* fw = std::get_if<event::Forwarded>(&e); fw && fw->to.group == Group::kBob) {
      last_into_group2 = i;
      any_into_group2 = true;
    }
    if (std::holds_alternative<event::AnnouncedBasisStrings>(e) && first_announcement == evs.size())
      first_announcement = i;
    if (variant == Variant::kOriginal && std::holds_alternative<event::SampledByAlice>(e))
      return "SampledByAlice event at index " + std::to_string(i) + " in original variant";
    if (std::holds_alternative<event::Abort>(e) || std::holds_alternative<event::Completed>(e))
      ++terminal_count;
  }
  if (any_into_group2 && first_announcement < last_into_group2)
    return "basis announcement at index " + std::to_string(first_announcement) +
           " precedes delivery into group 2 at index " + std::to_string(last_into_group2);
  if (terminal_count != 1) return "expected exactly one terminal event, found " + std::to_string(terminal_count);
  const Event& last = evs.back();
  if (!std::holds_alternative<event::Abort>(last) && !std::holds_alternative<event::Completed>(last))
    return "terminal event is not last";
  return std::nullopt;
}

}  // namespace qss
