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

#include "qss/attacks.hpp"

#include <algorithm>

namespace qss {

namespace {

bool unanimous(std::span<const std::uint8_t> bits) {
  return std::all_of(bits.begin(), bits.end(), [&](std::uint8_t b) { return b == bits.front(); });
}

// The gate whose image of `probe` is the eigenstate (basis, bit).
Gate gate_for_image(const PhotonState& probe, Basis basis, std::uint8_t bit) {
  for (Gate g : {Gate::kI, Gate::kU, Gate::kH, Gate::kHbar}) {
    const PhotonState img = apply_unitary(ProtocolUnitary{g, +1}, probe);
    if (img.basis == basis && img.bit == bit) return g;
  }
  throw InvalidProbe("no protocol gate maps the probe to the observed eigenstate");
}

template <class T>
void ensure_size(std::vector<T>& v, std::size_t pos) {
  if (v.size() <= pos) v.resize(pos + 1);
}

}  // namespace

OpClassification classify_operation(std::span<const std::uint8_t> z_outcomes,
                                    std::span<const std::uint8_t> x_outcomes,
                                    const PhotonState& probe) {
  if (z_outcomes.size() != x_outcomes.size())
    throw InvalidProbe("classify_operation: Z and X groups differ in size");
  if (z_outcomes.size() < 2) throw InvalidProbe("classify_operation: need at least 2 outcomes per basis");
  const bool z_same = unanimous(z_outcomes);
  const bool x_same = unanimous(x_outcomes);
  if (!z_same && !x_same)
    throw InvalidProbe("classify_operation: neither basis group is unanimous");
  OpClassification out;
  out.ambiguous = z_same && x_same;
  if (z_same)
    out.guess = gate_for_image(probe, Basis::kZ, z_outcomes.front());
  else
    out.guess = gate_for_image(probe, Basis::kX, x_outcomes.front());
  return out;
}

// ---------------------------------------------------------------------------

TrojanAlice1::TrojanAlice1(TrojanAlice1Config cfg) : cfg_(cfg) {
  if (cfg_.photons_per_signal < 1) throw ConfigError("photons_per_signal: must be at least 1");
}

void TrojanAlice1::on_prepare(std::span<Signal> signals, RandomStream&) {
  for (auto& s : signals)
    if (s.photon_count > 0) s.photon_count = cfg_.photons_per_signal;
}

Signal TrojanAlice1::on_forward(const Link& link, Signal sig, RandomStream& rng) {
  if (!link.into_group2() || sig.photon_count < 2) return sig;
  // Cascade of splitters until one photon is isolated in one arm and at
  // least one remains in the other.
  for (;;) {
    const SplitSignal arms = pns_split(sig, rng);
    if (arms.arm_a.photon_count > 0 && arms.arm_b.photon_count > 0) {
      ensure_size(stored_, sig.position);
      stored_[sig.position] = arms.arm_a.state;
      return Signal{sig.position, 1, arms.arm_b.state};
    }
  }
}

std::optional<AttackerReport> TrojanAlice1::finalize(const Board& board, RandomStream& rng) {
  AttackerReport r;
  r.attack = "trojan-alice1";
  r.key_guess.assign(board.total_positions(), '?');
  if (board.announced) {
    for (std::size_t k = 0; k < stored_.size() && k < r.key_guess.size(); ++k) {
      if (!stored_[k]) continue;
      const auto basis = board.receiver_basis(k);
      if (!basis) continue;
      r.key_guess[k] = static_cast<char>('0' + measure(*stored_[k], *basis, rng).outcome);
    }
  }
  return r;
}

// ---------------------------------------------------------------------------

InnerEve::InnerEve(InnerEveConfig cfg, int m) : cfg_(std::move(cfg)) {
  if (cfg_.eve_index < 2 || cfg_.eve_index > m)
    throw ConfigError("eve_index: must lie in [2, m], got " + std::to_string(cfg_.eve_index));
  if (cfg_.K < 1 || cfg_.K > 20) throw ConfigError("K: must lie in [1, 20]");
  if (cfg_.target_hops) {
    for (int i : *cfg_.target_hops) {
      if (i < 2 || i > m || i == cfg_.eve_index)
        throw ConfigError("target_hops: hop " + std::to_string(i) + " is not attackable");
      targets_.push_back(i);
    }
    std::sort(targets_.begin(), targets_.end());
    targets_.erase(std::unique(targets_.begin(), targets_.end()), targets_.end());
  } else {
    for (int i = 2; i <= m; ++i)
      if (i != cfg_.eve_index) targets_.push_back(i);
  }
}

bool InnerEve::is_target(int alice) const noexcept {
  return std::binary_search(targets_.begin(), targets_.end(), alice);
}

void InnerEve::on_insider_ops(int alice, std::span<const PartyOp> ops) {
  if (alice == cfg_.eve_index) own_ops_.assign(ops.begin(), ops.end());
}

Signal InnerEve::on_forward(const Link& link, Signal sig, RandomStream& rng) {
  const std::size_t pos = sig.position;
  Signal current = sig;

  if (link.from.group == Group::kAlice && is_target(link.from.index)) {
    ensure_size(held_, pos);
    if (held_[pos]) {
      Signal genuine = *held_[pos];
      held_[pos].reset();
      const std::uint32_t half = sig.photon_count / 2;
      if (half >= 2) {
        // Identical photons: any splitter cascade yields the same statistics
        // as dividing the bundle into two equal halves.
        std::vector<std::uint8_t> z(half), x(half);
        for (auto& b : z) b = measure(sig.state, Basis::kZ, rng).outcome;
        for (auto& b : x) b = measure(sig.state, Basis::kX, rng).outcome;
        const PartyOp est = classify_operation(z, x, cfg_.probe).as_party_op();
        auto& row = estimates_[link.from.index];
        ensure_size(row, pos);
        row[pos] = est;
        if (genuine.photon_count > 0) genuine.state = apply_unitary(est.unitary(), genuine.state);
      }
      current = genuine;
    }
  }

  if (link.to.group == Group::kAlice && is_target(link.to.index)) {
    ensure_size(held_, pos);
    held_[pos] = current;
    return Signal{pos, cfg_.bundle_size(), cfg_.probe};
  }
  return current;
}

std::optional<AttackerReport> InnerEve::finalize(const Board& board, RandomStream&) {
  const std::size_t total = board.total_positions();
  AttackerReport r;
  r.attack = "inner-eve";
  for (int i : targets_) {
    std::string a(total, '?'), b(total, '?');
    if (auto it = estimates_.find(i); it != estimates_.end()) {
      for (std::size_t k = 0; k < it->second.size() && k < total; ++k) {
        if (!it->second[k]) continue;
        a[k] = static_cast<char>('0' + it->second[k]->a_bit);
        b[k] = static_cast<char>('0' + it->second[k]->b_bit);
      }
    }
    r.estimated_a[i] = std::move(a);
    r.estimated_b[i] = std::move(b);
  }

  // Key bit is the XOR of every a-bit. Eve has her own and her estimates;
  // A_1 is never probed, so she takes a_1 = 0.
  r.key_guess.assign(total, '?');
  const int m = board.m;
  for (std::size_t k = 0; k < total; ++k) {
    std::uint8_t acc = 0;
    bool known = true;
    for (int i = 2; i <= m && known; ++i) {
      if (i == cfg_.eve_index) {
        if (k < own_ops_.size()) acc ^= own_ops_[k].a_bit;
        else known = false;
      } else {
        const char c = r.estimated_a.count(i) ? r.estimated_a[i][k] : '?';
        if (c == '?') known = false;
        else acc ^= static_cast<std::uint8_t>(c - '0');
      }
    }
    if (known) r.key_guess[k] = static_cast<char>('0' + acc);
  }
  return r;
}

// ---------------------------------------------------------------------------

InterceptResend::InterceptResend(InterceptResendConfig cfg) : cfg_(std::move(cfg)) {}

Signal InterceptResend::on_forward(const Link& link, Signal sig, RandomStream& rng) {
  if (sig.photon_count == 0) return sig;
  if (std::find(cfg_.links.begin(), cfg_.links.end(), link) == cfg_.links.end()) return sig;
  const Basis basis = basis_from_bit(rng.bit());
  const auto r = measure(sig.state, basis, rng);
  ++intercepted_;
  if (link.into_group2()) {
    ensure_size(group2_observations_, sig.position);
    group2_observations_[sig.position] = Observation{basis, r.outcome};
  }
  return Signal{sig.position, 1, r.post};
}

std::optional<AttackerReport> InterceptResend::finalize(const Board& board, RandomStream&) {
  AttackerReport r;
  r.attack = "intercept-resend";
  r.key_guess.assign(board.total_positions(), '?');
  for (std::size_t k = 0; k < group2_observations_.size() && k < r.key_guess.size(); ++k) {
    const auto& obs = group2_observations_[k];
    if (!obs) continue;
    const auto basis = board.receiver_basis(k);
    if (basis && *basis == obs->basis) r.key_guess[k] = static_cast<char>('0' + obs->bit);
  }
  return r;
}

std::vector<Link> final_links(int m, int n) {
  std::vector<Link> out;
  for (int j = 1; j <= n; ++j) out.push_back(Link{PartyId::alice(m), PartyId::bob(j)});
  return out;
}

std::unique_ptr<ChannelAdversary> trojan_alice1(const TrojanAlice1Config& cfg) {
  return std::make_unique<TrojanAlice1>(cfg);
}

std::unique_ptr<ChannelAdversary> inner_eve(const InnerEveConfig& cfg, int m) {
  return std::make_unique<InnerEve>(cfg, m);
}

std::unique_ptr<ChannelAdversary> intercept_resend(const InterceptResendConfig& cfg) {
  return std::make_unique<InterceptResend>(cfg);
}

}  // namespace qss
