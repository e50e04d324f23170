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

#include "qss/selftest.hpp"

#include <array>
#include <cmath>
#include <complex>

#include "qss/photonic.hpp"
#include "qss/protocol.hpp"

namespace qss {

namespace {

using cd = std::complex<double>;
using Vec = std::array<cd, 2>;
using Mat = std::array<std::array<cd, 2>, 2>;

constexpr double kTol = 1e-12;
const double kR = 1.0 / std::sqrt(2.0);

Vec vec_of(const PhotonState& s) {
  Vec v = s.basis == Basis::kZ ? (s.bit ? Vec{0.0, 1.0} : Vec{1.0, 0.0})
                               : (s.bit ? Vec{kR, -kR} : Vec{kR, kR});
  for (auto& x : v) x *= static_cast<double>(s.sign);
  return v;
}

Mat mat_of(const ProtocolUnitary& u) {
  Mat m{};
  switch (u.gate) {
    case Gate::kI: m = {{{1.0, 0.0}, {0.0, 1.0}}}; break;
    case Gate::kU: m = {{{0.0, 1.0}, {-1.0, 0.0}}}; break;
    case Gate::kH: m = {{{kR, kR}, {kR, -kR}}}; break;
    case Gate::kHbar: m = {{{-kR, kR}, {kR, kR}}}; break;
  }
  for (auto& row : m)
    for (auto& x : row) x *= static_cast<double>(u.sign);
  return m;
}

Vec mul(const Mat& m, const Vec& v) {
  return {m[0][0] * v[0] + m[0][1] * v[1], m[1][0] * v[0] + m[1][1] * v[1]};
}

Mat mul(const Mat& a, const Mat& b) {
  Mat r{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
  return r;
}

bool near(const Vec& a, const Vec& b) { return std::abs(a[0] - b[0]) < kTol && std::abs(a[1] - b[1]) < kTol; }

bool near(const Mat& a, const Mat& b) {
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      if (std::abs(a[i][j] - b[i][j]) >= kTol) return false;
  return true;
}

}  // namespace

SelfTestResult run_algebra_selftest() {
  SelfTestResult r;
  auto expect = [&](bool cond, const std::string& what) {
    ++r.checks;
    if (!cond) r.failures.push_back(what);
  };

  for (const auto& u : all_unitaries())
    for (const auto& s : all_states())
      expect(near(vec_of(apply_unitary(u, s)), mul(mat_of(u), vec_of(s))),
             "apply " + to_string(u) + " on " + to_string(s));

  for (const auto& a : all_unitaries())
    for (const auto& b : all_unitaries())
      expect(near(mat_of(compose(a, b)), mul(mat_of(a), mat_of(b))),
             "compose " + to_string(a) + " . " + to_string(b));

  for (const auto& a : all_unitaries())
    for (const auto& b : all_unitaries())
      for (const auto& c : all_unitaries())
        expect(compose(compose(a, b), c) == compose(a, compose(b, c)),
               "associativity " + to_string(a) + " " + to_string(b) + " " + to_string(c));

  // Transport law: every assignment of (a_i, b_i) for m = 1..4 parties.
  for (int m = 1; m <= 4; ++m) {
    const unsigned configs = 1u << (2 * m);
    for (unsigned bits = 0; bits < configs; ++bits) {
      std::vector<PartyOp> ops;
      std::uint8_t ax = 0, bx = 0;
      for (int i = 0; i < m; ++i) {
        PartyOp op{static_cast<std::uint8_t>((bits >> (2 * i)) & 1),
                   static_cast<std::uint8_t>((bits >> (2 * i + 1)) & 1)};
        ax ^= op.a_bit;
        bx ^= op.b_bit;
        ops.push_back(op);
      }
      Vec v = vec_of(prepared_state(ops[0]));
      for (int i = 1; i < m; ++i) {
        if (ops[static_cast<std::size_t>(i)].a_bit) v = mul(mat_of({Gate::kU, +1}), v);
        if (ops[static_cast<std::size_t>(i)].b_bit) v = mul(mat_of({Gate::kH, +1}), v);
      }
      const PhotonState target{basis_from_bit(bx), ax, +1};
      const bool matches = near(v, vec_of(target)) || near(v, vec_of(PhotonState{target.basis, target.bit, -1}));
      const PhotonState fast = transport(prepared_state(ops[0]), std::span(ops).subspan(1));
      expect(matches && near(vec_of(fast), v), "transport law, m=" + std::to_string(m) + " config " + std::to_string(bits));
    }
  }
  return r;
}

}  // namespace qss
