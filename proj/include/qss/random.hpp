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

#ifndef QSS_RANDOM_HPP
#define QSS_RANDOM_HPP

#include <cstdint>
#include <random>

namespace qss {

/// Finalizer of the SplitMix64 generator. A bijection on 64-bit words, so
/// distinct counters always map to distinct outputs.
std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Role of a sub-stream inside one simulated run. Every role draws from its
/// own stream so that enabling one protocol feature never shifts the random
/// choices of another.
enum class StreamTag : std::uint64_t {
  kAliceOps = 1,
  kHopCheck = 2,
  kBobMeasure = 3,
  kFinalCheck = 4,
  kAdversary = 5,
  kTrial = 6,
  kScratch = 7,
};

/// Seeded pseudo-random stream. The engine is std::mt19937_64, whose output
/// sequence is fixed by the standard; all derived quantities are computed
/// here rather than through <random> distributions, whose algorithms are
/// implementation-defined.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

  /// Stream for (seed, tag, index), independent of every other triple.
  static RandomStream derive(std::uint64_t seed, StreamTag tag, std::uint64_t index);

  std::uint64_t next_u64() { return engine_(); }

  /// Fair coin.
  std::uint8_t bit() { return static_cast<std::uint8_t>(engine_() >> 63); }

  /// Uniform on [0, 1) with 53 bits of resolution.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// True with probability p.
  bool bernoulli(double p) { return uniform01() < p; }

  /// Uniform integer on [0, bound). bound must be positive.
  std::uint64_t uniform_index(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

}  // namespace qss

#endif  // QSS_RANDOM_HPP
