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

#ifndef QSS_SELFTEST_HPP
#define QSS_SELFTEST_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace qss {

struct SelfTestResult {
  std::size_t checks = 0;
  std::vector<std::string> failures;

  bool ok() const noexcept { return failures.empty(); }
};

/// Compares the finite state/gate algebra against explicit 2x2 complex
/// matrices: every gate on every state, every composition, associativity
/// over all triples, and the XOR transport law for up to four parties.
SelfTestResult run_algebra_selftest();

}  // namespace qss

#endif  // QSS_SELFTEST_HPP
