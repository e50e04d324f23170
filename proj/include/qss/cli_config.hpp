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

#ifndef QSS_CLI_CONFIG_HPP
#define QSS_CLI_CONFIG_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qss/analysis.hpp"
#include "qss/protocol.hpp"

namespace qss {

/// Everything the command line can set. Field names match the keys of the
/// JSON config file.
struct CliOptions {
  std::string subcommand = "run";
  std::optional<std::string> config_path;

  RunConfig run;
  bool seed_given = false;

  /// none | trojan-alice1 | inner-eve | intercept-resend
  std::string attack = "none";
  std::uint32_t photons_per_signal = 2;
  int eve_index = 2;
  int K = 3;
  /// One of "0", "1", "+", "-".
  std::string probe = "0";
  std::vector<int> target_hops;
  /// Intercept-resend targets: "final" or FROM-TO pairs such as "A1-A2".
  std::vector<std::string> links{"final"};

  std::size_t trials = 100;
  unsigned threads = 0;
  std::vector<double> f_values{0.0, 0.05, 0.1, 0.25};

  std::string output_dir;
  int verbosity = 0;

  friend bool operator==(const CliOptions&, const CliOptions&) = default;
};

nlohmann::json to_json(const CliOptions& o);

/// Overlays the keys present in `j` onto `base`. Unknown keys and type
/// mismatches throw ConfigError naming the key.
CliOptions apply_json(const nlohmann::json& j, CliOptions base);

/// Parses argv. A --config file is applied first and explicit flags win
/// over it. Throws ConfigError on bad values; `help` is set when usage was
/// requested, with the text in `help_text`.
struct ParsedCli {
  CliOptions options;
  bool help = false;
  std::string help_text;
};
ParsedCli parse_cli(const std::vector<std::string>& args);

PhotonState parse_probe(const std::string& s);
AdversarySpec adversary_spec(const CliOptions& o);
ExperimentSpec experiment_spec(const CliOptions& o);

}  // namespace qss

#endif  // QSS_CLI_CONFIG_HPP
