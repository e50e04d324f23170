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

// qss_sim: command-line front end.
//
//   qss_sim run --variant original --m 3 --n 2 --N 100 --seed 7
//   qss_sim run --variant modified --attack trojan-alice1 --f 0.25 --seed 7
//   qss_sim experiment --attack inner-eve --K 3 --trials 50 --seed 1
//   qss_sim detection-curve --attack trojan-alice1 --f-values 0 0.01 0.05
//   qss_sim selftest
//
// Exit codes: 0 completed, 2 protocol aborted, 1 usage or config error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>

#include "qss/analysis.hpp"
#include "qss/cli_config.hpp"
#include "qss/protocol.hpp"
#include "qss/selftest.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitAborted = 2;

fs::path output_dir(const qss::CliOptions& o) {
  if (!o.output_dir.empty()) return o.output_dir;
  if (const char* env = std::getenv("QSS_OUTPUT_DIR"); env && *env) return env;
  return "qss_out";
}

std::ofstream open_output(const fs::path& dir, const char* name) {
  std::ofstream out(dir / name, std::ios::binary);
  if (!out) throw qss::ConfigError("output_dir: cannot write " + (dir / name).string());
  return out;
}

void write_config(const fs::path& dir, const qss::CliOptions& o) {
  auto out = open_output(dir, "config.json");
  out << qss::to_json(o).dump(2) << '\n';
}

std::string rate_line(const qss::RateEstimate& r) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(4) << r.ci.estimate << " [" << r.ci.lower << ", " << r.ci.upper
     << "] (" << r.successes << "/" << r.trials << ")";
  return os.str();
}

int cmd_run(const qss::CliOptions& o, const fs::path& dir) {
  auto adversary = qss::make_adversary(qss::adversary_spec(o), o.run);
  qss::RunResult result = qss::run(o.run, *adversary);
  qss::score_attacker(result.report, result.truth, result.transcript);

  fs::create_directories(dir);
  write_config(dir, o);
  {
    auto out = open_output(dir, "transcript.jsonl");
    result.transcript.write_jsonl(out);
  }
  {
    auto out = open_output(dir, "report.jsonl");
    result.report.write_jsonl(out);
  }

  const auto& r = result.report;
  std::cout << "variant: " << qss::variant_name(o.run.variant) << "  m=" << o.run.m << " n=" << o.run.n
            << " N=" << o.run.N << "  attack: " << o.attack << '\n';
  for (const auto& h : r.hop_checks) {
    if (o.verbosity > 0 || h.verdict == qss::Verdict::kAbort)
      std::cout << "hop " << h.hop << ": samples=" << h.sampled.size() << " coincidences=" << h.coincidences
                << " error_rate=" << h.error_rate << '\n';
  }
  std::cout << "final check: " << r.final_mismatches << "/" << r.final_checked
            << " errors (rate " << r.final_error_rate << ")\n";
  if (r.attacker_report && r.attacker_report->key_accuracy)
    std::cout << "attacker key accuracy: " << *r.attacker_report->key_accuracy << " over "
              << r.attacker_report->key_bits_scored << " bits\n";
  std::cout << "files: " << (dir / "transcript.jsonl").string() << ", " << (dir / "report.jsonl").string()
            << '\n';
  if (!r.completed()) {
    std::cout << "ABORTED at "
              << (r.abort->hop == qss::kFinalCheckHop ? std::string("final check")
                                                      : "hop " + std::to_string(r.abort->hop))
              << ": " << qss::abort_reason_name(r.abort->reason) << '\n';
    return kExitAborted;
  }
  std::cout << "COMPLETED: key length " << r.group1_key.size() << ", keys "
            << (r.group1_key == r.group2_key ? "equal" : "DIFFER") << '\n';
  return kExitOk;
}

int cmd_experiment(const qss::CliOptions& o, const fs::path& dir) {
  const qss::AggregateReport agg = qss::run_experiment(qss::experiment_spec(o));
  fs::create_directories(dir);
  write_config(dir, o);
  {
    auto out = open_output(dir, "aggregate.jsonl");
    agg.write_jsonl(out);
  }
  {
    auto out = open_output(dir, "trials.csv");
    agg.write_csv(out);
  }
  std::cout << "trials: " << agg.trials << "  completed: " << agg.completed << "  adversary: " << agg.adversary
            << '\n';
  for (const auto& [reason, count] : agg.aborted_by_reason) std::cout << "aborted (" << reason << "): " << count << '\n';
  std::cout << "abort frequency:       " << rate_line(agg.abort_frequency) << '\n'
            << "final error rate:      " << rate_line(agg.final_error_rate) << '\n'
            << "key agreement:         " << rate_line(agg.key_agreement) << '\n'
            << "attacker key accuracy: " << rate_line(agg.attacker_key_accuracy) << '\n';
  if (agg.attacker_op_accuracy.trials > 0)
    std::cout << "attacker op accuracy:  " << rate_line(agg.attacker_op_accuracy) << '\n';
  std::cout << "wall clock: " << agg.wall_clock_seconds << " s\n";
  return kExitOk;
}

int cmd_detection_curve(const qss::CliOptions& o, const fs::path& dir) {
  const auto curve = qss::estimate_detection_curve(qss::experiment_spec(o), o.f_values);
  fs::create_directories(dir);
  write_config(dir, o);
  {
    auto out = open_output(dir, "detection_curve.csv");
    qss::write_detection_curve_csv(out, curve);
  }
  for (const auto& p : curve) std::cout << "f=" << p.f << "  abort " << rate_line(p.abort_frequency) << '\n';
  return kExitOk;
}

int cmd_selftest() {
  const qss::SelfTestResult r = qss::run_algebra_selftest();
  for (const auto& f : r.failures) std::cout << "FAIL: " << f << '\n';
  std::cout << (r.ok() ? "selftest passed: " : "selftest FAILED: ") << r.checks << " checks\n";
  return r.ok() ? kExitOk : kExitError;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    const qss::ParsedCli parsed = qss::parse_cli(std::vector<std::string>(argv + 1, argv + argc));
    if (parsed.help) {
      std::cout << parsed.help_text;
      return kExitOk;
    }
    qss::CliOptions o = parsed.options;
    if (o.subcommand == "selftest") return cmd_selftest();

    if (!o.seed_given) {
      o.run.seed = std::random_device{}() | (static_cast<std::uint64_t>(std::random_device{}()) << 32);
      o.seed_given = true;
      std::cout << "seed: " << o.run.seed << " (generated)\n";
    }
    o.run.validate();
    const fs::path dir = output_dir(o);
    if (o.subcommand == "run") return cmd_run(o, dir);
    if (o.subcommand == "experiment") return cmd_experiment(o, dir);
    return cmd_detection_curve(o, dir);
  } catch (const qss::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
}
