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

#include "qss/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <mutex>
#include <ostream>
#include <thread>

#include <json.hpp>

namespace qss {

WilsonInterval wilson_interval(std::size_t successes, std::size_t trials, double z) {
  if (trials == 0) return {0.0, 0.0, 1.0};
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double centre = (p + z2 / (2.0 * n)) / denom;
  const double half = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
  return {p, std::max(0.0, centre - half), std::min(1.0, centre + half)};
}

std::string adversary_name(const AdversarySpec& spec) {
  switch (spec.index()) {
    case 0: return "none";
    case 1: return "trojan-alice1";
    case 2: return "inner-eve";
    case 3: return "intercept-resend";
  }
  return "unknown";
}

std::unique_ptr<ChannelAdversary> make_adversary(const AdversarySpec& spec, const RunConfig& cfg) {
  if (std::holds_alternative<PassThroughSpec>(spec)) return std::make_unique<PassThroughAdversary>();
  if (const auto* t = std::get_if<TrojanAlice1Config>(&spec)) return trojan_alice1(*t);
  if (const auto* e = std::get_if<InnerEveConfig>(&spec)) return inner_eve(*e, cfg.m);
  const auto& ir = std::get<InterceptResendSpec>(spec);
  InterceptResendConfig c{ir.links};
  if (ir.final_links)
    for (const Link& l : final_links(cfg.m, cfg.n))
      if (std::find(c.links.begin(), c.links.end(), l) == c.links.end()) c.links.push_back(l);
  return intercept_resend(c);
}

void score_attacker(RunReport& report, const GroundTruth& truth, const Transcript& transcript) {
  if (!report.attacker_report) return;
  AttackerReport& ar = *report.attacker_report;

  std::vector<std::size_t> positions;
  if (report.completed()) {
    positions = report.key_positions;
  } else {
    for (const auto& e : transcript.events())
      if (const auto* bm = std::get_if<event::BobMeasured>(&e)) positions.push_back(bm->position);
  }
  ar.key_bits_scored = ar.key_bits_correct = 0;
  for (std::size_t k : positions) {
    if (k >= ar.key_guess.size() || ar.key_guess[k] == '?') continue;
    std::uint8_t key = 0;
    for (const auto& party : truth.ops) key ^= party[k].a_bit;
    ++ar.key_bits_scored;
    if (static_cast<std::uint8_t>(ar.key_guess[k] - '0') == key) ++ar.key_bits_correct;
  }
  ar.key_accuracy.reset();
  if (ar.key_bits_scored > 0)
    ar.key_accuracy = static_cast<double>(ar.key_bits_correct) / static_cast<double>(ar.key_bits_scored);

  ar.ops_scored = ar.ops_correct = 0;
  for (const auto& [alice, a_str] : ar.estimated_a) {
    const auto b_it = ar.estimated_b.find(alice);
    if (b_it == ar.estimated_b.end() || alice < 1 || static_cast<std::size_t>(alice) > truth.ops.size())
      continue;
    const auto& ops = truth.ops[static_cast<std::size_t>(alice - 1)];
    for (std::size_t k = 0; k < a_str.size() && k < ops.size(); ++k) {
      if (a_str[k] == '?' || b_it->second[k] == '?') continue;
      ++ar.ops_scored;
      if (a_str[k] - '0' == ops[k].a_bit && b_it->second[k] - '0' == ops[k].b_bit) ++ar.ops_correct;
    }
  }
  ar.op_accuracy.reset();
  if (ar.ops_scored > 0)
    ar.op_accuracy = static_cast<double>(ar.ops_correct) / static_cast<double>(ar.ops_scored);
}

std::uint64_t trial_seed(std::uint64_t base, std::size_t index) {
  return splitmix64(base + 0x9E3779B97F4A7C15ULL * (static_cast<std::uint64_t>(index) + 1));
}

void ExperimentSpec::validate() const {
  base.validate();
  if (trials < 1) throw ConfigError("trials: must be at least 1");
  // Surface adversary configuration errors before any thread starts.
  (void)make_adversary(adversary, base);
}

TrialSummary summarize_trial(std::size_t trial, std::uint64_t seed, const RunResult& result) {
  const RunReport& r = result.report;
  TrialSummary s;
  s.trial = trial;
  s.seed = seed;
  s.abort = r.abort;
  s.final_checked = r.final_checked;
  s.final_mismatches = r.final_mismatches;
  s.final_error_rate = r.final_error_rate;
  s.key_length = r.group1_key.size();
  s.keys_equal = r.completed() && r.group1_key == r.group2_key;
  if (r.attacker_report) {
    s.attacker_scored = r.attacker_report->key_bits_scored;
    s.attacker_correct = r.attacker_report->key_bits_correct;
    s.ops_scored = r.attacker_report->ops_scored;
    s.ops_correct = r.attacker_report->ops_correct;
  }
  for (const auto& h : r.hop_checks) s.hops.push_back(HopTally{h.hop, h.sampled.size(), h.coincidences});
  return s;
}

AggregateReport aggregate(std::vector<TrialSummary> rows, std::string adversary) {
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.trial < b.trial; });
  AggregateReport agg;
  agg.adversary = std::move(adversary);
  agg.trials = rows.size();

  std::size_t checked = 0, mismatches = 0, agree = 0, scored = 0, correct = 0;
  std::size_t ops_scored = 0, ops_correct = 0, aborted = 0, samples = 0, coincidences = 0;
  std::map<int, std::size_t> hop_aborts;
  for (const auto& row : rows) {
    checked += row.final_checked;
    mismatches += row.final_mismatches;
    scored += row.attacker_scored;
    correct += row.attacker_correct;
    ops_scored += row.ops_scored;
    ops_correct += row.ops_correct;
    for (const auto& h : row.hops) {
      samples += h.samples;
      coincidences += h.coincidences;
    }
    if (row.abort) {
      ++aborted;
      ++agg.aborted_by_reason[abort_reason_name(row.abort->reason)];
      ++hop_aborts[row.abort->hop];
    } else {
      ++agg.completed;
      if (row.keys_equal) ++agree;
    }
  }
  agg.final_error_rate = RateEstimate::of(mismatches, checked);
  agg.key_agreement = RateEstimate::of(agree, agg.completed);
  agg.attacker_key_accuracy = RateEstimate::of(correct, scored);
  agg.attacker_op_accuracy = RateEstimate::of(ops_correct, ops_scored);
  agg.abort_frequency = RateEstimate::of(aborted, agg.trials);
  for (const auto& [hop, count] : hop_aborts) agg.per_hop_detection[hop] = RateEstimate::of(count, agg.trials);
  agg.sample_coincidence = RateEstimate::of(coincidences, samples);
  agg.rows = std::move(rows);
  return agg;
}

AggregateReport run_experiment(const ExperimentSpec& spec) {
  spec.validate();
  const auto start = std::chrono::steady_clock::now();

  std::vector<TrialSummary> rows(spec.trials);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;

  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= spec.trials) return;
      try {
        RunConfig cfg = spec.base;
        cfg.seed = trial_seed(spec.base.seed, i);
        auto adversary = make_adversary(spec.adversary, cfg);
        RunResult result = run(cfg, *adversary);
        score_attacker(result.report, result.truth, result.transcript);
        rows[i] = summarize_trial(i, cfg.seed, result);
      } catch (...) {
        std::lock_guard lock(failure_mu);
        if (!failure) failure = std::current_exception();
        next.store(spec.trials);
        return;
      }
    }
  };

  unsigned threads = spec.threads ? spec.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, spec.trials));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  AggregateReport agg = aggregate(std::move(rows), adversary_name(spec.adversary));
  agg.wall_clock_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return agg;
}

std::vector<DetectionPoint> estimate_detection_curve(const ExperimentSpec& spec,
                                                     std::span<const double> f_values) {
  std::vector<DetectionPoint> curve;
  for (double f : f_values) {
    if (!(f >= 0.0 && f < 1.0)) throw ConfigError("f_values: every value must lie in [0, 1)");
    ExperimentSpec point = spec;
    point.base.variant = Variant::kModified;
    point.base.f = f;
    const AggregateReport agg = run_experiment(point);
    curve.push_back(DetectionPoint{f, agg.abort_frequency});
  }
  return curve;
}

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json rate_json(const RateEstimate& r) {
  return ordered_json{{"successes", r.successes},
                      {"trials", r.trials},
                      {"estimate", r.ci.estimate},
                      {"ci_lower", r.ci.lower},
                      {"ci_upper", r.ci.upper}};
}

void emit(std::ostream& os, const char* field, ordered_json value) {
  ordered_json rec;
  rec["field"] = field;
  rec["value"] = std::move(value);
  os << rec.dump() << '\n';
}

}  // namespace

void AggregateReport::write_jsonl(std::ostream& os) const {
  emit(os, "adversary", adversary);
  emit(os, "trials", trials);
  emit(os, "completed", completed);
  ordered_json reasons = ordered_json::object();
  for (const auto& [reason, count] : aborted_by_reason) reasons[reason] = count;
  emit(os, "aborted_by_reason", reasons);
  emit(os, "interval", "wilson-99");
  emit(os, "final_error_rate", rate_json(final_error_rate));
  emit(os, "key_agreement_rate", rate_json(key_agreement));
  emit(os, "attacker_key_accuracy", rate_json(attacker_key_accuracy));
  emit(os, "attacker_op_accuracy", rate_json(attacker_op_accuracy));
  emit(os, "abort_frequency", rate_json(abort_frequency));
  ordered_json hops = ordered_json::object();
  for (const auto& [hop, r] : per_hop_detection)
    hops[hop == kFinalCheckHop ? std::string("final") : std::to_string(hop)] = rate_json(r);
  emit(os, "per_hop_detection", hops);
  emit(os, "sample_coincidence", rate_json(sample_coincidence));
}

void AggregateReport::write_csv(std::ostream& os) const {
  os << "trial,seed,outcome,abort_hop,abort_reason,final_checked,final_mismatches,final_error_rate,"
        "key_length,keys_equal,attacker_scored,attacker_correct,ops_scored,ops_correct\n";
  for (const auto& r : rows) {
    os << r.trial << ',' << r.seed << ',' << (r.abort ? "aborted" : "completed") << ',';
    if (r.abort) {
      os << (r.abort->hop == kFinalCheckHop ? std::string("final") : std::to_string(r.abort->hop)) << ','
         << abort_reason_name(r.abort->reason);
    } else {
      os << ',';
    }
    os << ',' << r.final_checked << ',' << r.final_mismatches << ',' << ordered_json(r.final_error_rate).dump()
       << ',' << r.key_length << ',' << (r.keys_equal ? 1 : 0) << ',' << r.attacker_scored << ','
       << r.attacker_correct << ',' << r.ops_scored << ',' << r.ops_correct << '\n';
  }
}

void write_detection_curve_csv(std::ostream& os, std::span<const DetectionPoint> curve) {
  os << "f,trials,aborts,abort_frequency,ci_lower,ci_upper\n";
  for (const auto& p : curve) {
    os << ordered_json(p.f).dump() << ',' << p.abort_frequency.trials << ',' << p.abort_frequency.successes
       << ',' << ordered_json(p.abort_frequency.ci.estimate).dump() << ','
       << ordered_json(p.abort_frequency.ci.lower).dump() << ','
       << ordered_json(p.abort_frequency.ci.upper).dump() << '\n';
  }
}

}  // namespace qss
