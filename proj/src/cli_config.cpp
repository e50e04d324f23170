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

#include "qss/cli_config.hpp"

#include <fstream>
#include <functional>
#include <sstream>

#include <CLI11.hpp>

namespace qss {

namespace {

using nlohmann::json;

template <class T>
T get_field(const json& j, const char* key) {
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config field '") + key + "': " + e.what());
  }
}

}  // namespace

PhotonState parse_probe(const std::string& s) {
  if (s == "0") return {Basis::kZ, 0, +1};
  if (s == "1") return {Basis::kZ, 1, +1};
  if (s == "+") return {Basis::kX, 0, +1};
  if (s == "-") return {Basis::kX, 1, +1};
  throw ConfigError("probe: expected one of 0, 1, +, -; got '" + s + "'");
}

json to_json(const CliOptions& o) {
  json j;
  j["m"] = o.run.m;
  j["n"] = o.run.n;
  j["N"] = o.run.N;
  j["variant"] = variant_name(o.run.variant);
  j["f"] = o.run.f;
  j["g"] = o.run.g;
  j["epsilon_t"] = o.run.epsilon_t;
  if (o.seed_given) j["seed"] = o.run.seed;
  j["public_sample_announcement"] = o.run.public_sample_announcement;
  j["adversary"] = json{{"kind", o.attack},
                        {"photons_per_signal", o.photons_per_signal},
                        {"eve_index", o.eve_index},
                        {"K", o.K},
                        {"probe", o.probe},
                        {"target_hops", o.target_hops},
                        {"links", o.links}};
  j["trials"] = o.trials;
  j["threads"] = o.threads;
  j["f_values"] = o.f_values;
  j["output_dir"] = o.output_dir;
  j["verbosity"] = o.verbosity;
  return j;
}

CliOptions apply_json(const json& j, CliOptions o) {
  if (!j.is_object()) throw ConfigError("config: top level must be an object");
  for (const auto& [key, value] : j.items()) {
    if (key == "m") o.run.m = get_field<int>(j, "m");
    else if (key == "n") o.run.n = get_field<int>(j, "n");
    else if (key == "N") o.run.N = get_field<std::size_t>(j, "N");
    else if (key == "variant") o.run.variant = parse_variant(get_field<std::string>(j, "variant"));
    else if (key == "f") o.run.f = get_field<double>(j, "f");
    else if (key == "g") o.run.g = get_field<double>(j, "g");
    else if (key == "epsilon_t") o.run.epsilon_t = get_field<double>(j, "epsilon_t");
    else if (key == "seed") {
      o.run.seed = get_field<std::uint64_t>(j, "seed");
      o.seed_given = true;
    } else if (key == "public_sample_announcement")
      o.run.public_sample_announcement = get_field<bool>(j, "public_sample_announcement");
    else if (key == "adversary") {
      if (!value.is_object()) throw ConfigError("config field 'adversary': must be an object");
      for (const auto& [akey, avalue] : value.items()) {
        (void)avalue;
        if (akey == "kind") o.attack = get_field<std::string>(value, "kind");
        else if (akey == "photons_per_signal") o.photons_per_signal = get_field<std::uint32_t>(value, "photons_per_signal");
        else if (akey == "eve_index") o.eve_index = get_field<int>(value, "eve_index");
        else if (akey == "K") o.K = get_field<int>(value, "K");
        else if (akey == "probe") o.probe = get_field<std::string>(value, "probe");
        else if (akey == "target_hops") o.target_hops = get_field<std::vector<int>>(value, "target_hops");
        else if (akey == "links") o.links = get_field<std::vector<std::string>>(value, "links");
        else throw ConfigError("config field 'adversary." + akey + "': unknown key");
      }
    } else if (key == "trials") o.trials = get_field<std::size_t>(j, "trials");
    else if (key == "threads") o.threads = get_field<unsigned>(j, "threads");
    else if (key == "f_values") o.f_values = get_field<std::vector<double>>(j, "f_values");
    else if (key == "output_dir") o.output_dir = get_field<std::string>(j, "output_dir");
    else if (key == "verbosity") o.verbosity = get_field<int>(j, "verbosity");
    else throw ConfigError("config field '" + key + "': unknown key");
  }
  return o;
}

ParsedCli parse_cli(const std::vector<std::string>& args) {
  CLI::App app{"Multiparty-to-multiparty quantum secret sharing simulator", "qss_sim"};
  app.require_subcommand(1);
  app.fallthrough();

  CliOptions flags;
  std::string variant = "original";
  std::string config_path;
  // Each entry copies one parsed flag into the final options when given.
  std::vector<std::pair<CLI::Option*, std::function<void(CliOptions&)>>> setters;
  auto bind = [&](CLI::Option* opt, std::function<void(CliOptions&)> set) { setters.emplace_back(opt, std::move(set)); };

  app.add_option("--config", config_path, "JSON config file; flags override its values");
  bind(app.add_option("--variant", variant, "original | modified")
           ->check(CLI::IsMember({"original", "modified"})),
       [&](CliOptions& o) { o.run.variant = parse_variant(variant); });
  bind(app.add_option("--m", flags.run.m, "members of group 1 (>= 2)"), [&](CliOptions& o) { o.run.m = flags.run.m; });
  bind(app.add_option("--n", flags.run.n, "members of group 2 (>= 1)"), [&](CliOptions& o) { o.run.n = flags.run.n; });
  bind(app.add_option("--N", flags.run.N, "qubits per group-2 member"), [&](CliOptions& o) { o.run.N = flags.run.N; });
  bind(app.add_option("--f", flags.run.f, "hop-check sample fraction"), [&](CliOptions& o) { o.run.f = flags.run.f; });
  bind(app.add_option("--g", flags.run.g, "final-check reveal fraction"), [&](CliOptions& o) { o.run.g = flags.run.g; });
  bind(app.add_option("--epsilon-t", flags.run.epsilon_t, "abort threshold on the error rate"),
       [&](CliOptions& o) { o.run.epsilon_t = flags.run.epsilon_t; });
  bind(app.add_option("--seed", flags.run.seed, "64-bit seed; generated and printed when absent"),
       [&](CliOptions& o) {
         o.run.seed = flags.run.seed;
         o.seed_given = true;
       });
  bind(app.add_option("--public-sample-announcement", flags.run.public_sample_announcement,
                      "post hop-check sample positions on the public board (true/false)"),
       [&](CliOptions& o) { o.run.public_sample_announcement = flags.run.public_sample_announcement; });
  bind(app.add_option("--attack", flags.attack, "none | trojan-alice1 | inner-eve | intercept-resend")
           ->check(CLI::IsMember({"none", "trojan-alice1", "inner-eve", "intercept-resend"})),
       [&](CliOptions& o) { o.attack = flags.attack; });
  bind(app.add_option("--photons", flags.photons_per_signal, "trojan-alice1: photons per signal"),
       [&](CliOptions& o) { o.photons_per_signal = flags.photons_per_signal; });
  bind(app.add_option("--eve-index", flags.eve_index, "inner-eve: which Alice Eve is"),
       [&](CliOptions& o) { o.eve_index = flags.eve_index; });
  bind(app.add_option("--K", flags.K, "inner-eve: probe bundles carry 2^(K+1) photons"),
       [&](CliOptions& o) { o.K = flags.K; });
  bind(app.add_option("--probe", flags.probe, "inner-eve: probe state 0 | 1 | + | -"),
       [&](CliOptions& o) { o.probe = flags.probe; });
  bind(app.add_option("--target-hops", flags.target_hops, "inner-eve: hops to attack (default all)"),
       [&](CliOptions& o) { o.target_hops = flags.target_hops; });
  bind(app.add_option("--links", flags.links, "intercept-resend: 'final' and/or links like A1-A2"),
       [&](CliOptions& o) { o.links = flags.links; });
  bind(app.add_option("--trials", flags.trials, "experiment trials"), [&](CliOptions& o) { o.trials = flags.trials; });
  bind(app.add_option("--threads", flags.threads, "worker threads (0 = all cores)"),
       [&](CliOptions& o) { o.threads = flags.threads; });
  bind(app.add_option("--f-values", flags.f_values, "detection-curve sample fractions"),
       [&](CliOptions& o) { o.f_values = flags.f_values; });
  bind(app.add_option("--output-dir", flags.output_dir, "directory for output files"),
       [&](CliOptions& o) { o.output_dir = flags.output_dir; });
  bind(app.add_option("--verbosity", flags.verbosity, "summary detail level"),
       [&](CliOptions& o) { o.verbosity = flags.verbosity; });

  app.add_subcommand("run", "one protocol run; writes transcript.jsonl and report.jsonl");
  app.add_subcommand("experiment", "seeded batch of runs; writes aggregate.jsonl and trials.csv");
  app.add_subcommand("detection-curve", "abort frequency of the modified variant per sample fraction");
  app.add_subcommand("selftest", "check the state algebra against explicit matrices");

  std::vector<std::string> argv_storage{"qss_sim"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_storage) argv.push_back(s.c_str());

  ParsedCli out;
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out.help = true;
    out.help_text = app.help();
    return out;
  } catch (const CLI::ParseError& e) {
    throw ConfigError(e.what());
  }

  CliOptions o;
  o.subcommand = app.get_subcommands().front()->get_name();
  if (!config_path.empty()) {
    std::ifstream in(config_path);
    if (!in) throw ConfigError("config: cannot read '" + config_path + "'");
    json j;
    try {
      j = json::parse(in);
    } catch (const json::exception& e) {
      throw ConfigError("config: '" + config_path + "' is not valid JSON: " + e.what());
    }
    o = apply_json(j, o);
    o.config_path = config_path;
  }
  for (auto& [opt, set] : setters)
    if (opt->count() > 0) set(o);
  out.options = std::move(o);
  return out;
}

AdversarySpec adversary_spec(const CliOptions& o) {
  if (o.attack == "none") return PassThroughSpec{};
  if (o.attack == "trojan-alice1") return TrojanAlice1Config{o.photons_per_signal};
  if (o.attack == "inner-eve") {
    InnerEveConfig c;
    c.eve_index = o.eve_index;
    c.K = o.K;
    c.probe = parse_probe(o.probe);
    if (!o.target_hops.empty()) c.target_hops = o.target_hops;
    return c;
  }
  if (o.attack == "intercept-resend") {
    InterceptResendSpec s;
    for (const auto& l : o.links) {
      if (l == "final") s.final_links = true;
      else s.links.push_back(parse_link(l));
    }
    return s;
  }
  throw ConfigError("attack: unknown attack '" + o.attack + "'");
}

ExperimentSpec experiment_spec(const CliOptions& o) {
  ExperimentSpec spec;
  spec.base = o.run;
  spec.adversary = adversary_spec(o);
  spec.trials = o.trials;
  spec.threads = o.threads;
  return spec;
}

}  // namespace qss
