// Copyright 2026 The wiretap Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: rate-curve, validate, dist-check, selftest.

#include <CLI11.hpp>
#include <exception>
#include <iostream>
#include <map>
#include <string>

#include "wiretap/app.hpp"
#include "wiretap/errors.hpp"

namespace {

using wiretap::app::SweepConfig;

struct Flags {
  std::map<std::string, std::string> values;
  bool clip = false;
  bool fixed_codebook = false;
  std::string config_path;
};

void add_sweep_flags(CLI::App* cmd, Flags& flags) {
  const auto opt = [&](const std::string& name, const std::string& help) {
    cmd->add_option_function<std::string>(
        "--" + name, [&flags, name](const std::string& v) { flags.values[name] = v; }, help);
  };
  opt("nt", "Comma-separated antenna counts (= users), e.g. 2,3,5");
  opt("bits", "Comma-separated feedback bits per user");
  opt("alpha", "Comma-separated relative eavesdropper path losses");
  opt("snr", "SNR grid in dB as start:stop:step (SNR = 10 log10(P / sigma^2), sigma^2 = 1)");
  opt("trials", "Monte Carlo trials per point (dist-check: samples per link)");
  opt("seed", "64-bit seed; all randomness derives from it");
  opt("workers", "Worker threads (results do not depend on this)");
  opt("mode", "full | qca | perfect | analytic-only");
  opt("regime", "general | il (interference-limited) | nl (noise-limited)");
  opt("out", "Output path (CSV for rate-curve, JSON report otherwise)");
  opt("mc-sigma", "validate: allowed |MC - closed form| in standard errors");
  cmd->add_flag("--clip", flags.clip, "Clip each user's secrecy rate at zero");
  cmd->add_flag("--fixed-codebook", flags.fixed_codebook,
                "full mode: one codebook per user for the whole run");
  cmd->add_option("--config", flags.config_path, "key = value file; flags override it");
}

SweepConfig resolve(SweepConfig config, const Flags& flags) {
  if (!flags.config_path.empty()) {
    for (const auto& [key, value] : wiretap::app::read_config_file(flags.config_path)) {
      wiretap::app::apply_setting(config, key, value);
    }
  }
  for (const auto& [key, value] : flags.values) wiretap::app::apply_setting(config, key, value);
  if (flags.clip) config.clip = true;
  if (flags.fixed_codebook) config.fixed_codebook = true;
  config.validate();
  return config;
}

int emit_report(const wiretap::app::Report& report, const SweepConfig& config) {
  std::cout << report.to_text();
  if (!config.out.empty()) wiretap::app::write_text_file(config.out, report.to_json());
  return report.passed() ? wiretap::app::kExitOk : wiretap::app::kExitValidation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Ergodic secrecy sum-rate of limited-feedback zero-forcing downlinks with a passive "
      "eavesdropper: closed forms, asymptotes and Monte Carlo validation.\n"
      "Noise variance is fixed to 1 and the transmit power is P = 10^(snr_db/10)."};
  app.require_subcommand(1);

  Flags curve_flags, validate_flags, dist_flags;
  auto* curve = app.add_subcommand("rate-curve", "Sweep the secrecy sum-rate and write CSV");
  add_sweep_flags(curve, curve_flags);
  auto* validate = app.add_subcommand("validate", "Closed form vs quadrature vs Monte Carlo");
  add_sweep_flags(validate, validate_flags);
  auto* dist = app.add_subcommand("dist-check", "KS tests of simulated SINR distributions");
  add_sweep_flags(dist, dist_flags);
  auto* selftest = app.add_subcommand("selftest", "Special-function and linear-algebra oracles");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? wiretap::app::kExitOk : wiretap::app::kExitUsage;
  }

  try {
    if (curve->parsed()) {
      const SweepConfig config = resolve(wiretap::app::default_rate_curve_config(), curve_flags);
      const auto points = wiretap::app::run_rate_curve(config);
      const std::string csv = wiretap::app::format_csv(points);
      if (config.out.empty()) {
        std::cout << csv;
      } else {
        wiretap::app::write_text_file(config.out, csv);
      }
      return wiretap::app::kExitOk;
    }
    if (validate->parsed()) {
      const SweepConfig config = resolve(wiretap::app::default_validate_config(), validate_flags);
      return emit_report(wiretap::app::run_validate(config), config);
    }
    if (dist->parsed()) {
      const SweepConfig config = resolve(wiretap::app::default_dist_check_config(), dist_flags);
      return emit_report(wiretap::app::run_dist_check(config), config);
    }
    if (selftest->parsed()) {
      const auto report = wiretap::app::run_selftest();
      std::cout << report.to_text();
      return report.passed() ? wiretap::app::kExitOk : wiretap::app::kExitValidation;
    }
  } catch (const wiretap::app::UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return wiretap::app::kExitUsage;
  } catch (const wiretap::app::IoError& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return wiretap::app::kExitIo;
  } catch (const wiretap::InvalidArgument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return wiretap::app::kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return wiretap::app::kExitValidation;
  }
  return wiretap::app::kExitUsage;
}
