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

#ifndef WIRETAP_APP_HPP_
#define WIRETAP_APP_HPP_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wiretap/analytic.hpp"
#include "wiretap/simulate.hpp"

namespace wiretap::app {

// Process exit codes.
enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitIo = 2, kExitValidation = 3 };

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class RunMode { FULL, QCA, PERFECT, ANALYTIC_ONLY };

struct SweepConfig {
  std::vector<int> n_t{5};
  std::vector<int> bits{4};
  std::vector<double> alpha{0.25, 0.5, 1.0};
  double snr_start = -10.0;
  double snr_stop = 30.0;
  double snr_step = 2.0;
  RunMode mode = RunMode::FULL;
  Regime regime = Regime::GENERAL;
  std::uint64_t n_trials = 100000;
  std::uint64_t seed = 1;
  unsigned workers = 1;
  std::string out;
  bool clip = false;
  bool fixed_codebook = false;
  // validate: MC must fall within mc_sigma standard errors of the closed form.
  double mc_sigma = 3.0;

  // Throws UsageError if an invariant is violated.
  void validate() const;
  std::vector<double> snr_grid() const;
};

SweepConfig default_rate_curve_config();
SweepConfig default_validate_config();
SweepConfig default_dist_check_config();

// Flat `key = value` text; '#' starts a comment. Keys are the long flag names
// without dashes (nt, bits, alpha, snr, trials, seed, workers, mode, regime,
// clip, out, fixed-codebook, mc-sigma).
std::map<std::string, std::string> parse_config_text(const std::string& text);
std::map<std::string, std::string> read_config_file(const std::string& path);
void apply_setting(SweepConfig& config, const std::string& key, const std::string& value);

RunMode parse_mode(const std::string& s);
Regime parse_regime(const std::string& s);
std::string to_string(RunMode mode);
std::string to_string(Regime regime);

struct CurvePoint {
  double snr_db;
  double alpha;
  int n_t;
  int bits;
  double r_analytic;
  double r_mc_mean;
  double r_mc_stderr;
  std::uint64_t n_trials;
  std::uint64_t rejected;
};

inline constexpr const char* kCsvHeader =
    "snr_db,alpha,n_t,bits,r_analytic,r_mc_mean,r_mc_stderr,n_trials,rejected";

// Seed of the i-th grid point of a sweep.
std::uint64_t point_seed(std::uint64_t seed, std::uint64_t index);

// Grid order: n_t, bits, alpha, snr (last varies fastest). ANALYTIC_ONLY rows
// carry NaN MC columns and zero counts.
std::vector<CurvePoint> run_rate_curve(const SweepConfig& config);

std::string format_csv(const std::vector<CurvePoint>& points);
std::vector<CurvePoint> parse_csv(const std::string& text);
void write_text_file(const std::string& path, const std::string& contents);

struct CheckResult {
  std::string name;
  bool passed;
  std::string detail;
};

struct GridRow {
  int n_t;
  int bits;
  double alpha;
  double snr_db;
  double closed_form;
  double quadrature;
  double quad_rel_error;
  double mc_mean;
  double mc_stderr;
  double mc_delta;
};

struct Report {
  std::string title;
  std::vector<CheckResult> checks;
  std::vector<GridRow> rows;
  std::vector<std::string> notes;

  bool passed() const;
  std::string to_text() const;
  std::string to_json() const;
};

// Closed form vs quadrature vs MC on the config grid plus limit checks.
Report run_validate(const SweepConfig& config);

// KS statistics of simulated SINRs against the analytic CDFs.
Report run_dist_check(const SweepConfig& config);

// Special-function oracles and linear-algebra invariants.
Report run_selftest();

}  // namespace wiretap::app

#endif  // WIRETAP_APP_HPP_
