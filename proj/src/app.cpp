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

#include "wiretap/app.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <sstream>
#include <system_error>

#include <json.hpp>

#include "wiretap/errors.hpp"
#include "wiretap/ks.hpp"
#include "wiretap/linalg.hpp"
#include "wiretap/quadrature.hpp"
#include "wiretap/quantize.hpp"
#include "wiretap/special.hpp"

namespace wiretap::app {
namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream in(s);
  while (std::getline(in, part, sep)) parts.push_back(trim(part));
  if (!s.empty() && s.back() == sep) parts.emplace_back();
  return parts;
}

template <class T>
T parse_number(const std::string& raw, const std::string& what) {
  const std::string s = trim(raw);
  T value{};
  const char* begin = s.data();
  const char* end = s.data() + s.size();
  if (!s.empty() && s.front() == '+') ++begin;
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end || s.empty()) {
    throw UsageError("invalid value for " + what + ": '" + raw + "'");
  }
  return value;
}

template <class T>
std::vector<T> parse_list(const std::string& s, const std::string& what) {
  std::vector<T> out;
  for (const auto& part : split(s, ',')) out.push_back(parse_number<T>(part, what));
  if (out.empty()) throw UsageError(what + ": list must not be empty");
  return out;
}

bool parse_bool(const std::string& raw, const std::string& what) {
  const std::string s = trim(raw);
  if (s == "1" || s == "true" || s == "yes" || s == "on") return true;
  if (s == "0" || s == "false" || s == "no" || s == "off") return false;
  throw UsageError("invalid boolean for " + what + ": '" + raw + "'");
}

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
  return std::string(buf, ptr);
}

std::optional<SimMode> sim_mode(RunMode mode) {
  switch (mode) {
    case RunMode::FULL: return SimMode::FULL;
    case RunMode::QCA: return SimMode::QCA;
    case RunMode::PERFECT: return SimMode::PERFECT;
    case RunMode::ANALYTIC_ONLY: return std::nullopt;
  }
  return std::nullopt;
}

SimOptions sim_options(const SweepConfig& config) {
  SimOptions options;
  options.regime = config.regime;
  options.clip = config.clip;
  options.fixed_codebook = config.fixed_codebook;
  return options;
}

std::string fmt_sci(double v) {
  std::ostringstream s;
  s.precision(3);
  s << std::scientific << v;
  return s.str();
}

}  // namespace

void SweepConfig::validate() const {
  if (n_t.empty() || bits.empty() || alpha.empty()) throw UsageError("parameter lists must not be empty");
  for (int n : n_t) if (n < 2) throw UsageError("n_t must be >= 2");
  for (int b : bits) if (b < 0) throw UsageError("bits must be >= 0");
  for (double a : alpha) if (!(a > 0.0) || !std::isfinite(a)) throw UsageError("alpha must be positive");
  if (!std::isfinite(snr_start) || !std::isfinite(snr_stop)) throw UsageError("snr bounds must be finite");
  if (!(snr_step > 0.0)) throw UsageError("snr step must be > 0");
  if (snr_stop < snr_start) throw UsageError("snr stop must be >= start");
  if (n_trials < 1) throw UsageError("trials must be >= 1");
  if (workers < 1) throw UsageError("workers must be >= 1");
  if (!(mc_sigma > 0.0)) throw UsageError("mc-sigma must be > 0");
  if (mode == RunMode::FULL) {
    for (int b : bits) {
      if (b > kMaxCodebookBits) {
        throw UsageError("full mode searches codebooks exhaustively and supports at most " +
                         std::to_string(kMaxCodebookBits) + " bits; use --mode qca");
      }
    }
  }
  if (mode == RunMode::PERFECT && regime == Regime::INTERFERENCE_LIMITED) {
    throw UsageError("perfect mode has no interference; --regime il is undefined");
  }
}

std::vector<double> SweepConfig::snr_grid() const {
  const auto steps = static_cast<long>(std::floor((snr_stop - snr_start) / snr_step + 1e-9));
  std::vector<double> grid;
  grid.reserve(steps + 1);
  for (long i = 0; i <= steps; ++i) grid.push_back(snr_start + static_cast<double>(i) * snr_step);
  return grid;
}

SweepConfig default_rate_curve_config() { return SweepConfig{}; }

SweepConfig default_validate_config() {
  SweepConfig c;
  c.n_t = {2, 3, 5};
  c.bits = {0, 1, 4, 8};
  c.alpha = {0.25, 0.5, 1.0};
  c.snr_start = -10.0;
  c.snr_stop = 20.0;
  c.snr_step = 10.0;
  c.mode = RunMode::QCA;
  c.n_trials = 200000;
  return c;
}

SweepConfig default_dist_check_config() {
  SweepConfig c;
  c.n_t = {5};
  c.bits = {4};
  c.alpha = {1.0};
  c.snr_start = c.snr_stop = 10.0;
  c.snr_step = 1.0;
  c.mode = RunMode::QCA;
  c.n_trials = 10000;
  return c;
}

std::map<std::string, std::string> parse_config_text(const std::string& text) {
  std::map<std::string, std::string> values;
  std::istringstream in(text);
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw UsageError("config line " + std::to_string(number) + ": expected key = value");
    }
    const std::string key = trim(line.substr(0, eq));
    if (key.empty()) throw UsageError("config line " + std::to_string(number) + ": empty key");
    values[key] = trim(line.substr(eq + 1));
  }
  return values;
}

std::map<std::string, std::string> read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config file '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config_text(text.str());
}

RunMode parse_mode(const std::string& s) {
  if (s == "full") return RunMode::FULL;
  if (s == "qca") return RunMode::QCA;
  if (s == "perfect") return RunMode::PERFECT;
  if (s == "analytic-only") return RunMode::ANALYTIC_ONLY;
  throw UsageError("unknown mode '" + s + "' (full|qca|perfect|analytic-only)");
}

Regime parse_regime(const std::string& s) {
  if (s == "general") return Regime::GENERAL;
  if (s == "il") return Regime::INTERFERENCE_LIMITED;
  if (s == "nl") return Regime::NOISE_LIMITED;
  throw UsageError("unknown regime '" + s + "' (general|il|nl)");
}

std::string to_string(RunMode mode) {
  switch (mode) {
    case RunMode::FULL: return "full";
    case RunMode::QCA: return "qca";
    case RunMode::PERFECT: return "perfect";
    case RunMode::ANALYTIC_ONLY: return "analytic-only";
  }
  return "?";
}

std::string to_string(Regime regime) {
  switch (regime) {
    case Regime::GENERAL: return "general";
    case Regime::INTERFERENCE_LIMITED: return "il";
    case Regime::NOISE_LIMITED: return "nl";
  }
  return "?";
}

void apply_setting(SweepConfig& config, const std::string& key, const std::string& value) {
  if (key == "nt") {
    config.n_t = parse_list<int>(value, "nt");
  } else if (key == "bits") {
    config.bits = parse_list<int>(value, "bits");
  } else if (key == "alpha") {
    config.alpha = parse_list<double>(value, "alpha");
  } else if (key == "snr") {
    const auto parts = split(value, ':');
    if (parts.size() == 1) {
      config.snr_start = config.snr_stop = parse_number<double>(parts[0], "snr");
      config.snr_step = 1.0;
    } else if (parts.size() == 3) {
      config.snr_start = parse_number<double>(parts[0], "snr start");
      config.snr_stop = parse_number<double>(parts[1], "snr stop");
      config.snr_step = parse_number<double>(parts[2], "snr step");
    } else {
      throw UsageError("snr must be <start:stop:step> or a single value");
    }
  } else if (key == "trials") {
    config.n_trials = parse_number<std::uint64_t>(value, "trials");
  } else if (key == "seed") {
    config.seed = parse_number<std::uint64_t>(value, "seed");
  } else if (key == "workers") {
    config.workers = parse_number<unsigned>(value, "workers");
  } else if (key == "mode") {
    config.mode = parse_mode(trim(value));
  } else if (key == "regime") {
    config.regime = parse_regime(trim(value));
  } else if (key == "clip") {
    config.clip = parse_bool(value, "clip");
  } else if (key == "fixed-codebook") {
    config.fixed_codebook = parse_bool(value, "fixed-codebook");
  } else if (key == "out") {
    config.out = trim(value);
  } else if (key == "mc-sigma") {
    config.mc_sigma = parse_number<double>(value, "mc-sigma");
  } else {
    throw UsageError("unknown setting '" + key + "'");
  }
}

std::uint64_t point_seed(std::uint64_t seed, std::uint64_t index) {
  return mix64(seed ^ mix64(index + 0x5851F42D4C957F2DULL));
}

std::vector<CurvePoint> run_rate_curve(const SweepConfig& config) {
  config.validate();
  const auto mode = sim_mode(config.mode);
  const SimOptions options = sim_options(config);
  std::vector<CurvePoint> points;
  std::uint64_t index = 0;
  for (int n_t : config.n_t) {
    for (int bits : config.bits) {
      for (double alpha : config.alpha) {
        for (double snr : config.snr_grid()) {
          const SystemParams params(n_t, bits, alpha, snr);
          CurvePoint p{snr, alpha, n_t, bits, secrecy_rate(params, config.regime),
                       std::numeric_limits<double>::quiet_NaN(),
                       std::numeric_limits<double>::quiet_NaN(), 0, 0};
          if (mode) {
            const RateEstimate est = estimate_secrecy_rate(
                params, *mode, config.n_trials, point_seed(config.seed, index), config.workers,
                options);
            p.r_mc_mean = est.mean;
            p.r_mc_stderr = est.std_err;
            p.n_trials = est.n_trials;
            p.rejected = est.rejected;
          }
          points.push_back(p);
          ++index;
        }
      }
    }
  }
  return points;
}

std::string format_csv(const std::vector<CurvePoint>& points) {
  std::string out = kCsvHeader;
  out += '\n';
  for (const auto& p : points) {
    out += format_double(p.snr_db) + ',' + format_double(p.alpha) + ',' + std::to_string(p.n_t) +
           ',' + std::to_string(p.bits) + ',' + format_double(p.r_analytic) + ',' +
           format_double(p.r_mc_mean) + ',' + format_double(p.r_mc_stderr) + ',' +
           std::to_string(p.n_trials) + ',' + std::to_string(p.rejected) + '\n';
  }
  return out;
}

std::vector<CurvePoint> parse_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || trim(line) != kCsvHeader) {
    throw UsageError("CSV header mismatch");
  }
  std::vector<CurvePoint> points;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    const auto f = split(line, ',');
    if (f.size() != 9) throw UsageError("CSV row must have 9 fields: '" + line + "'");
    points.push_back(CurvePoint{
        parse_number<double>(f[0], "snr_db"), parse_number<double>(f[1], "alpha"),
        parse_number<int>(f[2], "n_t"), parse_number<int>(f[3], "bits"),
        parse_number<double>(f[4], "r_analytic"), parse_number<double>(f[5], "r_mc_mean"),
        parse_number<double>(f[6], "r_mc_stderr"), parse_number<std::uint64_t>(f[7], "n_trials"),
        parse_number<std::uint64_t>(f[8], "rejected")});
  }
  return points;
}

void write_text_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << contents;
  out.flush();
  if (!out) throw IoError("write to '" + path + "' failed");
}

bool Report::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

std::string Report::to_text() const {
  std::ostringstream s;
  s << title << '\n';
  if (!rows.empty()) {
    s << "n_t bits alpha snr_db closed_form quadrature rel_err mc_mean mc_stderr |mc-cf|\n";
    for (const auto& r : rows) {
      s << r.n_t << ' ' << r.bits << ' ' << r.alpha << ' ' << r.snr_db << ' '
        << format_double(r.closed_form) << ' ' << format_double(r.quadrature) << ' '
        << fmt_sci(r.quad_rel_error) << ' ' << format_double(r.mc_mean) << ' '
        << fmt_sci(r.mc_stderr) << ' ' << fmt_sci(r.mc_delta) << '\n';
    }
  }
  for (const auto& c : checks) {
    s << (c.passed ? "[PASS] " : "[FAIL] ") << c.name;
    if (!c.detail.empty()) s << " -- " << c.detail;
    s << '\n';
  }
  for (const auto& n : notes) s << "note: " << n << '\n';
  s << (passed() ? "RESULT: PASS" : "RESULT: FAIL") << '\n';
  return s.str();
}

std::string Report::to_json() const {
  nlohmann::json j;
  j["title"] = title;
  j["passed"] = passed();
  j["checks"] = nlohmann::json::array();
  for (const auto& c : checks) {
    j["checks"].push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  }
  j["rows"] = nlohmann::json::array();
  for (const auto& r : rows) {
    const auto num = [](double v) { return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(); };
    j["rows"].push_back({{"n_t", r.n_t}, {"bits", r.bits}, {"alpha", r.alpha},
                         {"snr_db", r.snr_db}, {"closed_form", num(r.closed_form)},
                         {"quadrature", num(r.quadrature)},
                         {"quad_rel_error", num(r.quad_rel_error)}, {"mc_mean", num(r.mc_mean)},
                         {"mc_stderr", num(r.mc_stderr)}, {"mc_delta", num(r.mc_delta)}});
  }
  j["notes"] = notes;
  return j.dump(2) + "\n";
}

Report run_validate(const SweepConfig& config) {
  config.validate();
  Report report;
  report.title = "validate: closed form vs quadrature vs Monte Carlo (" + to_string(config.mode) +
                 ", regime " + to_string(config.regime) + ", " +
                 std::to_string(config.n_trials) + " trials)";
  const auto mode = sim_mode(config.mode);
  const SimOptions options = sim_options(config);
  constexpr double kQuadTolerance = 1e-8;
  constexpr double nan = std::numeric_limits<double>::quiet_NaN();

  std::size_t quad_failures = 0;
  std::size_t mc_failures = 0;
  double worst_quad = 0.0;
  double worst_z = 0.0;
  std::uint64_t index = 0;
  for (int n_t : config.n_t) {
    for (int bits : config.bits) {
      for (double alpha : config.alpha) {
        for (double snr : config.snr_grid()) {
          const SystemParams params(n_t, bits, alpha, snr);
          GridRow row{n_t, bits, alpha, snr, secrecy_rate(params, config.regime),
                      rate_from_cdf_quadrature(params, config.regime), 0.0, nan, nan, nan};
          row.quad_rel_error = std::abs(row.closed_form - row.quadrature) /
                               std::max(std::abs(row.quadrature), 1e-6);
          worst_quad = std::max(worst_quad, row.quad_rel_error);
          if (!(row.quad_rel_error < kQuadTolerance)) ++quad_failures;
          if (mode) {
            const RateEstimate est = estimate_secrecy_rate(
                params, *mode, config.n_trials, point_seed(config.seed, index), config.workers,
                options);
            row.mc_mean = est.mean;
            row.mc_stderr = est.std_err;
            row.mc_delta = std::abs(est.mean - row.closed_form);
            const bool ok = row.mc_delta < config.mc_sigma * est.std_err ||
                            (est.std_err == 0.0 && row.mc_delta == 0.0);
            if (!ok) ++mc_failures;
            if (est.std_err > 0.0) worst_z = std::max(worst_z, row.mc_delta / est.std_err);
          }
          report.rows.push_back(row);
          ++index;
        }
      }
    }
  }
  const std::string points = std::to_string(report.rows.size()) + " points";
  report.checks.push_back({"closed form vs quadrature (rel < 1e-8)", quad_failures == 0,
                           std::to_string(quad_failures) + " of " + points +
                               " failed; worst rel " + fmt_sci(worst_quad)});
  if (mode) {
    std::ostringstream name;
    name << "Monte Carlo vs closed form (< " << config.mc_sigma << " std_err)";
    report.checks.push_back({name.str(), mc_failures == 0,
                             std::to_string(mc_failures) + " of " + points +
                                 " failed; worst |delta|/std_err " + fmt_sci(worst_z)});
  }

  // Limits on every (n_t, bits, alpha) of the grid.
  std::size_t high_fail = 0, low_fail = 0, exact_fail = 0, combos = 0;
  double worst_high = 0.0, worst_low = 0.0;
  for (int n_t : config.n_t) {
    for (int bits : config.bits) {
      for (double alpha : config.alpha) {
        ++combos;
        // n_t = 2 approaches R_IL only as O(s ln(1/s)) in s = sigma^2/P.
        const SystemParams high(n_t, bits, alpha, n_t == 2 ? 80.0 : 50.0);
        const double dh = std::abs(secrecy_rate_closed_form(high) -
                                   secrecy_rate_interference_limited(high));
        worst_high = std::max(worst_high, dh);
        if (!(dh < 1e-3)) ++high_fail;

        const SystemParams low(n_t, bits, alpha, -40.0);
        const double nl = secrecy_rate_noise_limited(low);
        const double cf = secrecy_rate_closed_form(low);
        // With alpha == 1 both sides vanish and only the absolute gap is meaningful.
        const double dl = nl != 0.0 ? std::abs(cf / nl - 1.0) : std::abs(cf - nl);
        const double limit = nl != 0.0 ? 1e-2 : 1e-6;
        worst_low = std::max(worst_low, dl);
        if (!(dl < limit)) ++low_fail;

        if (secrecy_rate_interference_limited(SystemParams(n_t, 0, alpha, 0.0)) != 0.0) ++exact_fail;
        const SystemParams same(n_t, bits, 1.0, 0.0);
        if (secrecy_rate_noise_limited(same) != 0.0) ++exact_fail;
      }
    }
  }
  const std::string of = " of " + std::to_string(combos) + " (n_t, bits, alpha) combinations failed";
  report.checks.push_back({"high-SNR limit |R - R_IL| < 1e-3 at 50 dB (80 dB for n_t = 2)", high_fail == 0,
                           std::to_string(high_fail) + of + "; worst " + fmt_sci(worst_high)});
  report.checks.push_back({"low-SNR limit R(-40 dB) / R_NL within 1%", low_fail == 0,
                           std::to_string(low_fail) + of + "; worst " + fmt_sci(worst_low)});
  report.checks.push_back({"R_IL(bits=0) == 0 and R_NL(alpha=1) == 0 exactly", exact_fail == 0,
                           std::to_string(exact_fail) + " nonzero values"});
  return report;
}

Report run_dist_check(const SweepConfig& config) {
  config.validate();
  const auto mode = sim_mode(config.mode);
  if (!mode) throw UsageError("dist-check needs a simulation mode (full|qca|perfect)");
  const SimOptions options = sim_options(config);
  Report report;
  report.title = "dist-check: KS statistics of simulated SINRs (" + to_string(config.mode) +
                 ", regime " + to_string(config.regime) + ", n = " +
                 std::to_string(config.n_trials) + ")";
  const std::size_t n = config.n_trials;
  const double critical = ks_critical_1pct(n);
  // RVQ codebooks only approximately follow the QCA model.
  constexpr double kApproximateThreshold = 0.05;

  std::uint64_t index = 0;
  bool caveat = false;
  for (int n_t : config.n_t) {
    caveat = caveat || n_t == 2;
    for (int bits : config.bits) {
      for (double alpha : config.alpha) {
        for (double snr : config.snr_grid()) {
          const SystemParams params(n_t, bits, alpha, snr);
          for (Link link : {Link::LEGITIMATE, Link::EAVESDROPPER}) {
            const bool legit = link == Link::LEGITIMATE;
            // With perfect CSI the legitimate SINR has no interference term.
            const Regime cdf_regime = (*mode == SimMode::PERFECT && legit)
                                          ? Regime::NOISE_LIMITED
                                          : config.regime;
            const bool exact = *mode == SimMode::QCA || (*mode == SimMode::PERFECT && legit);
            const double threshold = exact ? critical : kApproximateThreshold;
            const auto samples = collect_sinr_samples(params, *mode, link, n,
                                                      point_seed(config.seed, index), options,
                                                      config.workers);
            ++index;
            const double d = ks_statistic(samples, [&](double x) {
              return sinr_cdf(x, params, link, cdf_regime);
            });
            std::ostringstream name;
            name << (legit ? "legitimate" : "eavesdropper") << " n_t=" << n_t << " bits=" << bits
                 << " alpha=" << alpha << " snr=" << snr;
            std::ostringstream detail;
            detail << "KS " << fmt_sci(d) << (exact ? " vs 1% critical " : " vs RVQ threshold ")
                   << fmt_sci(threshold);
            report.checks.push_back({name.str(), d < threshold, detail.str()});
          }
        }
      }
    }
  }
  if (caveat) {
    report.notes.push_back(
        "n_t = 2: the Beta(1, n_t - 2) interference factor is degenerate; the single "
        "interfering term has |s^H w|^2 = 1 and the Gamma(n_t - 1, delta) gain is used directly");
  }
  return report;
}

Report run_selftest() {
  Report report;
  report.title = "selftest: special functions and linear-algebra invariants";

  {
    const double v = exp_integral_e1(1.0);
    const double ref = 0.21938393439552027368;
    report.checks.push_back({"E1(1) = 0.2193839343955203 (tol 1e-10)", std::abs(v - ref) < 1e-10,
                             "value " + format_double(v)});
  }
  {
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
      const double x = 1e-3 * std::pow(5e4, i / 19.0);
      const double q = integrate_to_infinity([](double t) { return std::exp(-t) / t; }, x,
                                             1e-12 * exp_integral_e1(x))
                           .value;
      worst = std::max(worst, std::abs(exp_integral_e1(x) - q) / q);
    }
    report.checks.push_back({"E1 vs quadrature at 20 log-spaced points in [1e-3, 50] (rel 1e-10)",
                             worst < 1e-10, "worst rel " + fmt_sci(worst)});
  }
  {
    double worst = 0.0;
    for (int i = 0; i <= 99; ++i) {
      const double z = 0.01 * i;
      const double ref = z == 0.0 ? 1.0 : -std::log1p(-z) / z;
      worst = std::max(worst, std::abs(gauss_2f1_rate(2, z) - ref) / ref);
    }
    report.checks.push_back({"2F1(1,1;2;z) = -ln(1-z)/z on [0, 0.99] (rel 1e-10)", worst < 1e-10,
                             "worst rel " + fmt_sci(worst)});
  }
  {
    double worst = 0.0;
    for (double p : {0.1, 1.0, 7.0}) {
      for (double a : {0.5, 1.0, 3.0}) {
        for (int n = 1; n <= 10; ++n) {
          const double q = integrate_to_infinity(
                               [&](double t) { return std::exp(-p * t) * std::pow(t + a, -n); },
                               0.0, 1e-11 * laplace_pole_integral(p, a, n))
                               .value;
          worst = std::max(worst, std::abs(laplace_pole_integral(p, a, n) - q) / q);
        }
      }
    }
    report.checks.push_back({"J(p,a,n) recurrence vs quadrature, n <= 10 (rel 1e-9)", worst < 1e-9,
                             "worst rel " + fmt_sci(worst)});
  }
  {
    double worst = 0.0;
    for (double x : {0.0, 0.01, 1.0}) {
      for (double y : {0.7, 1.0, 1.3, 4.0, 256.0}) {
        for (int z : {1, 4}) {
          const double q = integrate_to_infinity(
                               [&](double t) {
                                 return std::exp(-x * t) / ((t + 1.0) * std::pow(t + y, z));
                               },
                               0.0, 1e-10 * i1_integral(x, y, z))
                               .value;
          worst = std::max(worst, std::abs(i1_integral(x, y, z) - q) / q);
        }
      }
    }
    report.checks.push_back({"I1(x,y,z) vs quadrature (rel 1e-8)", worst < 1e-8,
                             "worst rel " + fmt_sci(worst)});
  }
  {
    RngStream rng(20130101, 0);
    const SystemParams params(5, 4, 1.0, 10.0);
    double worst_zf = 0.0;
    double worst_norm = 0.0;
    for (int t = 0; t < 200; ++t) {
      const ChannelRealization r = draw_channel_realization(params, SimMode::FULL, rng);
      for (std::size_t k = 0; k < r.beams.beams.size(); ++k) {
        worst_norm = std::max(worst_norm, std::abs(r.beams.beams[k].norm() - 1.0));
        for (std::size_t i = 0; i < r.h_hat.size(); ++i) {
          if (i != k) worst_zf = std::max(worst_zf, std::abs(inner_product(r.h_hat[i], r.beams.beams[k])));
        }
      }
    }
    report.checks.push_back({"zero-forcing residual max |h_hat_i^H w_k| < 1e-10 (200 draws)",
                             worst_zf < 1e-10, "worst " + fmt_sci(worst_zf)});
    report.checks.push_back({"unit-norm beams (1e-12)", worst_norm < 1e-12,
                             "worst " + fmt_sci(worst_norm)});
  }
  {
    RngStream rng(20130101, 1);
    double worst = 0.0;
    for (int t = 0; t < 200; ++t) {
      const ComplexVec h = sample_complex_gaussian(5, rng);
      const Codebook book = generate_codebook(5, 4, rng);
      const QuantizationOutcome q = quantize(h, book);
      const ComplexVec rebuilt =
          (std::sqrt(1.0 - q.a) * q.phase) * q.h_hat + Complex(std::sqrt(q.a), 0.0) * q.s;
      worst = std::max(worst, (unit_direction(h) - rebuilt).norm());
    }
    report.checks.push_back({"quantization decomposition residual < 1e-10", worst < 1e-10,
                             "worst " + fmt_sci(worst)});
  }
  return report;
}

}  // namespace wiretap::app
