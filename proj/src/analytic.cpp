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

#include "wiretap/analytic.hpp"

#include <cmath>
#include <numbers>

#include "wiretap/errors.hpp"
#include "wiretap/quadrature.hpp"
#include "wiretap/special.hpp"

namespace wiretap {

double sinr_ccdf(double x, const SystemParams& params, Link link, Regime regime) {
  if (!(x >= 0.0)) throw DomainError("sinr_cdf: x must be >= 0");
  const bool legit = link == Link::LEGITIMATE;
  const double noise = legit ? params.noise_over_power() : params.eve_noise_over_power();
  const double interference_scale = legit ? params.delta() : 1.0;
  double value = 1.0;
  if (regime != Regime::INTERFERENCE_LIMITED) value *= std::exp(-x * noise);
  if (regime != Regime::NOISE_LIMITED) {
    value /= std::pow(1.0 + interference_scale * x, params.n_t() - 1);
  }
  return value;
}

double sinr_cdf(double x, const SystemParams& params, Link link, Regime regime) {
  return 1.0 - sinr_ccdf(x, params, link, regime);
}

double secrecy_rate_closed_form(const SystemParams& params) {
  const int n = params.n_t();
  const double delta = params.delta();
  const double legit = i1_integral(params.noise_over_power(), 1.0 / delta, n - 1) /
                       std::pow(delta, n - 1);
  const double eve = laplace_pole_integral(params.eve_noise_over_power(), 1.0, n);
  return n * std::numbers::log2e * (legit - eve);
}

double secrecy_rate_interference_limited(const SystemParams& params) {
  const int n = params.n_t();
  // B(1, n-1) = 1/(n-1).
  const double hyper = gauss_2f1_rate(n, 1.0 - params.delta());
  return n * std::numbers::log2e * (hyper - 1.0) / (n - 1);
}

double secrecy_rate_noise_limited(const SystemParams& params) {
  const double legit = scaled_expint(1, params.noise_over_power());
  const double eve = scaled_expint(1, params.eve_noise_over_power());
  return params.n_t() * std::numbers::log2e * (legit - eve);
}

double secrecy_rate(const SystemParams& params, Regime regime) {
  switch (regime) {
    case Regime::GENERAL: return secrecy_rate_closed_form(params);
    case Regime::INTERFERENCE_LIMITED: return secrecy_rate_interference_limited(params);
    case Regime::NOISE_LIMITED: return secrecy_rate_noise_limited(params);
  }
  throw InvalidArgument("secrecy_rate: unknown regime");
}

double rate_from_cdf_quadrature(const SystemParams& params, Regime regime) {
  const auto integrand = [&](double x) {
    const double legit = sinr_ccdf(x, params, Link::LEGITIMATE, regime);
    const double eve = sinr_ccdf(x, params, Link::EAVESDROPPER, regime);
    return (legit - eve) / (1.0 + x);
  };
  const double scale = params.n_t() * std::numbers::log2e;
  return scale * integrate_to_infinity(integrand, 0.0, 1e-9 / scale).value;
}

}  // namespace wiretap
