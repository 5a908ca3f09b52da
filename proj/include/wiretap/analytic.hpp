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

#ifndef WIRETAP_ANALYTIC_HPP_
#define WIRETAP_ANALYTIC_HPP_

#include "wiretap/params.hpp"

namespace wiretap {

// GENERAL keeps both noise and inter-user interference; INTERFERENCE_LIMITED
// drops the noise term (high SNR); NOISE_LIMITED drops the interference term
// (low SNR).
enum class Regime { GENERAL, INTERFERENCE_LIMITED, NOISE_LIMITED };

// LEGITIMATE: SINR of a user's stream at that user. EAVESDROPPER: SINR of the
// same stream at the eavesdropper.
enum class Link { LEGITIMATE, EAVESDROPPER };

// Survival function 1 - CDF of the per-user SINR, x >= 0:
//   legitimate    exp(-x sigma^2/P)           / (1 + delta x)^(n_t - 1)
//   eavesdropper  exp(-x sigma^2/(alpha^2 P)) / (1 + x)^(n_t - 1)
// INTERFERENCE_LIMITED drops the exponential, NOISE_LIMITED the polynomial.
double sinr_ccdf(double x, const SystemParams& params, Link link, Regime regime);

// CDF of the per-user SINR; 1 - sinr_ccdf. Throws DomainError for x < 0.
double sinr_cdf(double x, const SystemParams& params, Link link, Regime regime);

// Ergodic secrecy sum-rate (bits/s/Hz), closed form:
//   n_t log2(e) [delta^{-(n_t-1)} I1(s, 1/delta, n_t-1) - J(s', 1, n_t)]
// with s = sigma^2/P and s' = sigma^2/(alpha^2 P). Not clipped at zero.
double secrecy_rate_closed_form(const SystemParams& params);

// High-SNR limit n_t log2(e) [2F1(n_t-1, 1; n_t; 1-delta) - 1] / (n_t - 1).
// Depends only on n_t and bits.
double secrecy_rate_interference_limited(const SystemParams& params);

// Low-SNR limit n_t log2(e) [e^s E1(s) - e^{s'} E1(s')]. Independent of bits.
double secrecy_rate_noise_limited(const SystemParams& params);

// Closed form matching the regime.
double secrecy_rate(const SystemParams& params, Regime regime);

// Independent oracle: n_t log2(e) int_0^inf [(1-F) - (1-G)] / (1+x) dx by
// adaptive quadrature of the regime's survival functions (absolute error
// < 1e-9, else NumericalFailure).
double rate_from_cdf_quadrature(const SystemParams& params, Regime regime);

}  // namespace wiretap

#endif  // WIRETAP_ANALYTIC_HPP_
