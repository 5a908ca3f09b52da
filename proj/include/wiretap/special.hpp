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

#ifndef WIRETAP_SPECIAL_HPP_
#define WIRETAP_SPECIAL_HPP_

namespace wiretap {

// E1(x) = int_x^inf e^{-t}/t dt for x > 0. Power series for x <= 1,
// Lentz continued fraction above; relative error ~1e-15.
double exp_integral_e1(double x);

// Ei(-x) = -E1(x) for x > 0. Ei at positive arguments is not provided.
double exp_integral_ei_negative(double x);

// e^x E_n(x) for n >= 1, x >= 0 (x > 0 when n == 1). Finite for all large x.
double scaled_expint(int n, double x);

// J(p, a, n) = int_0^inf e^{-pt} (t + a)^{-n} dt  for p >= 0, a > 0, n >= 1.
//
// J(p, a, 1) = e^{ap} E1(ap) and, by parts,
// J(p, a, n) = [a^{-(n-1)} - p J(p, a, n-1)] / (n - 1).
// The upward recurrence is used while ap <= 1 (it contracts errors there);
// for ap > 1 each order is taken from the continued fraction of e^x E_n(x)
// through J(p, a, n) = a^{1-n} e^{ap} E_n(ap).
// Throws DivergentIntegral for p == 0, n == 1.
double laplace_pole_integral(double p, double a, int n);

// I1(x, y, z) = int_0^inf e^{-xt} / ((t + 1)(t + y)^z) dt, x >= 0, y > 0,
// z >= 1. Evaluated without quadrature:
//   y == 1          merged pole, J(x, 1, z + 1);
//   1 < y <= 2      sum_m (y-1)^m J(x, y, z+1+m)  (positive terms, ratio <= 1/2);
//   y > 2, y < 1/2  partial fractions over (t+1) and powers of (t+y);
//   1/2 <= y < 1    sum_m C(z+m-1, m)(1-y)^m J(x, 1, z+1+m).
double i1_integral(double x, double y, int z);

// 2F1(n_t - 1, 1; n_t; z) = (n_t - 1) sum_{j>=0} z^j / (n_t - 1 + j), z in [0, 1).
// Near z -> 1 the logarithmic continuation
//   (n_t - 1) z^{1-n_t} [-ln(1 - z) - sum_{k=1}^{n_t-2} z^k / k]
// is used when it is well conditioned.
double gauss_2f1_rate(int n_t, double z);

}  // namespace wiretap

#endif  // WIRETAP_SPECIAL_HPP_
