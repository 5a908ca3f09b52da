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

#include "wiretap/special.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "wiretap/errors.hpp"

namespace wiretap {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kMaxIterations = 100000;

// e^x E_n(x) for x > 1 (any n >= 1), modified Lentz.
double scaled_expint_cf(int n, double x) {
  constexpr double tiny = 1e-300;
  double b = x + n;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < kMaxIterations; ++i) {
    const double an = -static_cast<double>(i) * (n - 1 + i);
    b += 2.0;
    d = 1.0 / (an * d + b);
    c = b + an / c;
    const double del = c * d;
    h *= del;
    if (std::abs(del - 1.0) < kEps) return h;
  }
  throw NumericalFailure("scaled_expint: continued fraction did not converge for n=" +
                         std::to_string(n) + ", x=" + std::to_string(x));
}

// E1(x) for 0 < x <= 1.
double e1_series(double x) {
  double sum = 0.0;
  double term = 1.0;
  for (int k = 1; k < 200; ++k) {
    term *= -x / k;
    const double contribution = term / k;
    sum += contribution;
    if (std::abs(contribution) < kEps * std::abs(sum)) break;
  }
  return -std::numbers::egamma - std::log(x) - sum;
}

}  // namespace

double exp_integral_e1(double x) {
  if (!(x > 0.0)) throw DomainError("exp_integral_e1: x must be > 0");
  if (x <= 1.0) return e1_series(x);
  if (x > 745.0) return 0.0;  // below the smallest subnormal
  return scaled_expint_cf(1, x) * std::exp(-x);
}

double exp_integral_ei_negative(double x) { return -exp_integral_e1(x); }

double scaled_expint(int n, double x) {
  if (n < 1) throw DomainError("scaled_expint: n must be >= 1");
  if (!(x >= 0.0)) throw DomainError("scaled_expint: x must be >= 0");
  if (x == 0.0) {
    if (n == 1) throw DomainError("scaled_expint: E1 diverges at 0");
    return 1.0 / (n - 1);
  }
  if (x > 1.0) return scaled_expint_cf(n, x);
  double value = std::exp(x) * e1_series(x);
  for (int k = 2; k <= n; ++k) value = (1.0 - x * value) / (k - 1);
  return value;
}

double laplace_pole_integral(double p, double a, int n) {
  if (!(p >= 0.0) || !std::isfinite(p)) throw InvalidArgument("laplace_pole_integral: p must be >= 0");
  if (!(a > 0.0) || !std::isfinite(a)) throw InvalidArgument("laplace_pole_integral: a must be > 0");
  if (n < 1) throw InvalidArgument("laplace_pole_integral: n must be >= 1");
  if (p == 0.0 && n == 1) {
    throw DivergentIntegral("laplace_pole_integral: int_0^inf dt/(t+a) diverges");
  }
  const double scale = std::pow(a, 1.0 - n);
  if (p == 0.0) return scale / (n - 1);
  return scale * scaled_expint(n, a * p);
}

double i1_integral(double x, double y, int z) {
  if (!(x >= 0.0) || !std::isfinite(x)) throw InvalidArgument("i1_integral: x must be >= 0");
  if (!(y > 0.0) || !std::isfinite(y)) throw InvalidArgument("i1_integral: y must be > 0");
  if (z < 1) throw InvalidArgument("i1_integral: z must be >= 1");

  if (y == 1.0) return laplace_pole_integral(x, 1.0, z + 1);

  const double c = y - 1.0;
  if (c > 0.0 && c <= 1.0) {
    // 1/(t+1) = sum_m c^m / (t+y)^{m+1}, with c/(t+y) <= c/y <= 1/2.
    double sum = 0.0;
    double weight = 1.0;
    for (int m = 0; m < kMaxIterations; ++m) {
      const double term = weight * laplace_pole_integral(x, y, z + 1 + m);
      sum += term;
      if (term < kEps * 0.25 * sum) return sum;
      weight *= c;
    }
    throw NumericalFailure("i1_integral: series did not converge");
  }
  if (c < 0.0 && c >= -0.5) {
    // (t+y)^{-z} = (t+1)^{-z} sum_m C(z+m-1, m) ((1-y)/(t+1))^m.
    const double r = -c;
    double sum = 0.0;
    double weight = 1.0;
    for (int m = 0; m < kMaxIterations; ++m) {
      const double term = weight * laplace_pole_integral(x, 1.0, z + 1 + m);
      sum += term;
      if (term < kEps * 0.25 * sum) return sum;
      weight *= r * (z + m) / (m + 1.0);
    }
    throw NumericalFailure("i1_integral: series did not converge");
  }

  // 1/((t+1)(t+y)^z) = c^{-z} [1/(t+1) - sum_{j=1}^{z} c^{j-1} / (t+y)^j].
  if (x == 0.0) {
    // The two 1/t tails cancel: int (1/(t+1) - 1/(t+y)) dt = ln y.
    double bracket = std::log(y);
    double cj = 1.0;
    for (int j = 2; j <= z; ++j) {
      cj *= c;
      bracket -= cj * laplace_pole_integral(0.0, y, j);
    }
    return bracket * std::pow(c, -z);
  }
  double bracket = laplace_pole_integral(x, 1.0, 1);
  double cj = 1.0;
  for (int j = 1; j <= z; ++j) {
    bracket -= cj * laplace_pole_integral(x, y, j);
    cj *= c;
  }
  return bracket * std::pow(c, -z);
}

double gauss_2f1_rate(int n_t, double z) {
  if (n_t < 2) throw InvalidArgument("gauss_2f1_rate: n_t must be >= 2");
  if (!(z >= 0.0)) throw DomainError("gauss_2f1_rate: z must be >= 0");
  if (!(z < 1.0)) throw DomainError("gauss_2f1_rate: series diverges for z >= 1");
  if (z == 0.0) return 1.0;
  const int m = n_t - 1;

  if (z > 0.999) {
    const double log_term = -std::log1p(-z);
    double head = 0.0;
    double zk = 1.0;
    for (int k = 1; k < m; ++k) {
      zk *= z;
      head += zk / k;
    }
    if (head < 0.5 * log_term) {
      return m * (log_term - head) / std::pow(z, m);
    }
  }

  // Kahan-compensated direct series.
  double sum = 0.0;
  double compensation = 0.0;
  double zj = 1.0;
  for (long j = 0;; ++j) {
    const double term = zj / (m + j);
    const double yk = term - compensation;
    const double t = sum + yk;
    compensation = (t - sum) - yk;
    sum = t;
    // Remaining tail is bounded by term * z / (1 - z).
    if (term * z < 0.25 * kEps * sum * (1.0 - z)) break;
    zj *= z;
  }
  return m * sum;
}

}  // namespace wiretap
