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

#include "wiretap/rng.hpp"

#include <cmath>

namespace wiretap {

double RngStream::exponential() noexcept { return -std::log(uniform()); }

std::complex<double> RngStream::complex_gaussian() noexcept {
  // Marsaglia polar method: (u, v) uniform on the unit disk, s = u^2 + v^2 is
  // U(0, 1) and |z|^2 = -ln s ~ Exp(1) with a uniform phase.
  for (;;) {
    const double u = 2.0 * uniform() - 1.0;
    const double v = 2.0 * uniform() - 1.0;
    const double s = u * u + v * v;
    if (s < 1.0 && s > 0.0) {
      const double factor = std::sqrt(-std::log(s) / s);
      return {u * factor, v * factor};
    }
  }
}

double RngStream::gamma_integer_shape(int shape, double scale) noexcept {
  double sum = 0.0;
  for (int i = 0; i < shape; ++i) sum += exponential();
  return scale * sum;
}

double RngStream::beta_one(double b) noexcept {
  return 1.0 - std::pow(uniform(), 1.0 / b);
}

}  // namespace wiretap
