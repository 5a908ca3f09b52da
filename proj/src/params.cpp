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

#include "wiretap/params.hpp"

#include <cmath>
#include <string>

#include "wiretap/errors.hpp"

namespace wiretap {

double delta_param(int bits, int n_t) {
  if (n_t < 2) throw InvalidArgument("delta_param: n_t must be >= 2");
  if (bits < 0) throw InvalidArgument("delta_param: bits must be >= 0");
  if (bits == 0) return 1.0;
  return std::exp2(-static_cast<double>(bits) / static_cast<double>(n_t - 1));
}

SystemParams::SystemParams(int n_t, int bits, double alpha, double snr_db)
    : n_t_(n_t), bits_(bits), alpha_(alpha), snr_db_(snr_db) {
  if (n_t < 2) throw InvalidArgument("n_t must be >= 2, got " + std::to_string(n_t));
  if (bits < 0) throw InvalidArgument("bits must be >= 0, got " + std::to_string(bits));
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw InvalidArgument("alpha must be positive and finite");
  }
  if (!std::isfinite(snr_db)) throw InvalidArgument("snr_db must be finite");
  delta_ = delta_param(bits, n_t);
  noise_over_power_ = std::pow(10.0, -snr_db / 10.0);
}

}  // namespace wiretap
