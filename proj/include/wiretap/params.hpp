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

#ifndef WIRETAP_PARAMS_HPP_
#define WIRETAP_PARAMS_HPP_

namespace wiretap {

// delta = 2^(-bits / (n_t - 1)), the QCA scale of the quantization error.
double delta_param(int bits, int n_t);

// One scenario: n_t transmit antennas serving n_t single-antenna users, each
// feeding back `bits` bits; eavesdropper path loss `alpha` relative to the
// users. Noise variance is fixed to 1, so P = 10^(snr_db / 10).
class SystemParams {
 public:
  SystemParams(int n_t, int bits, double alpha, double snr_db);

  int n_t() const noexcept { return n_t_; }
  int bits() const noexcept { return bits_; }
  double alpha() const noexcept { return alpha_; }
  double snr_db() const noexcept { return snr_db_; }

  double delta() const noexcept { return delta_; }
  // sigma^2 / P.
  double noise_over_power() const noexcept { return noise_over_power_; }
  // sigma^2 / (alpha^2 P), the eavesdropper's effective noise term.
  double eve_noise_over_power() const noexcept {
    return noise_over_power_ / (alpha_ * alpha_);
  }

 private:
  int n_t_;
  int bits_;
  double alpha_;
  double snr_db_;
  double delta_;
  double noise_over_power_;
};

}  // namespace wiretap

#endif  // WIRETAP_PARAMS_HPP_
