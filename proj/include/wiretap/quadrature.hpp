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

#ifndef WIRETAP_QUADRATURE_HPP_
#define WIRETAP_QUADRATURE_HPP_

#include <cstddef>
#include <functional>

namespace wiretap {

struct QuadratureResult {
  double value;
  double error_estimate;
  double l1_norm;
  std::size_t levels;
};

// Adaptive double-exponential quadrature of f over [lower, inf). The range is
// split at lower + 1 into a tanh-sinh piece and an exp-sinh tail. Throws
// NumericalFailure (with the error estimate, L1 norm and refinement levels in
// the message) if the combined error estimate exceeds abs_tolerance.
QuadratureResult integrate_to_infinity(const std::function<double(double)>& f,
                                       double lower, double abs_tolerance);

// Same scheme on a finite interval [lower, upper] (tanh-sinh only).
QuadratureResult integrate_interval(const std::function<double(double)>& f,
                                    double lower, double upper, double abs_tolerance);

}  // namespace wiretap

#endif  // WIRETAP_QUADRATURE_HPP_
