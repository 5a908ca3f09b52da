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

#include "wiretap/quadrature.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "wiretap/errors.hpp"

namespace wiretap {
namespace {

constexpr double kRelativeTolerance = 1e-14;

void check(const QuadratureResult& r, double abs_tolerance, const char* what) {
  if (!(r.error_estimate <= abs_tolerance) || !std::isfinite(r.value)) {
    std::ostringstream msg;
    msg << what << ": quadrature did not converge (value=" << r.value
        << ", error estimate=" << r.error_estimate << ", L1=" << r.l1_norm
        << ", levels=" << r.levels << ", tolerance=" << abs_tolerance << ")";
    throw NumericalFailure(msg.str());
  }
}

QuadratureResult tanh_sinh_piece(const std::function<double(double)>& f, double lower,
                                 double upper) {
  thread_local boost::math::quadrature::tanh_sinh<double> integrator;
  QuadratureResult r{};
  r.value = integrator.integrate(f, lower, upper, kRelativeTolerance, &r.error_estimate,
                                 &r.l1_norm, &r.levels);
  return r;
}

}  // namespace

QuadratureResult integrate_interval(const std::function<double(double)>& f, double lower,
                                    double upper, double abs_tolerance) {
  QuadratureResult r = tanh_sinh_piece(f, lower, upper);
  check(r, abs_tolerance, "integrate_interval");
  return r;
}

QuadratureResult integrate_to_infinity(const std::function<double(double)>& f,
                                       double lower, double abs_tolerance) {
  thread_local boost::math::quadrature::exp_sinh<double> tail_integrator;
  const double split = lower + 1.0;
  QuadratureResult head = tanh_sinh_piece(f, lower, split);
  QuadratureResult tail{};
  tail.value = tail_integrator.integrate(f, split, std::numeric_limits<double>::infinity(),
                                         kRelativeTolerance, &tail.error_estimate,
                                         &tail.l1_norm, &tail.levels);
  QuadratureResult total{head.value + tail.value, head.error_estimate + tail.error_estimate,
                         head.l1_norm + tail.l1_norm, std::max(head.levels, tail.levels)};
  check(total, abs_tolerance, "integrate_to_infinity");
  return total;
}

}  // namespace wiretap
