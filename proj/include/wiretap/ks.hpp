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

#ifndef WIRETAP_KS_HPP_
#define WIRETAP_KS_HPP_

#include <cstddef>
#include <functional>
#include <span>

namespace wiretap {

// sup_x |F_n(x) - cdf(x)| for the empirical CDF F_n of `samples`.
double ks_statistic(std::span<const double> samples, const std::function<double(double)>& cdf);

// sup_x |F_n(x) - G_m(x)| between two empirical CDFs.
double ks_two_sample(std::span<const double> a, std::span<const double> b);

// Asymptotic 1% critical values: 1.63 / sqrt(n) and 1.63 sqrt((n+m)/(n m)).
double ks_critical_1pct(std::size_t n);
double ks_two_sample_critical_1pct(std::size_t n, std::size_t m);

}  // namespace wiretap

#endif  // WIRETAP_KS_HPP_
