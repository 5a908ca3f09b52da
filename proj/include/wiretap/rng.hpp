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

#ifndef WIRETAP_RNG_HPP_
#define WIRETAP_RNG_HPP_

#include <complex>
#include <cstdint>
#include <limits>

namespace wiretap {

// Bijective 64-bit finalizer (SplitMix64 / Stafford variant 13).
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Counter-based random stream. Draw i of stream (seed, stream_id) is
// mix64(key + (i + 1) * golden), where key is derived from both ids, so the
// output depends only on (seed, stream_id, i). Streams never share state.
//
// All distribution sampling below is written out explicitly instead of using
// <random> distributions, whose algorithms are implementation-defined.
class RngStream {
 public:
  using result_type = std::uint64_t;

  RngStream(std::uint64_t seed, std::uint64_t stream_id) noexcept
      : seed_(seed),
        stream_id_(stream_id),
        key_(mix64(seed ^ mix64(stream_id + 0x632BE59BD9B4E019ULL))) {}

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()() noexcept {
    ++counter_;
    return mix64(key_ + counter_ * 0x9E3779B97F4A7C15ULL);
  }

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t stream_id() const noexcept { return stream_id_; }
  // Number of 64-bit words drawn so far.
  std::uint64_t draws() const noexcept { return counter_; }

  // Uniform on the open interval (0, 1) with 53-bit resolution.
  double uniform() noexcept {
    return (static_cast<double>((*this)() >> 11) + 0.5) * 0x1.0p-53;
  }

  // Exp(1).
  double exponential() noexcept;

  // Circularly-symmetric CN(0, 1): real and imaginary parts each N(0, 1/2).
  std::complex<double> complex_gaussian() noexcept;

  // Gamma(shape, scale) for integer shape >= 1, as a sum of exponentials.
  double gamma_integer_shape(int shape, double scale) noexcept;

  // Beta(1, b) for b > 0 by inversion: 1 - U^(1/b).
  double beta_one(double b) noexcept;

 private:
  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace wiretap

#endif  // WIRETAP_RNG_HPP_
