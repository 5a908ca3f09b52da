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

#ifndef WIRETAP_QUANTIZE_HPP_
#define WIRETAP_QUANTIZE_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "wiretap/linalg.hpp"
#include "wiretap/params.hpp"
#include "wiretap/rng.hpp"

namespace wiretap {

// Exhaustive search is O(2^bits * n_t); above this the QCA model must be used.
inline constexpr int kMaxCodebookBits = 16;

// Random vector quantization codebook: 2^bits i.i.d. isotropic unit vectors.
class Codebook {
 public:
  Codebook(std::vector<ComplexVec> codewords, int bits);

  int bits() const noexcept { return bits_; }
  std::size_t size() const noexcept { return codewords_.size(); }
  std::size_t dim() const noexcept { return codewords_.front().dim(); }
  const ComplexVec& operator[](std::size_t i) const noexcept { return codewords_[i]; }
  std::span<const ComplexVec> codewords() const noexcept { return codewords_; }

 private:
  std::vector<ComplexVec> codewords_;
  int bits_;
};

// Result of quantizing a channel h against a codebook. With the phase of
// h_hat^H h~ folded into the codeword coefficient,
//   h~ = h/||h|| = sqrt(1 - a) e^{i phi} h_hat + sqrt(a) s,
// where s is a unit vector orthogonal to h_hat.
struct QuantizationOutcome {
  std::size_t index;
  double a;
  ComplexVec s;
  ComplexVec h_hat;
  // e^{i phi}: unit-modulus phase of h_hat^H h~.
  Complex phase;
};

struct BeamMatrix {
  std::vector<ComplexVec> beams;
};

Codebook generate_codebook(int n_t, int bits, RngStream& rng);

// Picks argmax_i |h~^H c_i|^2 (lowest index on ties) and decomposes h~.
QuantizationOutcome quantize(const ComplexVec& h, const Codebook& codebook);

// One draw of ||h||^2 * a under the quantization cell approximation:
// Gamma(shape n_t - 1, scale delta).
double qca_interference_gain(const SystemParams& params, RngStream& rng);

// Zero-forcing beams: w_k is orthogonal to every h_hat_i with i != k.
// Throws DegenerateInput when some (n_t - 1)-subset is rank deficient.
BeamMatrix zfbf_beams(std::span<const ComplexVec> h_hats);

}  // namespace wiretap

#endif  // WIRETAP_QUANTIZE_HPP_
